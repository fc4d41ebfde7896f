#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "groups/catalog.hpp"
#include "groups/group.hpp"

#include "oracles.hpp"

using namespace groups;

namespace {

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

}  // namespace

TEST_CASE("from_table validates the trivial group and C2") {
  FiniteGroup t = FiniteGroup::from_table({{0}});
  CHECK(t.order() == 1);
  FiniteGroup c2 = FiniteGroup::from_table({{0, 1}, {1, 0}});
  CHECK(c2.order() == 2);
  CHECK(c2.inv(1) == 1);
  CHECK(c2.element_order(1) == 2);
}

TEST_CASE("from_table rejects tables with a non-associative triple") {
  // Swap an intercalate inside the C6 table: still a Latin square with the
  // identity row/column intact, but no longer associative.
  auto t = cyclic_table(6);
  std::swap(t[1][1], t[1][4]);
  std::swap(t[4][1], t[4][4]);
  CHECK(t[1][1] == 5);
  CHECK_THROWS_AS(FiniteGroup::from_table(t), NotAssociative);
}

TEST_CASE("from_table rejects non-Latin tables and misplaced identity") {
  auto t = cyclic_table(4);
  t[2][3] = t[2][0];
  CHECK_THROWS_AS(FiniteGroup::from_table(t), NotLatinSquare);

  // A valid Latin square whose row 0 is not the identity.
  auto shifted = cyclic_table(3);
  std::swap(shifted[0], shifted[1]);
  std::swap(shifted[0], shifted[2]);  // rows permuted: row 0 = old row 1
  CHECK_THROWS_AS(FiniteGroup::from_table(shifted), NoIdentity);
}

TEST_CASE("conjugacy classes: C5 singletons, Sym(3) and Q8 sizes") {
  FiniteGroup c5 = cyclic_group(5);
  CHECK(c5.classes().count() == 5);
  for (int s : c5.classes().sizes) CHECK(s == 1);

  FiniteGroup s3 = symmetric_group(3);
  std::vector<int> sizes = s3.classes().sizes;
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == oracle::class_sizes_brute(s3));
  CHECK(sizes == std::vector<int>{1, 2, 3});

  FiniteGroup q8 = generalized_quaternion_group(8);
  sizes = q8.classes().sizes;
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == oracle::class_sizes_brute(q8));
  CHECK(sizes == std::vector<int>{1, 1, 2, 2, 2});
}

TEST_CASE("class equation holds on assorted groups") {
  for (const char* spec : {"cyclic:12", "sym:4", "dihedral:6", "quaternion:16",
                           "heisenberg:3", "alt:4"}) {
    FiniteGroup g = build(spec);
    const auto& cp = g.classes();
    CHECK(std::accumulate(cp.sizes.begin(), cp.sizes.end(), 0) == g.order());
    for (int s : cp.sizes) CHECK(g.order() % s == 0);
    CHECK(cp.sizes[cp.class_of[0]] == 1);
    for (int c = 0; c < cp.count(); ++c) CHECK(cp.class_of[cp.reps[c]] == c);
  }
}

TEST_CASE("center: cyclic groups, Sym(3), Q8") {
  CHECK(center(cyclic_group(7)).order() == 7);
  CHECK(center(symmetric_group(3)).order() == 1);
  FiniteGroup q8 = generalized_quaternion_group(8);
  Subgroup z = center(q8);
  CHECK(z.order() == 2);
  CHECK(is_normal(q8, z));
}

TEST_CASE("subgroup_generated: empty seeds, order-2 element, full group") {
  FiniteGroup c6 = cyclic_group(6);
  CHECK(subgroup_generated(c6, std::vector<Elt>{}).order() == 1);
  CHECK(subgroup_generated(c6, std::vector<Elt>{3}).order() == 2);

  FiniteGroup s3 = symmetric_group(3);
  Elt two_cycle = -1, three_cycle = -1;
  for (Elt x = 0; x < 6; ++x) {
    if (s3.element_order(x) == 2) two_cycle = x;
    if (s3.element_order(x) == 3) three_cycle = x;
  }
  CHECK(subgroup_generated(s3, std::vector<Elt>{two_cycle, three_cycle}).order() == 6);
}

TEST_CASE("quotient: G/G, G/1, Q8 by its center") {
  FiniteGroup s3 = symmetric_group(3);
  CHECK(quotient(s3, whole_group(s3)).group.order() == 1);

  QuotientResult by_trivial = quotient(s3, subgroup_generated(s3, std::vector<Elt>{}));
  CHECK(by_trivial.group.order() == 6);
  for (Elt x = 0; x < 6; ++x) CHECK(by_trivial.projection[x] == x);

  FiniteGroup q8 = generalized_quaternion_group(8);
  QuotientResult q = quotient(q8, center(q8));
  CHECK(q.group.order() == 4);
  for (Elt x = 1; x < 4; ++x) CHECK(q.group.element_order(x) == 2);  // C2 x C2

  // Non-normal subgroup must be rejected.
  Elt refl = -1;
  for (Elt x = 0; x < 6; ++x)
    if (s3.element_order(x) == 2) refl = x;
  CHECK_THROWS_AS(quotient(s3, subgroup_generated(s3, std::vector<Elt>{refl})), NotNormal);
}

TEST_CASE("quotient order multiplies back") {
  for (const char* spec : {"sym:4", "dihedral:8", "quaternion:32"}) {
    FiniteGroup g = build(spec);
    Subgroup d = derived_subgroup(g);
    QuotientResult q = quotient(g, d);
    CHECK(q.group.order() * d.order() == g.order());
  }
}

TEST_CASE("structure flags: Sym(3), D4, C6") {
  StructureFlags s3 = structure_flags(symmetric_group(3));
  CHECK(s3.is_solvable);
  CHECK(!s3.nilpotency_class.has_value());
  CHECK(s3.derived_length == 2);
  CHECK(!s3.is_abelian);

  StructureFlags d4 = structure_flags(dihedral_group(4));
  CHECK(d4.nilpotency_class == 2);
  CHECK(d4.is_solvable);

  StructureFlags c6 = structure_flags(cyclic_group(6));
  CHECK(c6.is_abelian);
  REQUIRE(c6.abelian_invariants.has_value());
  CHECK(c6.abelian_invariants->divisors == std::vector<long long>{6});
}

TEST_CASE("abelian invariants: divisor chains") {
  CHECK(abelian_invariants(direct_product(cyclic_group(2), cyclic_group(2))).divisors ==
        std::vector<long long>{2, 2});
  CHECK(abelian_invariants(direct_product(cyclic_group(4), cyclic_group(6))).divisors ==
        std::vector<long long>{2, 12});
  CHECK(abelian_invariants(direct_product(cyclic_group(3), cyclic_group(5))).divisors ==
        std::vector<long long>{15});
  CHECK(abelian_invariants(FiniteGroup::trivial()).divisors.empty());
  // product of divisors = order, chain divides
  FiniteGroup g = build("cyclic:8*cyclic:12*cyclic:2");
  auto s = abelian_invariants(g);
  long long prod = 1;
  for (size_t i = 0; i < s.divisors.size(); ++i) {
    prod *= s.divisors[i];
    if (i) CHECK(s.divisors[i] % s.divisors[i - 1] == 0);
  }
  CHECK(prod == g.order());
}

TEST_CASE("generating sequences are small and generate") {
  for (const char* spec : {"sym:4", "quaternion:16", "elem:2,4", "cyclic:30"}) {
    FiniteGroup g = build(spec);
    const std::vector<Elt> gens = generating_sequence(g);
    CHECK(subgroup_generated(g, gens).order() == g.order());
    int lg = 0, n = g.order();
    while (n > 1) {
      n /= 2;
      ++lg;
    }
    CHECK(static_cast<int>(gens.size()) <= std::max(1, lg));
  }
}

TEST_CASE("subgroup_as_group relabels into a valid group") {
  FiniteGroup s4 = symmetric_group(4);
  Subgroup d = derived_subgroup(s4);  // A4
  ExtractedSubgroup ex = subgroup_as_group(d);
  CHECK(ex.group.order() == 12);
  CHECK(ex.parent_of.size() == 12);
  CHECK(structure_flags(ex.group).is_solvable);
}
