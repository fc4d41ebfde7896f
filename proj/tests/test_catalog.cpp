#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "groups/catalog.hpp"
#include "groups/isomorphism.hpp"
#include "groups/json_io.hpp"

#include "oracles.hpp"

using namespace groups;
namespace fs = std::filesystem;

TEST_CASE("builders validate and have the right orders") {
  CHECK(build("cyclic:1").order() == 1);
  CHECK(build("cyclic:17").order() == 17);
  CHECK(build("dihedral:9").order() == 18);
  CHECK(build("quaternion:16").order() == 16);
  CHECK(build("sym:5").order() == 120);
  CHECK(build("alt:5").order() == 60);
  CHECK(build("elem:3,2").order() == 9);
  CHECK(build("heisenberg:5").order() == 125);
  CHECK(build("sym:3*cyclic:2").order() == 12);
}

TEST_CASE("symmetric groups: class counts match partition numbers") {
  const long long expected[] = {1, 1, 2, 3, 5, 7};
  for (int n = 1; n <= 5; ++n) {
    FiniteGroup s = symmetric_group(n);
    CHECK(s.classes().count() == oracle::partition_count(n));
    CHECK(s.classes().count() == expected[n]);
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(s.order() == fact);
  }
}

TEST_CASE("extraspecial order-8 groups classify as D4 and Q8") {
  FiniteGroup plus = extraspecial_group(2, 3, '+');
  FiniteGroup minus = extraspecial_group(2, 3, '-');
  CHECK(plus.order() == 8);
  CHECK(minus.order() == 8);
  // distinguish by element-order multiset: D4 has five involutions, Q8 one
  auto involutions = [](const FiniteGroup& g) {
    int c = 0;
    for (Elt x = 0; x < g.order(); ++x)
      if (g.element_order(x) == 2) ++c;
    return c;
  };
  CHECK(involutions(plus) == 5);
  CHECK(involutions(minus) == 1);
  CHECK(isomorphic(plus, dihedral_group(4)).has_value());
  CHECK(isomorphic(minus, generalized_quaternion_group(8)).has_value());
}

TEST_CASE("extraspecial invariants: order p^(2m+1), center of order p") {
  for (auto [p, e] : {std::pair{2, 3}, {2, 5}, {2, 7}, {3, 3}}) {
    for (char sign : {'+', '-'}) {
      FiniteGroup g = extraspecial_group(p, e, sign);
      long long expect = 1;
      for (int i = 0; i < e; ++i) expect *= p;
      CHECK(g.order() == expect);
      CHECK(center(g).order() == p);
      CHECK(derived_subgroup(g).order() == p);
    }
  }
  // the two types at each order are non-isomorphic
  CHECK(!isomorphic(extraspecial_group(2, 5, '+'), extraspecial_group(2, 5, '-')).has_value());
  CHECK(!isomorphic(extraspecial_group(3, 3, '+'), extraspecial_group(3, 3, '-')).has_value());
}

TEST_CASE("heisenberg(3): order 27, exponent 3, class 2") {
  FiniteGroup h = heisenberg_group(3);
  CHECK(h.order() == 27);
  CHECK(h.exponent() == 3);
  StructureFlags f = structure_flags(h);
  CHECK(f.nilpotency_class == 2);
  CHECK(isomorphic(h, extraspecial_group(3, 3, '+')).has_value());
}

TEST_CASE("product orders and invalid semidirect actions") {
  FiniteGroup a = cyclic_group(6), b = symmetric_group(3);
  CHECK(direct_product(a, b).order() == 36);

  // central product of D4 with itself over the center has order 32
  FiniteGroup d4 = dihedral_group(4);
  Elt z = center(d4).members[1];
  FiniteGroup cp = central_product(d4, d4, {{z, z}});
  CHECK(cp.order() == 32);
  CHECK(center(cp).order() == 2);

  // semidirect action that is not a homomorphism into Aut(N)
  FiniteGroup c4 = cyclic_group(4), c2 = cyclic_group(2);
  std::vector<std::vector<Elt>> bad_action = {{0, 1, 2, 3}, {0, 2, 1, 3}};
  CHECK_THROWS_AS(semidirect_product(c4, c2, bad_action), InvalidAction);

  // inversion action gives the dihedral group
  std::vector<std::vector<Elt>> inv_action = {{0, 1, 2, 3}, {0, 3, 2, 1}};
  FiniteGroup d = semidirect_product(c4, c2, inv_action);
  CHECK(isomorphic(d, dihedral_group(4)).has_value());
}

TEST_CASE("fingerprints recompute and distinguish C4 from C2xC2") {
  FiniteGroup c4 = cyclic_group(4);
  FiniteGroup v4 = elementary_abelian_group(2, 2);
  CHECK(fingerprint_of(c4) != fingerprint_of(v4));
  CHECK(fingerprint_key(c4) != fingerprint_key(v4));
  CHECK(fingerprint_of(c4) == fingerprint_of(cyclic_group(4)));
}

TEST_CASE("load_corpus: empty dir, C2 entry, duplicate flagging") {
  const fs::path dir = fs::temp_directory_path() / "corpus_test";
  fs::remove_all(dir);
  fs::create_directories(dir);

  std::vector<CorpusIssue> issues;
  CHECK(load_corpus(dir, &issues).empty());
  CHECK(issues.empty());

  write_json_file(dir / "c2.json", group_to_table_json(cyclic_group(2)));
  auto entries = load_corpus(dir, &issues);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].name == "c2");
  CHECK(entries[0].fingerprint == Fingerprint{{1, 1}, {2, 1}});
  CHECK(!entries[0].duplicate_of);

  // an isomorphic duplicate under a different name gets flagged
  write_json_file(dir / "c2_again.json", group_to_table_json(cyclic_group(2)));
  write_json_file(dir / "c3.json", group_to_table_json(cyclic_group(3)));
  // a corrupt file is collected as an issue, not fatal
  std::ofstream(dir / "bad.json") << "{\"order\": 2}";
  entries = load_corpus(dir, &issues);
  CHECK(entries.size() == 3);
  CHECK(issues.size() == 1);
  int dups = 0;
  for (const auto& e : entries)
    if (e.duplicate_of) ++dups;
  CHECK(dups == 1);
  fs::remove_all(dir);
}

TEST_CASE("builder parse errors carry the offending token") {
  CHECK_THROWS_AS(build("frobnicate:7"), ParseError);
  CHECK_THROWS_AS(build("cyclic:x"), ParseError);
  CHECK_THROWS_AS(build("extraspecial:2,4,+"), OrderCapExceeded);
  CHECK_THROWS_AS(build("sym:9"), OrderCapExceeded);
}
