#include <doctest.h>

#include <algorithm>
#include <set>

#include "groups/catalog.hpp"
#include "groups/subgroups.hpp"

using namespace groups;

TEST_CASE("cyclic subgroups: C_p has two, dedupe is by generated set") {
  FiniteGroup c7 = cyclic_group(7);
  auto subs = enumerate_subgroups(c7, SubgroupKind::Cyclic);
  CHECK(subs.size() == 2);
  CHECK(subs.front().order() == 1);
  CHECK(subs.back().order() == 7);

  // one subgroup per distinct <x>; union covers G
  FiniteGroup s4 = symmetric_group(4);
  auto cyc = enumerate_subgroups(s4, SubgroupKind::Cyclic);
  std::set<std::vector<Elt>> seen;
  std::set<Elt> covered;
  for (const auto& h : cyc) {
    CHECK(seen.insert(h.members).second);
    for (Elt x : h.members) covered.insert(x);
    // really cyclic: some member generates it
    bool generated = false;
    for (Elt x : h.members)
      generated |= subgroup_generated(s4, std::vector<Elt>{x}).members == h.members;
    CHECK(generated);
  }
  CHECK(static_cast<int>(covered.size()) == s4.order());
}

TEST_CASE("sylow subgroups of Sym(3): three C2, one class") {
  FiniteGroup s3 = symmetric_group(3);
  SubgroupEnumOptions opt;
  opt.sylow_p = 2;
  auto all = enumerate_subgroups(s3, SubgroupKind::Sylow, opt);
  CHECK(all.size() == 3);
  for (const auto& h : all) CHECK(h.order() == 2);
  opt.up_to_conjugacy = true;
  CHECK(enumerate_subgroups(s3, SubgroupKind::Sylow, opt).size() == 1);

  opt.sylow_p = 3;
  opt.up_to_conjugacy = false;
  auto p3 = enumerate_subgroups(s3, SubgroupKind::Sylow, opt);
  CHECK(p3.size() == 1);
  CHECK(p3[0].order() == 3);
}

TEST_CASE("sylow subgroup orders are the full prime power") {
  FiniteGroup s4 = symmetric_group(4);
  SubgroupEnumOptions opt;
  opt.sylow_p = 2;
  for (const auto& h : enumerate_subgroups(s4, SubgroupKind::Sylow, opt))
    CHECK(h.order() == 8);
  opt.sylow_p = 3;
  auto threes = enumerate_subgroups(s4, SubgroupKind::Sylow, opt);
  CHECK(threes.size() == 4);
  for (const auto& h : threes) CHECK(h.order() == 3);
}

TEST_CASE("bicyclic subgroups of an abelian group = 2-generated ones") {
  FiniteGroup g = direct_product(cyclic_group(4), cyclic_group(2));
  auto bic = enumerate_subgroups(g, SubgroupKind::Bicyclic);
  std::set<std::vector<Elt>> two_generated;
  for (Elt x = 0; x < g.order(); ++x)
    for (Elt y = 0; y < g.order(); ++y)
      two_generated.insert(subgroup_generated(g, std::vector<Elt>{x, y}).members);
  CHECK(bic.size() == two_generated.size());
  for (const auto& h : bic) CHECK(two_generated.count(h.members) == 1);
  // here every subgroup is abelian and 2-generated
  auto abelian = enumerate_subgroups(g, SubgroupKind::Abelian);
  CHECK(abelian.size() == bic.size());
}

TEST_CASE("all subgroups of Q8 and the nilpotent filter") {
  FiniteGroup q8 = generalized_quaternion_group(8);
  auto all = enumerate_subgroups(q8, SubgroupKind::All);
  CHECK(all.size() == 6);  // 1, Z, <i>, <j>, <k>, Q8
  auto nil = enumerate_subgroups(q8, SubgroupKind::Nilpotent);
  CHECK(nil.size() == 6);  // all subgroups of a p-group are nilpotent

  FiniteGroup s3 = symmetric_group(3);
  auto s3all = enumerate_subgroups(s3, SubgroupKind::All);
  CHECK(s3all.size() == 6);  // 1, three C2, C3, S3
  auto s3nil = enumerate_subgroups(s3, SubgroupKind::Nilpotent);
  CHECK(s3nil.size() == 5);  // S3 itself is not nilpotent
}

TEST_CASE("up_to_conjugacy picks lex-least representatives") {
  FiniteGroup s3 = symmetric_group(3);
  SubgroupEnumOptions opt;
  opt.up_to_conjugacy = true;
  auto classes = enumerate_subgroups(s3, SubgroupKind::All, opt);
  CHECK(classes.size() == 4);  // 1, C2, C3, S3
  // conjugating any representative stays within its class set
  for (const auto& h : classes)
    for (Elt c = 0; c < s3.order(); ++c) {
      std::vector<Elt> im;
      for (Elt x : h.members) im.push_back(s3.conj(c, x));
      std::sort(im.begin(), im.end());
      CHECK(!(im < h.members));  // rep is lex-least in its orbit
    }
}

TEST_CASE("subgroup lattice enumeration respects the order cap") {
  SubgroupEnumOptions opt;
  opt.budget.subgroup_max_order = 16;
  CHECK_THROWS_AS(enumerate_subgroups(symmetric_group(4), SubgroupKind::All, opt),
                  BudgetExceeded);
}
