#include "groups/family.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "groups/isomorphism.hpp"

namespace groups {

FamilyKind parse_family_kind(const std::string& s) {
  if (s == "cyclic") return FamilyKind::Cyclic;
  if (s == "abelian") return FamilyKind::Abelian;
  if (s == "bicyclic") return FamilyKind::Bicyclic;
  if (s == "nilpotent") return FamilyKind::Nilpotent;
  if (s == "sylow") return FamilyKind::Sylow;
  if (s == "custom") return FamilyKind::Custom;
  throw ParseError(s, "unknown family kind");
}

std::string family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::Cyclic: return "cyclic";
    case FamilyKind::Abelian: return "abelian";
    case FamilyKind::Bicyclic: return "bicyclic";
    case FamilyKind::Nilpotent: return "nilpotent";
    case FamilyKind::Sylow: return "sylow";
    case FamilyKind::Custom: return "custom";
  }
  return "?";
}

namespace {

std::vector<int> primes_dividing(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

// G itself belongs to the family: the kernel condition degenerates to
// "phi inner" without enumerating anything.
bool whole_group_in_family(const FiniteGroup& g, const FamilySpec& family) {
  switch (family.kind) {
    case FamilyKind::Cyclic: {
      for (Elt x = 0; x < g.order(); ++x)
        if (g.element_order(x) == g.order()) return true;
      return false;
    }
    case FamilyKind::Abelian:
      return g.is_abelian();
    case FamilyKind::Nilpotent:
      return structure_flags(g).nilpotency_class.has_value();
    case FamilyKind::Sylow: {
      const auto ps = primes_dividing(g.order());
      return g.order() == 1 || ps.size() == 1;
    }
    case FamilyKind::Bicyclic:
    case FamilyKind::Custom:
      return false;  // resolved by enumeration
  }
  return false;
}

std::vector<Subgroup> family_members(const FiniteGroup& g, const FamilySpec& family,
                                     const SearchBudget& budget) {
  SubgroupEnumOptions opt;
  opt.up_to_conjugacy = true;
  opt.budget = budget;
  switch (family.kind) {
    case FamilyKind::Cyclic:
      return enumerate_subgroups(g, SubgroupKind::Cyclic, opt);
    case FamilyKind::Abelian:
      return enumerate_subgroups(g, SubgroupKind::Abelian, opt);
    case FamilyKind::Bicyclic:
      return enumerate_subgroups(g, SubgroupKind::Bicyclic, opt);
    case FamilyKind::Nilpotent:
      return enumerate_subgroups(g, SubgroupKind::Nilpotent, opt);
    case FamilyKind::Sylow: {
      std::vector<Subgroup> all;
      for (int p : primes_dividing(g.order())) {
        opt.sylow_p = p;
        for (auto& s : enumerate_subgroups(g, SubgroupKind::Sylow, opt))
          all.push_back(std::move(s));
      }
      return all;
    }
    case FamilyKind::Custom: {
      if (family.custom_members.empty())
        throw EmptyFamily("custom family has no members");
      for (const Subgroup& s : family.custom_members)
        if (s.parent != &g) throw GroupError("custom family member of a different group");
      return conjugacy_representatives(g, family.custom_members);
    }
  }
  throw GroupError("unknown family kind");
}

// Single conjugator scan: some a with phi(y) = a y a^-1 for all y in sub.
bool inner_on_subgroup(const FiniteGroup& g, const std::vector<Elt>& phi,
                       const Subgroup& sub) {
  for (Elt a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (Elt y : sub.members) {
      if (phi[y] != g.conj(a, y)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::vector<std::vector<Elt>> family_locally_inner_automorphisms(
    const FiniteGroup& g, const FamilySpec& family, const SearchBudget& budget) {
  const AutomorphismGroup inn = inner_automorphisms(g);
  if (whole_group_in_family(g, family)) return inn.elements;

  const std::vector<Subgroup> members = family_members(g, family, budget);

  // Union of the family: every automorphism in the kernel is locally inner
  // there, so generators drawn from the union get class-restricted images.
  std::vector<char> in_union(g.order(), 0);
  for (const Subgroup& s : members)
    for (Elt y : s.members)
      for (Elt c = 0; c < g.order(); ++c) in_union[g.conj(c, y)] = 1;
  std::vector<Elt> pool;
  for (Elt x = 0; x < g.order(); ++x)
    if (in_union[x]) pool.push_back(x);

  const std::vector<Elt> gens = generating_sequence_from(g, pool);
  std::vector<std::vector<Elt>> cands(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    const Elt x = gens[k];
    if (in_union[x]) {
      const int cid = g.classes().class_of[x];
      for (Elt c = 0; c < g.order(); ++c)
        if (g.classes().class_of[c] == cid) cands[k].push_back(c);
    } else {
      for (Elt c = 0; c < g.order(); ++c)
        if (g.element_order(c) == g.element_order(x) &&
            g.classes().sizes[g.classes().class_of[c]] ==
                g.classes().sizes[g.classes().class_of[x]])
          cands[k].push_back(c);
    }
  }
  HomSearchOptions opt;
  opt.injective = true;
  opt.node_budget = budget.nodes;
  std::vector<std::vector<Elt>> autos = collect_homomorphisms(g, g, gens, cands, opt);

  std::vector<std::vector<Elt>> keep;
  for (auto& phi : autos) {
    bool ok = true;
    for (const Subgroup& s : members) {
      if (!inner_on_subgroup(g, phi, s)) {
        ok = false;
        break;
      }
    }
    if (ok) keep.push_back(std::move(phi));
  }
  for (const auto& e : inn.elements) {
    (void)e;
    assert(std::binary_search(keep.begin(), keep.end(), e));
  }
  return keep;
}

ShaReport sha_family(const FiniteGroup& g, const FamilySpec& family,
                     const SearchBudget& budget) {
  const AutomorphismGroup inn = inner_automorphisms(g);
  return quotient_report(g, inn, family_locally_inner_automorphisms(g, family, budget));
}

FamilyChainReport family_chain_check(const FiniteGroup& g, const SearchBudget& budget) {
  FamilyChainReport out;
  const AutomorphismGroup inn = inner_automorphisms(g);
  const auto cyc = family_locally_inner_automorphisms(g, {FamilyKind::Cyclic, {}}, budget);
  const auto abe = family_locally_inner_automorphisms(g, {FamilyKind::Abelian, {}}, budget);
  const auto nil = family_locally_inner_automorphisms(g, {FamilyKind::Nilpotent, {}}, budget);
  out.sha_cyclic = quotient_report(g, inn, cyc);
  out.sha_abelian = quotient_report(g, inn, abe);
  out.sha_nilpotent = quotient_report(g, inn, nil);
  out.chain_holds = std::includes(abe.begin(), abe.end(), nil.begin(), nil.end()) &&
                    std::includes(cyc.begin(), cyc.end(), abe.begin(), abe.end());
  return out;
}

}  // namespace groups
