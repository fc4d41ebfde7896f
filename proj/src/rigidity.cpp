#include "groups/rigidity.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "groups/isomorphism.hpp"

namespace groups {

bool AutomorphismGroup::contains(const std::vector<Elt>& images) const {
  return std::binary_search(elements.begin(), elements.end(), images);
}

bool AutomorphismGroup::is_closed() const {
  for (const auto& a : elements) {
    if (!contains(invert_automorphism(a))) return false;
    for (const auto& b : elements)
      if (!contains(compose_automorphisms(a, b))) return false;
  }
  return !elements.empty() && elements.front() == invert_automorphism(elements.front());
}

std::vector<Elt> compose_automorphisms(const std::vector<Elt>& a, const std::vector<Elt>& b) {
  std::vector<Elt> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

std::vector<Elt> invert_automorphism(const std::vector<Elt>& a) {
  std::vector<Elt> inv(a.size());
  for (size_t i = 0; i < a.size(); ++i) inv[a[i]] = static_cast<Elt>(i);
  return inv;
}

AutomorphismGroup inner_automorphisms(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<std::vector<Elt>> elems;
  for (Elt c = 0; c < n; ++c) {
    std::vector<Elt> im(n);
    for (Elt x = 0; x < n; ++x) im[x] = g.conj(c, x);
    elems.push_back(std::move(im));
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  assert(static_cast<int>(elems.size()) == n / center(g).order());
  return AutomorphismGroup{&g, std::move(elems)};
}

AutomorphismGroup automorphism_group(const FiniteGroup& g, const SearchBudget& budget) {
  return AutomorphismGroup{&g, all_automorphisms(g, budget)};
}

namespace {

bool class_preserving(const FiniteGroup& g, const std::vector<Elt>& images) {
  const auto& cls = g.classes().class_of;
  for (Elt x = 0; x < g.order(); ++x)
    if (cls[images[x]] != cls[x]) return false;
  return true;
}

// Search for homomorphisms whose generator images stay inside the
// generator's conjugacy class.
std::vector<std::vector<Elt>> class_restricted_homs(const FiniteGroup& g, bool injective,
                                                    const SearchBudget& budget) {
  const std::vector<Elt> gens = generating_sequence(g);
  std::vector<std::vector<Elt>> cands(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    const int cid = g.classes().class_of[gens[k]];
    for (Elt c = 0; c < g.order(); ++c)
      if (g.classes().class_of[c] == cid) cands[k].push_back(c);
  }
  HomSearchOptions opt;
  opt.injective = injective;
  opt.node_budget = budget.nodes;
  return collect_homomorphisms(g, g, gens, cands, opt);
}

}  // namespace

AutomorphismGroup class_preserving_automorphisms(const FiniteGroup& g,
                                                 const SearchBudget& budget) {
  std::vector<std::vector<Elt>> homs = class_restricted_homs(g, /*injective=*/true, budget);
  std::vector<std::vector<Elt>> keep;
  for (auto& h : homs)
    if (class_preserving(g, h)) keep.push_back(std::move(h));
  AutomorphismGroup out{&g, std::move(keep)};
  // Inn(G) <= Aut_c(G) always.
  const AutomorphismGroup inn = inner_automorphisms(g);
  for (const auto& e : inn.elements) {
    (void)e;
    assert(out.contains(e));
  }
  return out;
}

std::vector<std::vector<Elt>> locally_inner_endomorphisms(const FiniteGroup& g,
                                                          const SearchBudget& budget) {
  if (g.order() > budget.endo_max_order)
    throw BudgetExceeded("endomorphism enumeration capped at order " +
                         std::to_string(budget.endo_max_order));
  std::vector<std::vector<Elt>> homs = class_restricted_homs(g, /*injective=*/false, budget);
  std::vector<std::vector<Elt>> keep;
  for (auto& h : homs)
    if (class_preserving(g, h)) keep.push_back(std::move(h));
  return keep;
}

ShaReport quotient_report(const FiniteGroup& g, const AutomorphismGroup& inn,
                          const std::vector<std::vector<Elt>>& subgroup_of_aut) {
  assert(subgroup_of_aut.size() % inn.elements.size() == 0);
  std::map<std::vector<Elt>, int> index;
  for (size_t i = 0; i < subgroup_of_aut.size(); ++i)
    index.emplace(subgroup_of_aut[i], static_cast<int>(i));

  // Left cosets phi * Inn; each is keyed by its lex-least member.
  const int total = static_cast<int>(subgroup_of_aut.size());
  std::vector<int> coset_of(total, -1);
  std::vector<std::vector<Elt>> reps;
  for (int i = 0; i < total; ++i) {
    if (coset_of[i] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    std::vector<Elt> best = subgroup_of_aut[i];
    for (const auto& inner : inn.elements) {
      const std::vector<Elt> member = compose_automorphisms(subgroup_of_aut[i], inner);
      auto it = index.find(member);
      assert(it != index.end());
      coset_of[it->second] = id;
      if (member < best) best = member;
    }
    reps.push_back(std::move(best));
  }

  // Identity's coset goes first; the rest stay in rep order (the sweep above
  // visits sorted elements, so reps are already lex-ascending).
  const int q = static_cast<int>(reps.size());
  std::vector<Elt> identity(g.order());
  for (Elt x = 0; x < g.order(); ++x) identity[x] = x;
  int id_coset = coset_of[index.at(identity)];
  if (id_coset != 0) {
    std::swap(reps[0], reps[id_coset]);
    for (int& c : coset_of) {
      if (c == 0)
        c = id_coset;
      else if (c == id_coset)
        c = 0;
    }
    id_coset = 0;
  }

  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      const std::vector<Elt> prod = compose_automorphisms(reps[i], reps[j]);
      auto it = index.find(prod);
      assert(it != index.end());
      table[i][j] = coset_of[it->second];
    }

  ShaReport rep;
  rep.order = q;
  rep.is_trivial = q == 1;
  rep.quotient_group = FiniteGroup::from_table(std::move(table));
  const StructureFlags flags = structure_flags(*rep.quotient_group);
  rep.is_abelian = flags.is_abelian;
  if (flags.abelian_invariants) rep.abelian_structure = *flags.abelian_invariants;
  rep.is_solvable = flags.is_solvable;
  rep.nilpotency_class = flags.nilpotency_class;
  rep.derived_length = flags.derived_length;
  if (q > 1) {
    // subgroup_of_aut is sorted, so the first non-inner entry is lex-least.
    for (const auto& e : subgroup_of_aut) {
      if (!inn.contains(e)) {
        rep.witness = e;
        break;
      }
    }
  }
  return rep;
}

ShaReport sha(const FiniteGroup& g, const SearchBudget& budget) {
  const AutomorphismGroup autc = class_preserving_automorphisms(g, budget);
  const AutomorphismGroup inn = inner_automorphisms(g);
  return quotient_report(g, inn, autc.elements);
}

bool a_rigid(const FiniteGroup& g, const SearchBudget& budget) {
  return sha(g, budget).is_trivial;
}

bool b_rigid(const FiniteGroup& g, const SearchBudget& budget) {
  const AutomorphismGroup autc = class_preserving_automorphisms(g, budget);
  std::vector<std::vector<Elt>> endos = locally_inner_endomorphisms(g, budget);
  return endos == autc.elements;
}

bool sha_rigid(const FiniteGroup& g, const SearchBudget& budget) {
  return a_rigid(g, budget) && b_rigid(g, budget);
}

bool is_cocycle(const FiniteGroup& g, const std::vector<Elt>& values) {
  const int n = g.order();
  if (static_cast<int>(values.size()) != n || values[0] != 0) return false;
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      if (values[g.mul(x, y)] != g.mul(values[x], g.conj(x, values[y]))) return false;
  return true;
}

GroupMap cocycle_to_endo(const Cocycle& f) {
  const FiniteGroup& g = *f.group;
  if (!is_cocycle(g, f.values)) throw NotACocycle("values do not satisfy the cocycle identity");
  std::vector<Elt> images(g.order());
  for (Elt x = 0; x < g.order(); ++x) images[x] = g.mul(f.values[x], x);
  return make_group_map(g, g, std::move(images));
}

Cocycle endo_to_cocycle(const GroupMap& e) {
  const FiniteGroup& g = *e.domain;
  if (e.domain != e.codomain || !is_homomorphism(g, g, e.images))
    throw NotAnEndomorphism("map is not an endomorphism of one group");
  std::vector<Elt> values(g.order());
  for (Elt x = 0; x < g.order(); ++x) values[x] = g.mul(e.images[x], g.inv(x));
  assert(is_cocycle(g, values));
  return Cocycle{&g, std::move(values)};
}

std::optional<Elt> coboundary_conjugator(const Cocycle& f) {
  const FiniteGroup& g = *f.group;
  for (Elt a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (Elt x = 0; x < g.order() && ok; ++x)
      ok = f.values[x] == g.mul(g.conj(a, x), g.inv(x));
    if (ok) return a;
  }
  return std::nullopt;
}

}  // namespace groups
