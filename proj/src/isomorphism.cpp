#include "groups/isomorphism.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace groups {

namespace {

class HomSearcher {
 public:
  HomSearcher(const FiniteGroup& dom, const FiniteGroup& cod,
              const std::vector<Elt>& gens, const std::vector<std::vector<Elt>>& cands,
              const HomSearchOptions& opt,
              const std::function<bool(const std::vector<Elt>&)>& visit)
      : dom_(dom), cod_(cod), gens_(gens), cands_(cands), opt_(opt), visit_(visit) {
    img_.assign(dom.order(), -1);
    used_.assign(cod.order(), 0);
    img_[0] = 0;
    used_[0] = 1;
    defined_.push_back(0);
  }

  void run() { dfs(0); }

 private:
  bool step() {
    if (++steps_ > opt_.node_budget)
      throw BudgetExceeded("homomorphism search exceeded node budget");
    return true;
  }

  // Assign img[x] = v if consistent; records new definitions on defined_.
  bool define(Elt x, Elt v) {
    if (img_[x] >= 0) return img_[x] == v;
    if (opt_.injective && used_[v]) return false;
    img_[x] = v;
    used_[v] += 1;
    defined_.push_back(x);
    return true;
  }

  // Close the partial map over products. Every pair of defined elements gets
  // its product checked exactly once across the whole search path, so a full
  // map needs no separate verification pass. Closure work is polynomial in
  // the group order and is not metered; the node budget counts candidate
  // assignments, where the exponential blowup lives.
  bool close_from(size_t first_new) {
    for (size_t i = first_new; i < defined_.size(); ++i) {
      const Elt x = defined_[i];
      const Elt fx = img_[x];
      for (size_t j = 0; j < defined_.size(); ++j) {
        const Elt y = defined_[j];
        const Elt fy = img_[y];
        if (!define(dom_.mul(x, y), cod_.mul(fx, fy))) return false;
        if (!define(dom_.mul(y, x), cod_.mul(fy, fx))) return false;
      }
    }
    return true;
  }

  void undo_to(size_t mark) {
    while (defined_.size() > mark) {
      const Elt x = defined_.back();
      defined_.pop_back();
      used_[img_[x]] -= 1;
      img_[x] = -1;
    }
  }

  bool dfs(size_t depth) {
    if (depth == gens_.size()) {
      assert(static_cast<int>(defined_.size()) == dom_.order());
      return visit_(img_);
    }
    const Elt g = gens_[depth];
    for (Elt c : cands_[depth]) {
      step();
      const size_t mark = defined_.size();
      if (define(g, c) && close_from(mark)) {
        if (!dfs(depth + 1)) {
          undo_to(mark);
          return false;
        }
      }
      undo_to(mark);
    }
    return true;
  }

  const FiniteGroup& dom_;
  const FiniteGroup& cod_;
  const std::vector<Elt>& gens_;
  const std::vector<std::vector<Elt>>& cands_;
  const HomSearchOptions& opt_;
  const std::function<bool(const std::vector<Elt>&)>& visit_;

  std::vector<Elt> img_;
  std::vector<int> used_;
  std::vector<Elt> defined_;
  std::uint64_t steps_ = 0;
};

}  // namespace

void search_homomorphisms(const FiniteGroup& dom, const FiniteGroup& cod,
                          const std::vector<Elt>& gens,
                          const std::vector<std::vector<Elt>>& candidates,
                          const HomSearchOptions& opt,
                          const std::function<bool(const std::vector<Elt>&)>& visit) {
  assert(gens.size() == candidates.size());
  HomSearcher(dom, cod, gens, candidates, opt, visit).run();
}

std::vector<std::vector<Elt>> collect_homomorphisms(
    const FiniteGroup& dom, const FiniteGroup& cod, const std::vector<Elt>& gens,
    const std::vector<std::vector<Elt>>& candidates, const HomSearchOptions& opt) {
  std::vector<std::vector<Elt>> out;
  search_homomorphisms(dom, cod, gens, candidates, opt, [&](const std::vector<Elt>& img) {
    out.push_back(img);
    return !opt.stop_at_first;
  });
  std::sort(out.begin(), out.end());
  return out;
}

IsoInvariants iso_invariants(const FiniteGroup& g) {
  IsoInvariants inv;
  inv.order = g.order();
  inv.center_order = center(g).order();
  inv.derived_order = derived_subgroup(g).order();
  inv.exponent = g.exponent();
  inv.class_count = g.classes().count();
  for (Elt x = 0; x < g.order(); ++x)
    inv.order_class_multiset.emplace_back(g.element_order(x),
                                          g.classes().sizes[g.classes().class_of[x]]);
  std::sort(inv.order_class_multiset.begin(), inv.order_class_multiset.end());
  return inv;
}

std::optional<GroupMap> isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                                   const SearchBudget& budget) {
  if (a.order() != b.order()) return std::nullopt;
  if (!(iso_invariants(a) == iso_invariants(b))) return std::nullopt;

  const std::vector<Elt> gens = generating_sequence(a);
  std::vector<std::vector<Elt>> cands(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    const Elt g = gens[k];
    const int go = a.element_order(g);
    const int gc = a.classes().sizes[a.classes().class_of[g]];
    for (Elt c = 0; c < b.order(); ++c)
      if (b.element_order(c) == go && b.classes().sizes[b.classes().class_of[c]] == gc)
        cands[k].push_back(c);
    if (cands[k].empty()) return std::nullopt;
  }

  HomSearchOptions opt;
  opt.injective = true;
  opt.stop_at_first = true;
  opt.node_budget = budget.nodes;
  std::optional<GroupMap> found;
  search_homomorphisms(a, b, gens, cands, opt, [&](const std::vector<Elt>& img) {
    found = GroupMap{&a, &b, img};
    return false;
  });
  return found;
}

std::vector<std::vector<Elt>> all_automorphisms(const FiniteGroup& g,
                                                const SearchBudget& budget) {
  const std::vector<Elt> gens = generating_sequence(g);
  std::vector<std::vector<Elt>> cands(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    const Elt x = gens[k];
    const int xo = g.element_order(x);
    const int xc = g.classes().sizes[g.classes().class_of[x]];
    for (Elt c = 0; c < g.order(); ++c)
      if (g.element_order(c) == xo && g.classes().sizes[g.classes().class_of[c]] == xc)
        cands[k].push_back(c);
  }
  HomSearchOptions opt;
  opt.injective = true;
  opt.node_budget = budget.nodes;
  return collect_homomorphisms(g, g, gens, cands, opt);
}

namespace {

// Commutator table of G on central-quotient cosets: the commutator of two
// cosets of Z(G) is a well-defined element of [G, G].
struct IsoclinismData {
  FiniteGroup central_quotient;
  FiniteGroup derived;
  std::vector<int> comm;  // q x q -> derived element index
  int q = 0;

  IsoclinismData(FiniteGroup cq, FiniteGroup der)
      : central_quotient(std::move(cq)), derived(std::move(der)) {}
};

IsoclinismData isoclinism_data(const FiniteGroup& g) {
  const Subgroup z = center(g);
  QuotientResult qr = quotient(g, z);
  const Subgroup der = derived_subgroup(g);
  ExtractedSubgroup ex = subgroup_as_group(der);

  IsoclinismData d(std::move(qr.group), std::move(ex.group));
  d.q = d.central_quotient.order();
  std::vector<Elt> rep(d.q, -1);
  for (Elt x = 0; x < g.order(); ++x)
    if (rep[qr.projection[x]] < 0) rep[qr.projection[x]] = x;

  std::vector<int> der_index(g.order(), -1);
  for (size_t i = 0; i < ex.parent_of.size(); ++i) der_index[ex.parent_of[i]] = static_cast<int>(i);

  d.comm.assign(static_cast<size_t>(d.q) * d.q, -1);
  for (int u = 0; u < d.q; ++u)
    for (int v = 0; v < d.q; ++v) {
      const Elt c = g.commutator(rep[u], rep[v]);
      assert(der_index[c] >= 0);
      d.comm[static_cast<size_t>(u) * d.q + v] = der_index[c];
    }
  return d;
}

// Extends a partial assignment on generators of the derived subgroup
// (the commutator values) to a full map and checks it is an isomorphism.
bool extend_commutator_map(const FiniteGroup& da, const FiniteGroup& db,
                           const std::vector<Elt>& partial) {
  std::vector<Elt> img(da.order(), -1);
  std::vector<char> used(db.order(), 0);
  std::vector<Elt> defined;
  img[0] = 0;
  used[0] = 1;
  defined.push_back(0);
  auto define = [&](Elt x, Elt v) {
    if (img[x] >= 0) return img[x] == v;
    if (used[v]) return false;
    img[x] = v;
    used[v] = 1;
    defined.push_back(x);
    return true;
  };
  for (Elt x = 0; x < da.order(); ++x)
    if (partial[x] >= 0 && !define(x, partial[x])) return false;
  for (size_t i = 0; i < defined.size(); ++i) {
    const Elt x = defined[i];
    for (size_t j = 0; j < defined.size(); ++j) {
      const Elt y = defined[j];
      if (!define(da.mul(x, y), db.mul(img[x], img[y]))) return false;
      if (!define(da.mul(y, x), db.mul(img[y], img[x]))) return false;
    }
  }
  // Commutator values generate the derived subgroup, so the closure must
  // already be total.
  return static_cast<int>(defined.size()) == da.order();
}

}  // namespace

bool isoclinic(const FiniteGroup& a, const FiniteGroup& b, const SearchBudget& budget) {
  IsoclinismData da = isoclinism_data(a);
  IsoclinismData db = isoclinism_data(b);
  if (da.q != db.q || da.derived.order() != db.derived.order()) return false;
  if (!(iso_invariants(da.central_quotient) == iso_invariants(db.central_quotient)))
    return false;
  if (!(iso_invariants(da.derived) == iso_invariants(db.derived))) return false;
  if (da.q == 1) return true;  // both derived subgroups are then trivial too

  const FiniteGroup& qa = da.central_quotient;
  const FiniteGroup& qb = db.central_quotient;
  const std::vector<Elt> gens = generating_sequence(qa);
  std::vector<std::vector<Elt>> cands(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    const Elt x = gens[k];
    for (Elt c = 0; c < qb.order(); ++c)
      if (qb.element_order(c) == qa.element_order(x) &&
          qb.classes().sizes[qb.classes().class_of[c]] ==
              qa.classes().sizes[qa.classes().class_of[x]])
        cands[k].push_back(c);
    if (cands[k].empty()) return false;
  }

  HomSearchOptions opt;
  opt.injective = true;
  opt.node_budget = budget.nodes;
  bool found = false;
  search_homomorphisms(qa, qb, gens, cands, opt, [&](const std::vector<Elt>& phi) {
    // phi forces the derived-side map on all commutator values.
    std::vector<Elt> psi(da.derived.order(), -1);
    for (int u = 0; u < da.q; ++u) {
      for (int v = 0; v < da.q; ++v) {
        const int s = da.comm[static_cast<size_t>(u) * da.q + v];
        const int t = db.comm[static_cast<size_t>(phi[u]) * db.q + phi[v]];
        if (psi[s] >= 0 && psi[s] != t) return true;  // keep searching
        psi[s] = t;
      }
    }
    if (extend_commutator_map(da.derived, db.derived, psi)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace groups
