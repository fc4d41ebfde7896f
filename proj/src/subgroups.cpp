#include "groups/subgroups.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace groups {

namespace {

bool is_prime_power(int n, int p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<Subgroup> finalize(const FiniteGroup& g, std::set<std::vector<Elt>> members,
                               const SubgroupEnumOptions& opt) {
  std::vector<Subgroup> out;
  out.reserve(members.size());
  for (auto& m : members) out.push_back(Subgroup{&g, m});
  if (opt.up_to_conjugacy) out = conjugacy_representatives(g, out);
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return out;
}

std::set<std::vector<Elt>> cyclic_member_sets(const FiniteGroup& g) {
  std::set<std::vector<Elt>> members;
  for (Elt x = 0; x < g.order(); ++x) {
    std::vector<Elt> seed{x};
    members.insert(subgroup_generated(g, seed).members);
  }
  return members;
}

// Breadth-first growth of the subgroup lattice. extend_filter(h, x) limits
// which elements may extend a subgroup; keep_filter decides membership in
// the final set (every grown subgroup stays in the frontier regardless).
template <typename ExtendF>
std::set<std::vector<Elt>> grow_subgroups(const FiniteGroup& g, ExtendF extend_filter,
                                          std::uint64_t node_budget) {
  std::set<std::vector<Elt>> seen;
  std::vector<Subgroup> frontier;
  Subgroup triv{&g, {0}};
  seen.insert(triv.members);
  frontier.push_back(triv);
  std::uint64_t work = 0;
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& h : frontier) {
      for (Elt x = 0; x < g.order(); ++x) {
        if (h.contains(x) || !extend_filter(h, x)) continue;
        work += static_cast<std::uint64_t>(h.order()) * h.order();
        if (work > node_budget) throw BudgetExceeded("subgroup enumeration budget exceeded");
        std::vector<Elt> seeds = h.members;
        seeds.push_back(x);
        Subgroup k = subgroup_generated(g, seeds);
        if (seen.insert(k.members).second) next.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

Subgroup one_sylow(const FiniteGroup& g, int p) {
  const int n = g.order();
  if (n % p != 0) throw GroupError("p does not divide the group order");
  int target = 1;
  {
    int m = n;
    while (m % p == 0) {
      m /= p;
      target *= p;
    }
  }
  Subgroup h{&g, {0}};
  while (h.order() < target) {
    bool grew = false;
    for (Elt x = 1; x < n && !grew; ++x) {
      if (h.contains(x) || !is_prime_power(g.element_order(x), p)) continue;
      std::vector<Elt> seeds = h.members;
      seeds.push_back(x);
      Subgroup k = subgroup_generated(g, seeds);
      if (k.order() > h.order() && is_prime_power(k.order(), p)) {
        h = std::move(k);
        grew = true;
      }
    }
    // A proper p-subgroup always extends inside some Sylow overgroup.
    assert(grew);
    if (!grew) break;
  }
  return h;
}

}  // namespace

std::vector<Subgroup> conjugacy_representatives(const FiniteGroup& g,
                                                const std::vector<Subgroup>& subs) {
  std::set<std::vector<Elt>> pool;
  for (const Subgroup& s : subs) pool.insert(s.members);
  std::vector<Subgroup> reps;
  std::set<std::vector<Elt>> visited;
  for (const Subgroup& s : subs) {
    if (visited.count(s.members)) continue;
    // Orbit of the member set under conjugation.
    std::vector<Elt> best = s.members;
    std::vector<std::vector<Elt>> orbit{s.members};
    visited.insert(s.members);
    for (size_t i = 0; i < orbit.size(); ++i) {
      for (Elt c = 0; c < g.order(); ++c) {
        std::vector<Elt> im;
        im.reserve(orbit[i].size());
        for (Elt x : orbit[i]) im.push_back(g.conj(c, x));
        std::sort(im.begin(), im.end());
        if (visited.insert(im).second) {
          if (im < best) best = im;
          orbit.push_back(std::move(im));
        }
      }
    }
    reps.push_back(Subgroup{&g, best});
  }
  return reps;
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, SubgroupKind kind,
                                          const SubgroupEnumOptions& opt) {
  const int n = g.order();
  switch (kind) {
    case SubgroupKind::Cyclic:
      return finalize(g, cyclic_member_sets(g), opt);

    case SubgroupKind::Bicyclic: {
      std::set<std::vector<Elt>> members = cyclic_member_sets(g);
      for (Elt x = 0; x < n; ++x)
        for (Elt y = x + 1; y < n; ++y) {
          if (g.mul(x, y) != g.mul(y, x)) continue;
          std::vector<Elt> seeds{x, y};
          members.insert(subgroup_generated(g, seeds).members);
        }
      return finalize(g, std::move(members), opt);
    }

    case SubgroupKind::Abelian: {
      auto centralizes = [&](const Subgroup& h, Elt x) {
        for (Elt y : h.members)
          if (g.mul(x, y) != g.mul(y, x)) return false;
        return true;
      };
      return finalize(g, grow_subgroups(g, centralizes, opt.budget.nodes), opt);
    }

    case SubgroupKind::All:
    case SubgroupKind::Nilpotent: {
      if (n > opt.budget.subgroup_max_order)
        throw BudgetExceeded("subgroup lattice enumeration capped at order " +
                             std::to_string(opt.budget.subgroup_max_order));
      auto any = [](const Subgroup&, Elt) { return true; };
      std::set<std::vector<Elt>> members = grow_subgroups(g, any, opt.budget.nodes);
      if (kind == SubgroupKind::Nilpotent) {
        std::set<std::vector<Elt>> nilpotent;
        for (const auto& m : members) {
          ExtractedSubgroup ex = subgroup_as_group(Subgroup{&g, m});
          if (structure_flags(ex.group).nilpotency_class.has_value()) nilpotent.insert(m);
        }
        members = std::move(nilpotent);
      }
      return finalize(g, std::move(members), opt);
    }

    case SubgroupKind::Sylow: {
      const int p = opt.sylow_p;
      if (p < 2 || n % p != 0) throw GroupError("Sylow enumeration needs a prime dividing |G|");
      Subgroup h = one_sylow(g, p);
      std::set<std::vector<Elt>> members;
      for (Elt c = 0; c < n; ++c) {
        std::vector<Elt> im;
        im.reserve(h.members.size());
        for (Elt x : h.members) im.push_back(g.conj(c, x));
        std::sort(im.begin(), im.end());
        members.insert(std::move(im));
      }
      return finalize(g, std::move(members), opt);
    }
  }
  throw GroupError("unknown subgroup kind");
}

}  // namespace groups
