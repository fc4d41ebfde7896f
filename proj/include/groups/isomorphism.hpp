#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "groups/group.hpp"

namespace groups {

// Backtracking search over images of a generating sequence. Partial maps are
// extended by closure: whenever both factors of a product are mapped, the
// product's image is forced, and conflicts prune the branch. Every map that
// reaches a leaf is therefore a verified homomorphism on all of dom.
struct HomSearchOptions {
  bool injective = false;      // prune branches that repeat an image
  bool stop_at_first = false;
  std::uint64_t node_budget = 100'000'000;
};

// Calls visit() for each homomorphism found (as its image vector, in
// candidate DFS order). visit() returning false stops the search early.
// Throws BudgetExceeded when the step budget runs out.
void search_homomorphisms(const FiniteGroup& dom, const FiniteGroup& cod,
                          const std::vector<Elt>& gens,
                          const std::vector<std::vector<Elt>>& candidates,
                          const HomSearchOptions& opt,
                          const std::function<bool(const std::vector<Elt>&)>& visit);

// Convenience wrapper collecting all results, sorted lexicographically.
std::vector<std::vector<Elt>> collect_homomorphisms(
    const FiniteGroup& dom, const FiniteGroup& cod, const std::vector<Elt>& gens,
    const std::vector<std::vector<Elt>>& candidates, const HomSearchOptions& opt);

// Backtracking isomorphism test with order/class-size pruning. Returns a
// bijective GroupMap when the groups are isomorphic.
std::optional<GroupMap> isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                                   const SearchBudget& budget = {});

// Full automorphism group as sorted image vectors.
std::vector<std::vector<Elt>> all_automorphisms(const FiniteGroup& g,
                                                const SearchBudget& budget = {});

// Isoclinism: compatible isomorphisms of the central quotients and derived
// subgroups. The derived-side map is forced by the central-quotient map via
// the commutator table, so the search runs over central-quotient
// isomorphisms only.
bool isoclinic(const FiniteGroup& a, const FiniteGroup& b, const SearchBudget& budget = {});

// Cheap isomorphism invariants used for bucketing and search pruning.
struct IsoInvariants {
  int order = 0;
  int center_order = 0;
  int derived_order = 0;
  int exponent = 0;
  int class_count = 0;
  std::vector<std::pair<int, int>> order_class_multiset;  // sorted (elt order, class size)

  bool operator==(const IsoInvariants&) const = default;
};
IsoInvariants iso_invariants(const FiniteGroup& g);

}  // namespace groups
