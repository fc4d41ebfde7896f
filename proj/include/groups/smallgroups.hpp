#pragma once

#include <map>
#include <vector>

#include "groups/group.hpp"

namespace groups {

// Exhaustive generation of all groups of a given order up to isomorphism.
//
// Every group of order <= 511 in this library's range is solvable, so it has
// a normal subgroup of prime index p. Conversely, every extension of a group
// N of order n/p by C_p is determined by a pair (alpha, h0) with
// alpha in Aut(N), h0 in N, alpha(h0) = h0 and alpha^p = conj_{h0}:
// multiplication on N x Z_p is
//   (a, i)(b, j) = (a * alpha^i(b) * h0^[(i+j)/p], (i+j) mod p).
// Enumerating alpha over conjugacy representatives of Aut(N) (transporting
// h0 along) loses nothing up to isomorphism. Candidates are deduplicated by
// invariant bucketing plus isomorphism search.
class SmallGroups {
 public:
  explicit SmallGroups(SearchBudget budget = {}) : budget_(budget) {}

  // All groups of order n, one per isomorphism type, deterministic order.
  const std::vector<FiniteGroup>& of_order(int n);

 private:
  SearchBudget budget_;
  std::map<int, std::vector<FiniteGroup>> cache_;
};

// Conjugacy class representatives of a permutation-closed automorphism list,
// as image vectors (lex-least member per class). Exposed for tests.
std::vector<std::vector<Elt>> automorphism_class_reps(
    const std::vector<std::vector<Elt>>& automorphisms);

}  // namespace groups
