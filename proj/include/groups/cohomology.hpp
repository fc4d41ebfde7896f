#pragma once

#include <optional>
#include <vector>

#include "groups/group.hpp"
#include "groups/modmat.hpp"

namespace groups {

// Normalized 2-cochain G x G -> Z/m as a flat (n-1)^2 residue vector indexed
// by non-identity pairs; entries with an identity argument are implicitly 0.
struct Cochain2 {
  const FiniteGroup* group = nullptr;
  long long modulus = 1;
  std::vector<long long> values;

  long long at(Elt x, Elt y) const {
    if (x == 0 || y == 0) return 0;
    const int k = group->order() - 1;
    return values[static_cast<size_t>(x - 1) * k + (y - 1)];
  }
};

// Checks the 2-cocycle identity f(y,z) - f(xy,z) + f(x,yz) - f(x,y) == 0.
bool is_two_cocycle(const Cochain2& f);

// Integer matrix for the Smith normal form operation. Dense row-major.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  long long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// M = left * D * right with unimodular transforms and diagonal divisor chain
// d1 | d2 | ... Arithmetic runs in int64 with overflow checks and retries in
// arbitrary precision when a check trips.
struct SmithResult {
  std::vector<long long> divisors;  // length min(rows, cols), chain, >= 0
  IntMatrix left, right;
};
SmithResult smith_normal_form(const IntMatrix& m);

struct CohomologyGroup {
  long long modulus = 1;
  AbelianGroupStructure structure;
  // Class representatives generating the group; orders match structure.divisors.
  std::vector<Cochain2> basis;
};

// H^2(G, Z/m) with trivial action: ker d2 / im d1 on normalized cochains,
// by Smith reduction of the stacked relation matrix with modulus rows.
CohomologyGroup h2(const FiniteGroup& g, long long m, const SearchBudget& budget = {});

// Schur multiplier M(G) = H^2(G, Q/Z), realized as h2(G, n) modulo the
// connecting image of Hom(G, Z/n), n = |G|.
CohomologyGroup schur_multiplier(const FiniteGroup& g, const SearchBudget& budget = {});

// Restriction of a cochain on G to H x H in H's own numbering.
Cochain2 restrict_cochain(const Cochain2& f, const ExtractedSubgroup& h);

// True when the class of r dies in M(H): r lies in the span of H-coboundaries
// and H's connecting image (same modulus as r).
bool restriction_trivial(const Cochain2& r, const SearchBudget& budget = {});

// B0(G): classes of M(G) whose restriction to every bicyclic subgroup
// (conjugacy representatives suffice) is trivial in that subgroup's
// multiplier.
CohomologyGroup bogomolov_multiplier(const FiniteGroup& g, const SearchBudget& budget = {});

// Exposed for tests: coboundary rows, connecting rows, cocycle kernel.
ModMatrix coboundary_rows(const FiniteGroup& g, long long m);
ModMatrix connecting_rows(const FiniteGroup& g, long long m);
ModKernel cocycle_kernel(const FiniteGroup& g, long long m, const SearchBudget& budget = {});

}  // namespace groups
