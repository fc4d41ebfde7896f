#pragma once

#include <span>
#include <vector>

#include "groups/common.hpp"

namespace groups {

// Dense matrix over Z/m, entries kept in [0, m). Rows usually play the role
// of constraint vectors or module generators; the submodule they span is
// always understood to include m*Z^cols.
struct ModMatrix {
  long long m = 1;
  int rows = 0, cols = 0;
  std::vector<long long> a;

  ModMatrix() = default;
  ModMatrix(long long mod, int r, int c) : m(mod), rows(r), cols(c), a(size_t(r) * c, 0) {}

  long long& at(int i, int j) { return a[size_t(i) * cols + j]; }
  long long at(int i, int j) const { return a[size_t(i) * cols + j]; }
  std::span<const long long> row(int i) const { return {a.data() + size_t(i) * cols, size_t(cols)}; }
  void append_row(std::span<const long long> r);
  static ModMatrix identity(long long mod, int n);
};

// Canonical Howell form of the row span. Supports exact membership tests
// over Z/m (a plain echelon form does not, when pivots are zero divisors).
ModMatrix howell_form(const ModMatrix& w);

// Membership of v in the row span of a Howell form (plus m*Z^cols).
bool in_row_span(const ModMatrix& howell, std::span<const long long> v);

// Incremental echelon accumulator for large constraint systems: rows are
// folded in with unimodular 2x2 combinations, so the accumulated row lattice
// (together with m*Z^cols) is exactly that of everything inserted.
class EchelonAccumulator {
 public:
  EchelonAccumulator(long long m, int cols, std::uint64_t work_budget);
  void add_row(std::span<const long long> r);
  ModMatrix take();  // rows sorted by pivot column

 private:
  long long m_;
  int cols_;
  std::uint64_t budget_;
  std::uint64_t work_ = 0;
  std::vector<std::vector<long long>> pivot_rows_;  // indexed by pivot column
};

// Diagonalization of the stacked matrix [W; m*I] by integer-unimodular row
// and column operations, with all entries reduced mod m throughout. diag[i]
// is gcd(delta_i, m) in 1..m (m for columns beyond the rank): the quotient
// Z^cols / (row lattice + m Z^cols) is the direct sum of Z/diag[i], and the
// solutions of W f == 0 (mod m) are spanned by (m/diag[i]) * V.col(i).
struct StackedSmith {
  std::vector<long long> diag;
  ModMatrix v;      // column transform mod m (cols x cols)
  ModMatrix v_inv;  // its inverse mod m
};
StackedSmith stacked_smith(ModMatrix w, bool want_transforms, bool enforce_chain = false);

// Kernel generators of {f : W f == 0 (mod m)} as rows, with orders[i] the
// additive order of generator i (only generators of order > 1 are returned).
struct ModKernel {
  ModMatrix gens;
  std::vector<long long> orders;
};
ModKernel kernel_mod(const ModMatrix& w);

// Divisors > 1 (ascending divisibility chain) of Z^cols/(row span + m Z^cols).
std::vector<long long> quotient_divisors(const ModMatrix& w);

// Canonical ascending divisor chain of the abelian group  ⊕ Z/d  over the
// multiset d (1s dropped).
std::vector<long long> divisor_chain(std::vector<long long> d);

}  // namespace groups
