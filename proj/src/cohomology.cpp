#include "groups/cohomology.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "groups/catalog.hpp"
#include "groups/isomorphism.hpp"
#include "groups/subgroups.hpp"

namespace groups {

namespace {

long long mod_reduce(long long x, long long m) {
  x %= m;
  return x < 0 ? x + m : x;
}

// ---------------------------------------------------------------- Smith ---

template <typename T>
struct Ops;

template <>
struct Ops<long long> {
  static long long mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("smith: multiply overflow");
    return r;
  }
  static long long add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("smith: add overflow");
    return r;
  }
  static long long sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("smith: subtract overflow");
    return r;
  }
};

using BigInt = boost::multiprecision::cpp_int;

template <>
struct Ops<BigInt> {
  static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
  static BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
  static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
};

template <typename T>
struct Mat {
  int rows, cols;
  std::vector<T> a;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, T(0)) {}
  T& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
};

template <typename T>
T t_abs(const T& x) {
  return x < 0 ? T(-x) : x;
}

template <typename T>
void smith_impl(Mat<T>& w, Mat<T>& left, Mat<T>& right) {
  using O = Ops<T>;
  const int rows = w.rows, cols = w.cols;
  // left and right start as identities; row ops mirror into left (so that
  // input = left * D * right at the end), column ops into right.
  auto row_op = [&](int dst, int src, const T& q) {
    // row_dst -= q * row_src in w  =>  col_src += q * col_dst in left
    for (int k = 0; k < cols; ++k) w.at(dst, k) = O::sub(w.at(dst, k), O::mul(q, w.at(src, k)));
    for (int i = 0; i < rows; ++i)
      left.at(i, src) = O::add(left.at(i, src), O::mul(q, left.at(i, dst)));
  };
  auto col_op = [&](int dst, int src, const T& q) {
    for (int i = 0; i < rows; ++i) w.at(i, dst) = O::sub(w.at(i, dst), O::mul(q, w.at(i, src)));
    for (int k = 0; k < cols; ++k)
      right.at(src, k) = O::add(right.at(src, k), O::mul(q, right.at(dst, k)));
  };
  auto row_swap = [&](int r1, int r2) {
    if (r1 == r2) return;
    for (int k = 0; k < cols; ++k) std::swap(w.at(r1, k), w.at(r2, k));
    for (int i = 0; i < rows; ++i) std::swap(left.at(i, r1), left.at(i, r2));
  };
  auto col_swap = [&](int c1, int c2) {
    if (c1 == c2) return;
    for (int i = 0; i < rows; ++i) std::swap(w.at(i, c1), w.at(i, c2));
    for (int k = 0; k < cols; ++k) std::swap(right.at(c1, k), right.at(c2, k));
  };
  auto row_negate = [&](int r) {
    for (int k = 0; k < cols; ++k) w.at(r, k) = O::sub(T(0), w.at(r, k));
    for (int i = 0; i < rows; ++i) left.at(i, r) = O::sub(T(0), left.at(i, r));
  };

  const int steps = std::min(rows, cols);
  for (int k = 0; k < steps; ++k) {
    // Minimal-absolute-value pivot (ties: lowest row, then column).
    int pi = -1, pj = -1;
    T best(0);
    for (int i = k; i < rows; ++i)
      for (int j = k; j < cols; ++j) {
        const T e = t_abs(w.at(i, j));
        if (e == 0) continue;
        if (pi < 0 || e < best) {
          best = e;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    row_swap(pi, k);
    col_swap(pj, k);

    for (bool dirty = true; dirty;) {
      dirty = false;
      for (int i = k + 1; i < rows; ++i) {
        if (w.at(i, k) == 0) continue;
        const T q = w.at(i, k) / w.at(k, k);
        row_op(i, k, q);
        if (w.at(i, k) != 0) {
          row_swap(i, k);  // remainder is smaller: continue Euclid
          dirty = true;
        }
      }
      for (int j = k + 1; j < cols; ++j) {
        if (w.at(k, j) == 0) continue;
        const T q = w.at(k, j) / w.at(k, k);
        col_op(j, k, q);
        if (w.at(k, j) != 0) {
          col_swap(j, k);
          dirty = true;
        }
      }
    }
    if (w.at(k, k) < 0) row_negate(k);
  }

  // Divisibility chain fix-up.
  for (bool dirty = true; dirty;) {
    dirty = false;
    for (int k = 0; k + 1 < steps; ++k) {
      const T a = w.at(k, k), b = w.at(k + 1, k + 1);
      if (a == 0 && b != 0) {
        row_swap(k, k + 1);
        col_swap(k, k + 1);
        dirty = true;
        continue;
      }
      if (a == 0 || b == 0 || b % a == 0) continue;
      // Merge the 2x2 block and re-reduce it.
      col_op(k, k + 1, T(-1));  // col_k += col_{k+1}
      for (bool sub_dirty = true; sub_dirty;) {
        sub_dirty = false;
        if (w.at(k + 1, k) != 0) {
          const T q = w.at(k + 1, k) / w.at(k, k);
          row_op(k + 1, k, q);
          if (w.at(k + 1, k) != 0) {
            row_swap(k, k + 1);
            sub_dirty = true;
          }
        }
        if (w.at(k, k + 1) != 0) {
          const T q = w.at(k, k + 1) / w.at(k, k);
          col_op(k + 1, k, q);
          if (w.at(k, k + 1) != 0) {
            col_swap(k, k + 1);
            sub_dirty = true;
          }
        }
      }
      if (w.at(k, k) < 0) row_negate(k);
      if (w.at(k + 1, k + 1) < 0) row_negate(k + 1);
      dirty = true;
    }
  }
}

template <typename T>
SmithResult smith_with(const IntMatrix& m) {
  Mat<T> w(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) w.a[i] = T(m.a[i]);
  Mat<T> left(m.rows, m.rows), right(m.cols, m.cols);
  for (int i = 0; i < m.rows; ++i) left.at(i, i) = T(1);
  for (int i = 0; i < m.cols; ++i) right.at(i, i) = T(1);
  smith_impl(w, left, right);

  auto narrow = [](const T& x) {
    if constexpr (std::is_same_v<T, long long>) {
      return x;
    } else {
      if (x > BigInt(std::numeric_limits<long long>::max()) ||
          x < BigInt(std::numeric_limits<long long>::min()))
        throw ArithmeticOverflow("smith: result exceeds int64");
      return static_cast<long long>(x);
    }
  };
  SmithResult out;
  out.divisors.resize(std::min(m.rows, m.cols));
  for (size_t i = 0; i < out.divisors.size(); ++i) out.divisors[i] = narrow(w.at(i, i));
  out.left = IntMatrix(m.rows, m.rows);
  out.right = IntMatrix(m.cols, m.cols);
  for (size_t i = 0; i < left.a.size(); ++i) out.left.a[i] = narrow(left.a[i]);
  for (size_t i = 0; i < right.a.size(); ++i) out.right.a[i] = narrow(right.a[i]);
  return out;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  try {
    return smith_with<long long>(m);
  } catch (const ArithmeticOverflow&) {
    return smith_with<BigInt>(m);  // promote on demand
  }
}

// ------------------------------------------------------------ cohomology ---

bool is_two_cocycle(const Cochain2& f) {
  const FiniteGroup& g = *f.group;
  const long long m = f.modulus;
  for (Elt x = 0; x < g.order(); ++x)
    for (Elt y = 0; y < g.order(); ++y)
      for (Elt z = 0; z < g.order(); ++z) {
        const long long v =
            f.at(y, z) - f.at(g.mul(x, y), z) + f.at(x, g.mul(y, z)) - f.at(x, y);
        if (mod_reduce(v, m) != 0) return false;
      }
  return true;
}

namespace {

size_t pair_index(int n, Elt x, Elt y) {
  return static_cast<size_t>(x - 1) * (n - 1) + (y - 1);
}

// All homomorphisms G -> Z/m as value vectors chi(x) in 0..m-1.
std::vector<std::vector<long long>> all_characters(const FiniteGroup& g, long long m,
                                                   const SearchBudget& budget) {
  FiniteGroup zm = cyclic_group(static_cast<int>(m));
  const std::vector<Elt> gens = generating_sequence(g);
  std::vector<std::vector<Elt>> cands(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    const int go = g.element_order(gens[k]);
    for (Elt c = 0; c < zm.order(); ++c)
      if (go % zm.element_order(c) == 0) cands[k].push_back(c);
  }
  HomSearchOptions opt;
  opt.node_budget = budget.nodes;
  std::vector<std::vector<Elt>> homs = collect_homomorphisms(g, zm, gens, cands, opt);
  std::vector<std::vector<long long>> out;
  out.reserve(homs.size());
  for (const auto& h : homs) out.emplace_back(h.begin(), h.end());
  return out;
}

}  // namespace

ModMatrix coboundary_rows(const FiniteGroup& g, long long m) {
  const int n = g.order();
  const int cols = (n - 1) * (n - 1);
  ModMatrix rows(m, 0, cols);
  std::vector<long long> row(cols);
  for (Elt w = 1; w < n; ++w) {
    std::fill(row.begin(), row.end(), 0);
    for (Elt x = 1; x < n; ++x)
      for (Elt y = 1; y < n; ++y) {
        long long v = 0;
        if (x == w) v += 1;
        if (g.mul(x, y) == w) v -= 1;
        if (y == w) v += 1;
        row[pair_index(n, x, y)] = mod_reduce(v, m);
      }
    rows.append_row(row);
  }
  return rows;
}

ModMatrix connecting_rows(const FiniteGroup& g, long long m) {
  // Carry cochains d_chi(x, y) = (chi(x) + chi(y) - chi(xy)) / m for every
  // homomorphism chi: G -> Z/m with integer lifts in 0..m-1.
  const int n = g.order();
  const int cols = (n - 1) * (n - 1);
  ModMatrix rows(m, 0, cols);
  SearchBudget budget;
  std::vector<long long> row(cols);
  for (const auto& chi : all_characters(g, m, budget)) {
    std::fill(row.begin(), row.end(), 0);
    for (Elt x = 1; x < n; ++x)
      for (Elt y = 1; y < n; ++y) {
        const long long num = chi[x] + chi[y] - chi[g.mul(x, y)];
        assert(num % m == 0);
        row[pair_index(n, x, y)] = mod_reduce(num / m, m);
      }
    rows.append_row(row);
  }
  return rows;
}

ModKernel cocycle_kernel(const FiniteGroup& g, long long m, const SearchBudget& budget) {
  const int n = g.order();
  const int cols = (n - 1) * (n - 1);

  // The cocycle identity for all (x, y, z) follows from the instances with
  // x in a generating set: coboundaries of 2-cochain differentials vanish
  // identically, which propagates vanishing along products in the first
  // argument. The full identity is what the enumeration oracle checks.
  //
  // Row-reduction work units are single table updates, far cheaper than
  // search nodes; the factor keeps one budget knob for both.
  EchelonAccumulator acc(m, cols, budget.nodes * 100);
  std::vector<long long> row(cols);
  for (Elt s : generating_sequence(g)) {
    for (Elt y = 1; y < n; ++y)
      for (Elt z = 1; z < n; ++z) {
        std::fill(row.begin(), row.end(), 0);
        // f(y,z) - f(sy,z) + f(s,yz) - f(s,y)
        row[pair_index(n, y, z)] += 1;
        const Elt sy = g.mul(s, y);
        if (sy != 0) row[pair_index(n, sy, z)] -= 1;
        const Elt yz = g.mul(y, z);
        if (yz != 0) row[pair_index(n, s, yz)] += 1;
        row[pair_index(n, s, y)] -= 1;
        for (auto& v : row) v = mod_reduce(v, m);
        acc.add_row(row);
      }
  }
  return kernel_mod(acc.take());
}

namespace {

// Quotient (span of kernel gens) / (span of relation cochains) with basis
// representatives, all over Z/m.
CohomologyGroup quotient_structure(const FiniteGroup& g, long long m, const ModKernel& kernel,
                                   const ModMatrix& relations) {
  CohomologyGroup out;
  out.modulus = m;
  const int s = kernel.gens.rows;
  if (s == 0) return out;
  const int cols = kernel.gens.cols;

  // Coordinates of each relation generator over the kernel generators:
  // members of the kernel have unique t_i-divisible diagonal coordinates,
  // but solving through the kernel matrix again is simpler: find x with
  // x * gens == rel (mod m) by kernel computation on the stacked system.
  // Relation lattice R = {x : x * gens in span(relations)}: kernel of the
  // transposed system [gens^T | relations^T].
  ModMatrix sys(m, cols, s + relations.rows);
  for (int j = 0; j < s; ++j)
    for (int c = 0; c < cols; ++c) sys.at(c, j) = kernel.gens.at(j, c);
  for (int j = 0; j < relations.rows; ++j)
    for (int c = 0; c < cols; ++c) sys.at(c, s + j) = relations.at(j, c);
  ModKernel rel = kernel_mod(sys);

  ModMatrix rel_proj(m, 0, s);
  for (int i = 0; i < rel.gens.rows; ++i) {
    std::vector<long long> x(rel.gens.row(i).begin(), rel.gens.row(i).begin() + s);
    rel_proj.append_row(x);
  }
  // Generator orders are relations too.
  for (int i = 0; i < s; ++i) {
    std::vector<long long> x(s, 0);
    x[i] = kernel.orders[i] % m;
    rel_proj.append_row(x);
  }

  StackedSmith snf = stacked_smith(rel_proj, /*want_transforms=*/true, /*enforce_chain=*/true);
  for (int i = 0; i < s; ++i) {
    const long long d = snf.diag[i];
    if (d <= 1) continue;
    out.structure.divisors.push_back(d);
    // Class representative: coefficients = row i of V^-1 over kernel gens.
    Cochain2 rep{&g, m, std::vector<long long>(cols, 0)};
    for (int j = 0; j < s; ++j) {
      const long long c = snf.v_inv.at(i, j);
      if (c == 0) continue;
      for (int k = 0; k < cols; ++k)
        rep.values[k] = mod_reduce(rep.values[k] + c * kernel.gens.at(j, k), m);
    }
    out.basis.push_back(std::move(rep));
  }
  return out;
}

ModMatrix triviality_span(const FiniteGroup& g, long long m) {
  ModMatrix span = coboundary_rows(g, m);
  ModMatrix conn = connecting_rows(g, m);
  for (int i = 0; i < conn.rows; ++i) span.append_row(conn.row(i));
  return span;
}

}  // namespace

CohomologyGroup h2(const FiniteGroup& g, long long m, const SearchBudget& budget) {
  if (m < 1) throw GroupError("modulus must be positive");
  if (g.order() > budget.cohomology_max_order)
    throw BudgetExceeded("cohomology capped at order " +
                         std::to_string(budget.cohomology_max_order));
  CohomologyGroup out;
  out.modulus = m;
  if (m == 1 || g.order() == 1) return out;
  ModKernel kernel = cocycle_kernel(g, m, budget);
  return quotient_structure(g, m, kernel, coboundary_rows(g, m));
}

CohomologyGroup schur_multiplier(const FiniteGroup& g, const SearchBudget& budget) {
  const long long n = g.order();
  if (g.order() > budget.cohomology_max_order)
    throw BudgetExceeded("cohomology capped at order " +
                         std::to_string(budget.cohomology_max_order));
  CohomologyGroup out;
  out.modulus = n;
  if (n == 1) return out;
  ModKernel kernel = cocycle_kernel(g, n, budget);
  ModMatrix relations = coboundary_rows(g, n);
  ModMatrix conn = connecting_rows(g, n);
  for (int i = 0; i < conn.rows; ++i) relations.append_row(conn.row(i));
  return quotient_structure(g, n, kernel, relations);
}

Cochain2 restrict_cochain(const Cochain2& f, const ExtractedSubgroup& h) {
  const int k = h.group.order();
  Cochain2 r{&h.group, f.modulus, std::vector<long long>((k - 1) * (k - 1), 0)};
  for (Elt a = 1; a < k; ++a)
    for (Elt b = 1; b < k; ++b)
      r.values[static_cast<size_t>(a - 1) * (k - 1) + (b - 1)] =
          f.at(h.parent_of[a], h.parent_of[b]);
  return r;
}

bool restriction_trivial(const Cochain2& r, const SearchBudget&) {
  const ModMatrix span = howell_form(triviality_span(*r.group, r.modulus));
  return in_row_span(span, r.values);
}

CohomologyGroup bogomolov_multiplier(const FiniteGroup& g, const SearchBudget& budget) {
  CohomologyGroup m_g = schur_multiplier(g, budget);
  CohomologyGroup out;
  out.modulus = m_g.modulus;
  const long long m = m_g.modulus;
  const int k = static_cast<int>(m_g.basis.size());
  if (k == 0) return out;

  SubgroupEnumOptions sopt;
  sopt.up_to_conjugacy = true;
  sopt.budget = budget;
  const std::vector<Subgroup> bicyclic = enumerate_subgroups(g, SubgroupKind::Bicyclic, sopt);

  // Solution module A (coefficient rows over the multiplier basis), refined
  // per subgroup: a is kept iff (sum a_i f_i)|_H is trivial in M(H).
  ModMatrix a_gens = ModMatrix::identity(m, k);
  for (const Subgroup& hsub : bicyclic) {
    if (hsub.order() == 1 || a_gens.rows == 0) continue;
    ExtractedSubgroup ex = subgroup_as_group(hsub);
    const int nh = ex.group.order();
    const int ncols = (nh - 1) * (nh - 1);
    ModMatrix span = triviality_span(ex.group, m);

    // Restrictions of the current generators' cochains.
    std::vector<std::vector<long long>> restr(a_gens.rows);
    for (int i = 0; i < a_gens.rows; ++i) {
      Cochain2 comb{&g, m, std::vector<long long>((g.order() - 1) * (g.order() - 1), 0)};
      for (int j = 0; j < k; ++j) {
        const long long c = a_gens.at(i, j);
        if (c == 0) continue;
        for (size_t t = 0; t < comb.values.size(); ++t)
          comb.values[t] = mod_reduce(comb.values[t] + c * m_g.basis[j].values[t], m);
      }
      restr[i] = restrict_cochain(comb, ex).values;
    }

    // c * restr + b * span == 0  =>  keep combination c of the generators.
    ModMatrix sys(m, ncols, a_gens.rows + span.rows);
    for (int i = 0; i < a_gens.rows; ++i)
      for (int c = 0; c < ncols; ++c) sys.at(c, i) = restr[i][c];
    for (int i = 0; i < span.rows; ++i)
      for (int c = 0; c < ncols; ++c) sys.at(c, a_gens.rows + i) = span.at(i, c);
    ModKernel sol = kernel_mod(sys);

    ModMatrix refined(m, 0, k);
    for (int i = 0; i < sol.gens.rows; ++i) {
      std::vector<long long> combo(k, 0);
      for (int j = 0; j < a_gens.rows; ++j) {
        const long long c = sol.gens.at(i, j);
        if (c == 0) continue;
        for (int t = 0; t < k; ++t)
          combo[t] = mod_reduce(combo[t] + c * a_gens.at(j, t), m);
      }
      refined.append_row(combo);
    }
    a_gens = howell_form(refined);
  }

  // Structure of span(A) / span(diag(d_i)): relations of the A generators
  // modulo classes that are already trivial in M(G).
  ModMatrix d_rows(m, 0, k);
  for (int i = 0; i < k; ++i) {
    std::vector<long long> row(k, 0);
    row[i] = m_g.structure.divisors[i] % m;
    d_rows.append_row(row);
  }
  ModMatrix sys(m, k, a_gens.rows + k);
  for (int i = 0; i < a_gens.rows; ++i)
    for (int c = 0; c < k; ++c) sys.at(c, i) = a_gens.at(i, c);
  for (int i = 0; i < k; ++i)
    for (int c = 0; c < k; ++c) sys.at(c, a_gens.rows + i) = d_rows.at(i, c);
  ModKernel rel = kernel_mod(sys);
  ModMatrix rel_proj(m, 0, a_gens.rows == 0 ? 1 : a_gens.rows);
  if (a_gens.rows == 0) return out;
  for (int i = 0; i < rel.gens.rows; ++i) {
    std::vector<long long> x(rel.gens.row(i).begin(), rel.gens.row(i).begin() + a_gens.rows);
    rel_proj.append_row(x);
  }

  StackedSmith snf = stacked_smith(rel_proj, /*want_transforms=*/true, /*enforce_chain=*/true);
  for (int i = 0; i < a_gens.rows; ++i) {
    const long long d = snf.diag[i];
    if (d <= 1) continue;
    out.structure.divisors.push_back(d);
    Cochain2 rep{&g, m, std::vector<long long>((g.order() - 1) * (g.order() - 1), 0)};
    for (int j = 0; j < a_gens.rows; ++j) {
      const long long cj = snf.v_inv.at(i, j);
      if (cj == 0) continue;
      for (int t = 0; t < k; ++t) {
        const long long coeff = mod_reduce(cj * a_gens.at(j, t), m);
        if (coeff == 0) continue;
        for (size_t vv = 0; vv < rep.values.size(); ++vv)
          rep.values[vv] = mod_reduce(rep.values[vv] + coeff * m_g.basis[t].values[vv], m);
      }
    }
    out.basis.push_back(std::move(rep));
  }
  return out;
}

}  // namespace groups
