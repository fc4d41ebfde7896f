#include "groups/modmat.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace groups {

namespace {

long long mod_reduce(long long x, long long m) {
  x %= m;
  return x < 0 ? x + m : x;
}

// Extended gcd: returns g, sets u, v with u*a + v*b = g.
long long ext_gcd(long long a, long long b, long long& u, long long& v) {
  if (b == 0) {
    u = 1;
    v = 0;
    return a;
  }
  long long u1, v1;
  const long long g = ext_gcd(b, a % b, u1, v1);
  u = v1;
  v = u1 - (a / b) * v1;
  return g;
}

// A unit c mod m with c*a == gcd(a, m) (mod m).
long long unit_scaling(long long a, long long m) {
  const long long g = std::gcd(a, m);
  for (long long c = 1; c < m; ++c)
    if (std::gcd(c, m) == 1 && mod_reduce(c * a, m) == g) return c;
  assert(m == 1);
  return 0;
}

}  // namespace

void ModMatrix::append_row(std::span<const long long> r) {
  assert(static_cast<int>(r.size()) == cols);
  a.insert(a.end(), r.begin(), r.end());
  ++rows;
}

ModMatrix ModMatrix::identity(long long mod, int n) {
  ModMatrix e(mod, n, n);
  for (int i = 0; i < n; ++i) e.at(i, i) = mod > 1 ? 1 : 0;
  return e;
}

EchelonAccumulator::EchelonAccumulator(long long m, int cols, std::uint64_t work_budget)
    : m_(m), cols_(cols), budget_(work_budget) {
  pivot_rows_.resize(cols);
}

void EchelonAccumulator::add_row(std::span<const long long> r) {
  std::vector<long long> row(r.begin(), r.end());
  for (auto& x : row) x = mod_reduce(x, m_);
  for (int j = 0; j < cols_; ++j) {
    if (row[j] == 0) continue;
    work_ += static_cast<std::uint64_t>(cols_ - j);
    if (work_ > budget_) throw BudgetExceeded("echelon reduction work budget exceeded");
    auto& p = pivot_rows_[j];
    if (p.empty()) {
      p = std::move(row);
      return;
    }
    // Unimodular 2x2 combination: pivot becomes gcd(p[j], row[j]), row[j]
    // clears. The accumulated row lattice (plus m Z^cols) is preserved.
    const long long a = p[j], b = row[j];
    if (b % a == 0) {
      const long long q = b / a;
      for (int k = j; k < cols_; ++k) row[k] = mod_reduce(row[k] - q * p[k], m_);
    } else {
      long long u, v;
      const long long g = ext_gcd(a, b, u, v);
      const long long as = a / g, bs = b / g;
      for (int k = j; k < cols_; ++k) {
        const long long pk = p[k], rk = row[k];
        p[k] = mod_reduce(u * pk + v * rk, m_);
        row[k] = mod_reduce(as * rk - bs * pk, m_);
      }
    }
  }
}

ModMatrix EchelonAccumulator::take() {
  ModMatrix out(m_, 0, cols_);
  for (const auto& p : pivot_rows_)
    if (!p.empty()) out.append_row(p);
  return out;
}

ModMatrix howell_form(const ModMatrix& w) {
  const long long m = w.m;
  const int cols = w.cols;
  if (m == 1) return ModMatrix(m, 0, cols);
  std::vector<std::vector<long long>> pivot(cols);

  // Inserting a row can spawn the annihilator shadow of a pivot; process to
  // closure (Howell's completion step).
  std::vector<std::vector<long long>> queue;
  for (int i = 0; i < w.rows; ++i) {
    std::vector<long long> r(w.row(i).begin(), w.row(i).end());
    for (auto& x : r) x = mod_reduce(x, m);
    queue.push_back(std::move(r));
  }
  auto enqueue_shadow = [&](const std::vector<long long>& p, int j) {
    const long long g = std::gcd(p[j], m);
    if (m / g <= 1) return;
    std::vector<long long> shadow(cols, 0);
    bool nonzero = false;
    for (int k = j + 1; k < cols; ++k) {
      shadow[k] = mod_reduce((m / g) * p[k], m);
      nonzero |= shadow[k] != 0;
    }
    if (nonzero) queue.push_back(std::move(shadow));
  };
  while (!queue.empty()) {
    std::vector<long long> row = std::move(queue.back());
    queue.pop_back();
    for (int j = 0; j < cols; ++j) {
      if (row[j] == 0) continue;
      auto& p = pivot[j];
      if (p.empty()) {
        // Normalize: pivot entry becomes gcd(row[j], m), a divisor of m.
        const long long c = unit_scaling(row[j], m);
        for (int k = j; k < cols; ++k) row[k] = mod_reduce(c * row[k], m);
        enqueue_shadow(row, j);
        p = std::move(row);
        break;
      }
      const long long a = p[j], b = row[j];
      if (b % a == 0) {
        const long long q = b / a;
        for (int k = j; k < cols; ++k) row[k] = mod_reduce(row[k] - q * p[k], m);
      } else {
        long long u, v;
        const long long g = ext_gcd(a, b, u, v);
        const long long as = a / g, bs = b / g;
        std::vector<long long> np(cols, 0);
        for (int k = j; k < cols; ++k) {
          np[k] = mod_reduce(u * p[k] + v * row[k], m);
          row[k] = mod_reduce(as * row[k] - bs * p[k], m);
        }
        const long long c = unit_scaling(np[j], m);
        for (int k = j; k < cols; ++k) np[k] = mod_reduce(c * np[k], m);
        enqueue_shadow(np, j);
        p = std::move(np);
      }
    }
  }

  // Reduce entries above each pivot into [0, pivot).
  for (int j = cols - 1; j >= 0; --j) {
    if (pivot[j].empty()) continue;
    const long long pj = pivot[j][j];
    for (int j2 = 0; j2 < j; ++j2) {
      if (pivot[j2].empty() || pivot[j2][j] == 0) continue;
      const long long q = pivot[j2][j] / pj;
      if (q == 0) continue;
      for (int k = j; k < cols; ++k)
        pivot[j2][k] = mod_reduce(pivot[j2][k] - q * pivot[j][k], m);
    }
  }

  ModMatrix out(m, 0, cols);
  for (const auto& p : pivot)
    if (!p.empty()) out.append_row(p);
  return out;
}

bool in_row_span(const ModMatrix& howell, std::span<const long long> v) {
  const long long m = howell.m;
  if (m == 1) return true;
  std::vector<long long> r(v.begin(), v.end());
  for (auto& x : r) x = mod_reduce(x, m);
  std::vector<int> lead(howell.rows, howell.cols);
  for (int i = 0; i < howell.rows; ++i)
    for (int j = 0; j < howell.cols; ++j)
      if (howell.at(i, j) != 0) {
        lead[i] = j;
        break;
      }
  // Rows come out of howell_form sorted by leading column.
  for (int i = 0; i < howell.rows; ++i) {
    const int j = lead[i];
    if (r[j] == 0) continue;
    const long long pj = howell.at(i, j);
    if (r[j] % pj != 0) return false;
    const long long q = r[j] / pj;
    for (int k = j; k < howell.cols; ++k) r[k] = mod_reduce(r[k] - q * howell.at(i, k), m);
  }
  return std::all_of(r.begin(), r.end(), [](long long x) { return x == 0; });
}

StackedSmith stacked_smith(ModMatrix w, bool want_transforms, bool enforce_chain) {
  const long long m = w.m;
  const int rows = w.rows, cols = w.cols;
  StackedSmith out;
  out.diag.assign(cols, m);
  if (m == 1) {
    out.diag.assign(cols, 1);
    return out;
  }
  out.v = ModMatrix::identity(m, cols);
  out.v_inv = ModMatrix::identity(m, cols);
  for (auto& x : w.a) x = mod_reduce(x, m);

  auto col_axpy = [&](int dst, int src, long long q) {
    // col_dst -= q * col_src; V tracks the same op, V^-1 the inverse op.
    for (int i = 0; i < rows; ++i) w.at(i, dst) = mod_reduce(w.at(i, dst) - q * w.at(i, src), m);
    for (int i = 0; i < cols; ++i)
      out.v.at(i, dst) = mod_reduce(out.v.at(i, dst) - q * out.v.at(i, src), m);
    for (int j = 0; j < cols; ++j)
      out.v_inv.at(src, j) = mod_reduce(out.v_inv.at(src, j) + q * out.v_inv.at(dst, j), m);
  };
  auto col_swap = [&](int c1, int c2) {
    if (c1 == c2) return;
    for (int i = 0; i < rows; ++i) std::swap(w.at(i, c1), w.at(i, c2));
    for (int i = 0; i < cols; ++i) std::swap(out.v.at(i, c1), out.v.at(i, c2));
    for (int j = 0; j < cols; ++j) std::swap(out.v_inv.at(c1, j), out.v_inv.at(c2, j));
  };
  auto col_combine = [&](int ck, int cj, long long u, long long v, long long as, long long bs) {
    // (col_ck, col_cj) <- (u*ck + v*cj, as*cj - bs*ck); det = u*as + v*bs = 1.
    for (int i = 0; i < rows; ++i) {
      const long long x = w.at(i, ck), y = w.at(i, cj);
      w.at(i, ck) = mod_reduce(u * x + v * y, m);
      w.at(i, cj) = mod_reduce(as * y - bs * x, m);
    }
    for (int i = 0; i < cols; ++i) {
      const long long x = out.v.at(i, ck), y = out.v.at(i, cj);
      out.v.at(i, ck) = mod_reduce(u * x + v * y, m);
      out.v.at(i, cj) = mod_reduce(as * y - bs * x, m);
    }
    for (int j = 0; j < cols; ++j) {
      const long long x = out.v_inv.at(ck, j), y = out.v_inv.at(cj, j);
      out.v_inv.at(ck, j) = mod_reduce(as * x + bs * y, m);
      out.v_inv.at(cj, j) = mod_reduce(u * y - v * x, m);
    }
  };
  auto row_axpy = [&](int dst, int src, long long q) {
    for (int k = 0; k < cols; ++k) w.at(dst, k) = mod_reduce(w.at(dst, k) - q * w.at(src, k), m);
  };
  auto row_combine = [&](int rk, int rj, long long u, long long v, long long as, long long bs) {
    for (int k = 0; k < cols; ++k) {
      const long long x = w.at(rk, k), y = w.at(rj, k);
      w.at(rk, k) = mod_reduce(u * x + v * y, m);
      w.at(rj, k) = mod_reduce(as * y - bs * x, m);
    }
  };

  auto sweep = [&]() {
    const int steps = std::min(rows, cols);
    for (int k = 0; k < steps; ++k) {
      int pi = -1, pj = -1;
      long long best = m + 1;
      for (int i = k; i < rows && best > 1; ++i)
        for (int j = k; j < cols; ++j) {
          const long long e = w.at(i, j);
          if (e == 0) continue;
          const long long g = std::gcd(e, m);
          if (g < best) {
            best = g;
            pi = i;
            pj = j;
            if (g == 1) break;
          }
        }
      if (pi < 0) break;
      if (pi != k)
        for (int c = 0; c < cols; ++c) std::swap(w.at(pi, c), w.at(k, c));
      col_swap(pj, k);

      for (bool dirty = true; dirty;) {
        dirty = false;
        for (int i = 0; i < rows; ++i) {
          if (i == k || w.at(i, k) == 0) continue;
          const long long a = w.at(k, k), b = w.at(i, k);
          if (b % a == 0) {
            row_axpy(i, k, b / a);
          } else {
            long long u, v;
            const long long g = ext_gcd(a, b, u, v);
            row_combine(k, i, u, v, a / g, b / g);
            dirty = true;
          }
        }
        for (int j = 0; j < cols; ++j) {
          if (j == k || w.at(k, j) == 0) continue;
          const long long a = w.at(k, k), b = w.at(k, j);
          if (b % a == 0) {
            col_axpy(j, k, b / a);
          } else {
            long long u, v;
            const long long g = ext_gcd(a, b, u, v);
            col_combine(k, j, u, v, a / g, b / g);
            dirty = true;
          }
        }
      }
    }
  };

  auto read_diag = [&]() {
    for (int i = 0; i < cols; ++i) {
      const long long e = i < rows ? w.at(i, i) : 0;
      out.diag[i] = e == 0 ? m : std::gcd(e, m);
    }
  };

  sweep();
  read_diag();

  if (enforce_chain) {
    // Divisibility fix-up: merging a violating pair's columns and
    // re-diagonalizing turns (d_i, d_j) into (gcd, lcm). Repeats until the
    // divisor multiset forms a chain.
    for (bool dirty = true; dirty;) {
      dirty = false;
      for (int i = 0; i < cols && !dirty; ++i)
        for (int j = 0; j < cols && !dirty; ++j) {
          if (i == j) continue;
          if (out.diag[j] % out.diag[i] != 0 && out.diag[i] % out.diag[j] != 0) {
            col_axpy(j, i, m - 1);  // col_j += col_i
            sweep();
            read_diag();
            dirty = true;
          }
        }
    }
    // Canonical column order: ascending divisors (selection sort by swaps).
    for (int i = 0; i < cols; ++i) {
      int best = i;
      for (int j = i + 1; j < cols; ++j)
        if (out.diag[j] < out.diag[best]) best = j;
      if (best != i) {
        col_swap(best, i);
        std::swap(out.diag[best], out.diag[i]);
      }
    }
  }

  if (!want_transforms) {
    out.v = ModMatrix();
    out.v_inv = ModMatrix();
  }
  return out;
}

ModKernel kernel_mod(const ModMatrix& w) {
  const long long m = w.m;
  ModKernel out;
  out.gens = ModMatrix(m, 0, w.cols);
  if (m == 1) return out;
  StackedSmith s = stacked_smith(w, /*want_transforms=*/true);
  for (int i = 0; i < w.cols; ++i) {
    const long long d = s.diag[i];
    if (d <= 1) continue;  // no kernel contribution
    const long long t = m / d;
    std::vector<long long> gen(w.cols);
    for (int r = 0; r < w.cols; ++r) gen[r] = mod_reduce(t * s.v.at(r, i), m);
    out.gens.append_row(gen);
    out.orders.push_back(d);
  }
  return out;
}

std::vector<long long> quotient_divisors(const ModMatrix& w) {
  StackedSmith s = stacked_smith(w, /*want_transforms=*/false);
  return divisor_chain(s.diag);
}

std::vector<long long> divisor_chain(std::vector<long long> d) {
  std::erase_if(d, [](long long x) { return x <= 1; });
  for (bool dirty = true; dirty;) {
    dirty = false;
    for (size_t i = 0; i < d.size(); ++i)
      for (size_t j = i + 1; j < d.size(); ++j) {
        long long a = std::min(d[i], d[j]), b = std::max(d[i], d[j]);
        if (b % a == 0) continue;
        const long long g = std::gcd(a, b);
        d[i] = g;
        d[j] = a / g * b;
        dirty = true;
      }
  }
  std::erase_if(d, [](long long x) { return x <= 1; });
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace groups
