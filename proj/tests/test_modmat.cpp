#include <doctest.h>

#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "groups/cohomology.hpp"
#include "groups/modmat.hpp"

#include "oracles.hpp"

using namespace groups;

namespace {

ModMatrix from_rows(long long m, const std::vector<std::vector<long long>>& rows) {
  ModMatrix w(m, 0, rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (const auto& r : rows) w.append_row(r);
  return w;
}

IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

// left * D * right, for verifying the factorization.
IntMatrix reassemble(const SmithResult& s, int rows, int cols) {
  IntMatrix d(rows, cols);
  for (int i = 0; i < std::min(rows, cols); ++i) d.at(i, i) = s.divisors[i];
  IntMatrix ld(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      long long acc = 0;
      for (int k = 0; k < rows; ++k) acc += s.left.at(i, k) * d.at(k, j);
      ld.at(i, j) = acc;
    }
  IntMatrix out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      long long acc = 0;
      for (int k = 0; k < cols; ++k) acc += ld.at(i, k) * s.right.at(k, j);
      out.at(i, j) = acc;
    }
  return out;
}

}  // namespace

TEST_CASE("smith normal form: zero, diag(2,3), and a 2x2 with minors") {
  SmithResult z = smith_normal_form(int_matrix({{0, 0}, {0, 0}}));
  CHECK(z.divisors == std::vector<long long>{0, 0});

  SmithResult d23 = smith_normal_form(int_matrix({{2, 0}, {0, 3}}));
  CHECK(d23.divisors == std::vector<long long>{1, 6});

  // d1 = gcd of entries = 2, d1*d2 = |det| = 8.
  SmithResult m = smith_normal_form(int_matrix({{2, 4}, {6, 8}}));
  CHECK(m.divisors == std::vector<long long>{2, 4});
  CHECK(m.divisors ==
        oracle::smith_divisors_minor_gcd({{2, 4}, {6, 8}}));
}

TEST_CASE("smith normal form factorization and chain on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> entry(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 1 + trial % 3, cols = 1 + (trial / 3) % 3;
    std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
    for (auto& r : a)
      for (auto& e : r) e = entry(rng);
    SmithResult s = smith_normal_form(int_matrix(a));
    // chain
    for (size_t i = 1; i < s.divisors.size(); ++i) {
      if (s.divisors[i - 1] == 0) CHECK(s.divisors[i] == 0);
      else CHECK(s.divisors[i] % s.divisors[i - 1] == 0);
    }
    // factorization
    IntMatrix back = reassemble(s, rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) CHECK(back.at(i, j) == a[i][j]);
    // divisors match the minor-gcd oracle
    CHECK(s.divisors == oracle::smith_divisors_minor_gcd(a));
  }
}

TEST_CASE("howell membership catches non-echelon-visible members") {
  // span{(2,1)} mod 4 contains (0,2) = 2*(2,1); plain echelon reduction
  // misses it.
  ModMatrix h = howell_form(from_rows(4, {{2, 1}}));
  CHECK(in_row_span(h, std::vector<long long>{2, 1}));
  CHECK(in_row_span(h, std::vector<long long>{0, 2}));
  CHECK(!in_row_span(h, std::vector<long long>{1, 0}));
  CHECK(!in_row_span(h, std::vector<long long>{0, 1}));
}

TEST_CASE("howell membership agrees with brute-force span enumeration") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> entry(0, 7);
  for (int trial = 0; trial < 30; ++trial) {
    const long long m = std::vector<long long>{2, 4, 6, 8, 12}[trial % 5];
    const int cols = 3, rows = 1 + trial % 3;
    std::vector<std::vector<long long>> gens(rows, std::vector<long long>(cols));
    for (auto& r : gens)
      for (auto& e : r) e = entry(rng) % m;
    // brute-force span
    std::set<std::vector<long long>> span;
    std::vector<long long> coef(rows, 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == rows) {
        std::vector<long long> v(cols, 0);
        for (int r = 0; r < rows; ++r)
          for (int c = 0; c < cols; ++c) v[c] = (v[c] + coef[r] * gens[r][c]) % m;
        span.insert(v);
        return;
      }
      for (coef[i] = 0; coef[i] < m; ++coef[i]) rec(i + 1);
      coef[i] = 0;
    };
    rec(0);
    ModMatrix h = howell_form(from_rows(m, gens));
    // every vector classified identically
    std::vector<long long> v(cols, 0);
    std::function<void(int)> all = [&](int c) {
      if (c == cols) {
        CHECK(in_row_span(h, v) == (span.count(v) > 0));
        return;
      }
      for (v[c] = 0; v[c] < m; ++v[c]) all(c + 1);
      v[c] = 0;
    };
    all(0);
  }
}

TEST_CASE("kernel_mod and quotient_divisors on hand matrices") {
  // x + y = 0 mod 4: kernel generated by (1,3) -> whole diagonal subgroup.
  ModKernel k = kernel_mod(from_rows(4, {{1, 1}}));
  long long count = 1;
  for (long long o : k.orders) count *= o;
  CHECK(count == 4);  // |{(x, -x)}| = 4

  // Z^2 / <(2,0),(0,2)> mod 4 = Z/2 + Z/2.
  CHECK(quotient_divisors(from_rows(4, {{2, 0}, {0, 2}})) ==
        std::vector<long long>{2, 2});
  // Z^2 / <(1,1)> mod 6 = Z/6.
  CHECK(quotient_divisors(from_rows(6, {{1, 1}})) == std::vector<long long>{6});
  // Zero rows: quotient is (Z/m)^cols.
  CHECK(quotient_divisors(ModMatrix(6, 0, 2)) == std::vector<long long>{6, 6});
}

TEST_CASE("kernel generators actually solve the system") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const long long m = std::vector<long long>{2, 3, 4, 8, 12}[trial % 5];
    std::uniform_int_distribution<long long> entry(0, m - 1);
    const int rows = 1 + trial % 4, cols = 2 + trial % 3;
    ModMatrix w(m, rows, cols);
    for (auto& e : w.a) e = entry(rng);
    ModKernel k = kernel_mod(w);
    for (int i = 0; i < k.gens.rows; ++i) {
      for (int r = 0; r < rows; ++r) {
        long long acc = 0;
        for (int c = 0; c < cols; ++c) acc += w.at(r, c) * k.gens.at(i, c);
        CHECK(acc % m == 0);
      }
      // stated order is the additive order
      CHECK(k.orders[i] > 1);
      for (int c = 0; c < cols; ++c)
        CHECK((k.gens.at(i, c) * k.orders[i]) % m == 0);
    }
    // kernel size check against brute force for tiny cases
    if (std::pow(static_cast<double>(m), cols) <= 4096) {
      long long brute = 0;
      std::vector<long long> v(cols, 0);
      std::function<void(int)> rec = [&](int c) {
        if (c == cols) {
          for (int r = 0; r < rows; ++r) {
            long long acc = 0;
            for (int cc = 0; cc < cols; ++cc) acc += w.at(r, cc) * v[cc];
            if (acc % m != 0) return;
          }
          ++brute;
          return;
        }
        for (v[c] = 0; v[c] < m; ++v[c]) rec(c + 1);
        v[c] = 0;
      };
      rec(0);
      long long gen_count = 1;
      for (long long o : k.orders) gen_count *= o;
      CHECK(gen_count == brute);
    }
  }
}

TEST_CASE("divisor_chain normalizes multisets") {
  CHECK(divisor_chain({2, 3}) == std::vector<long long>{6});
  CHECK(divisor_chain({2, 2, 3}) == std::vector<long long>{2, 6});
  CHECK(divisor_chain({4, 6}) == std::vector<long long>{2, 12});
  CHECK(divisor_chain({1, 1, 5}) == std::vector<long long>{5});
  CHECK(divisor_chain({}).empty());
}
