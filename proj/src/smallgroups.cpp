#include "groups/smallgroups.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "groups/catalog.hpp"
#include "groups/isomorphism.hpp"

namespace groups {

namespace {

std::vector<Elt> compose_vec(const std::vector<Elt>& a, const std::vector<Elt>& b) {
  std::vector<Elt> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

std::vector<Elt> invert_vec(const std::vector<Elt>& a) {
  std::vector<Elt> inv(a.size());
  for (size_t i = 0; i < a.size(); ++i) inv[a[i]] = static_cast<Elt>(i);
  return inv;
}

std::vector<int> primes_dividing(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

std::vector<std::vector<Elt>> automorphism_class_reps(
    const std::vector<std::vector<Elt>>& automorphisms) {
  if (automorphisms.empty()) return {};
  std::vector<std::vector<Elt>> inverses;
  inverses.reserve(automorphisms.size());
  for (const auto& g : automorphisms) inverses.push_back(invert_vec(g));

  // One full conjugation sweep per class: cost |Aut| * #classes, no
  // generating set needed.
  std::set<std::vector<Elt>> visited;
  std::vector<std::vector<Elt>> reps;
  for (const auto& a : automorphisms) {
    if (visited.count(a)) continue;
    reps.push_back(a);  // sorted input: first hit is lex-least
    for (size_t gi = 0; gi < automorphisms.size(); ++gi)
      visited.insert(compose_vec(automorphisms[gi], compose_vec(a, inverses[gi])));
  }
  return reps;
}

const std::vector<FiniteGroup>& SmallGroups::of_order(int n) {
  auto it = cache_.find(n);
  if (it != cache_.end()) return it->second;
  if (n > budget_.table_max_order)
    throw OrderCapExceeded("small group generation capped at order " +
                           std::to_string(budget_.table_max_order));

  std::vector<FiniteGroup> groups;
  if (n == 1) {
    groups.push_back(FiniteGroup::trivial());
    cache_.emplace(n, std::move(groups));
    return cache_.at(n);
  }

  // Bucketed isomorphism deduplication.
  std::map<std::string, std::vector<size_t>> buckets;
  auto try_add = [&](FiniteGroup cand) {
    const std::string key =
        fingerprint_key(cand) + "|z" + std::to_string(center(cand).order()) + "|d" +
        std::to_string(derived_subgroup(cand).order()) + "|e" + std::to_string(cand.exponent());
    auto& bucket = buckets[key];
    for (size_t idx : bucket)
      if (isomorphic(groups[idx], cand, budget_)) return;
    bucket.push_back(groups.size());
    groups.push_back(std::move(cand));
  };

  for (int p : primes_dividing(n)) {
    const std::vector<FiniteGroup>& kernels = of_order(n / p);
    for (const FiniteGroup& nk : kernels) {
      const int kn = nk.order();
      const std::vector<std::vector<Elt>> autos = all_automorphisms(nk, budget_);
      const std::vector<std::vector<Elt>> reps = automorphism_class_reps(autos);
      for (const auto& alpha : reps) {
        // alpha^p must be conjugation by a fixed point h0 of alpha.
        std::vector<std::vector<Elt>> powers(p + 1);
        powers[0].resize(kn);
        for (int i = 0; i < kn; ++i) powers[0][i] = i;
        for (int i = 1; i <= p; ++i) powers[i] = compose_vec(alpha, powers[i - 1]);

        for (Elt h0 = 0; h0 < kn; ++h0) {
          if (alpha[h0] != h0) continue;
          bool matches = true;
          for (Elt x = 0; x < kn && matches; ++x)
            matches = powers[p][x] == nk.conj(h0, x);
          if (!matches) continue;

          // Build the extension table on N x Z_p.
          std::vector<std::vector<int>> table(n, std::vector<int>(n));
          for (int a = 0; a < kn; ++a)
            for (int i = 0; i < p; ++i)
              for (int b = 0; b < kn; ++b)
                for (int j = 0; j < p; ++j) {
                  int prod = nk.mul(a, powers[i][b]);
                  if (i + j >= p) prod = nk.mul(prod, h0);
                  table[a + i * kn][b + j * kn] = prod + ((i + j) % p) * kn;
                }
          try_add(FiniteGroup::from_table(std::move(table)));
        }
      }
    }
  }
  cache_.emplace(n, std::move(groups));
  return cache_.at(n);
}

}  // namespace groups
