#include "groups/group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

namespace groups {

namespace {

// Greedy generating sequence over an unvalidated table: closure uses only
// the raw products, no inverses needed (finite order makes them redundant).
std::vector<Elt> greedy_generators_raw(int n, const std::vector<int>& tab) {
  std::vector<Elt> gens;
  std::vector<char> in(n, 0);
  std::vector<Elt> closure;
  in[0] = 1;
  closure.push_back(0);
  auto close_with = [&](Elt g) {
    std::vector<Elt> work{g};
    if (!in[g]) {
      in[g] = 1;
      closure.push_back(g);
    }
    while (!work.empty()) {
      Elt x = work.back();
      work.pop_back();
      for (size_t i = 0; i < closure.size(); ++i) {
        Elt y = closure[i];
        for (Elt z : {tab[static_cast<size_t>(x) * n + y], tab[static_cast<size_t>(y) * n + x]}) {
          if (!in[z]) {
            in[z] = 1;
            closure.push_back(z);
            work.push_back(z);
          }
        }
      }
    }
  };
  for (Elt e = 1; e < n; ++e) {
    if (!in[e]) {
      gens.push_back(e);
      close_with(e);
    }
  }
  return gens;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> labels, int max_order) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw NoIdentity(0, "empty table has no identity");
  if (n > max_order || n > kAbsoluteMaxOrder)
    throw OrderCapExceeded("group order " + std::to_string(n) + " exceeds cap " +
                           std::to_string(std::min(max_order, kAbsoluteMaxOrder)));

  FiniteGroup g;
  g.n_ = n;
  g.tab_.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw NotLatinSquare(true, i, "row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n)
        throw NotLatinSquare(true, i,
                             "row " + std::to_string(i) + " contains out-of-range entry " +
                                 std::to_string(v));
      g.tab_[static_cast<size_t>(i) * n + j] = v;
    }
  }

  // Latin square: every row and column is a permutation.
  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      int v = g.tab_[static_cast<size_t>(i) * n + j];
      if (seen[v]) throw NotLatinSquare(true, i, "row " + std::to_string(i) + " repeats " + std::to_string(v));
      seen[v] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      int v = g.tab_[static_cast<size_t>(i) * n + j];
      if (seen[v]) throw NotLatinSquare(false, j, "column " + std::to_string(j) + " repeats " + std::to_string(v));
      seen[v] = 1;
    }
  }

  // Identity pinned at index 0.
  for (int i = 0; i < n; ++i) {
    if (g.tab_[static_cast<size_t>(0) * n + i] != i)
      throw NoIdentity(i, "table[0][" + std::to_string(i) + "] != " + std::to_string(i));
    if (g.tab_[static_cast<size_t>(i) * n + 0] != i)
      throw NoIdentity(i, "table[" + std::to_string(i) + "][0] != " + std::to_string(i));
  }

  // Light's associativity test: it is enough to check (x*s)*y == x*(s*y)
  // for s running over a generating set of the magma.
  std::vector<Elt> gens = greedy_generators_raw(n, g.tab_);
  for (Elt s : gens) {
    for (Elt x = 0; x < n; ++x) {
      const int xs = g.tab_[static_cast<size_t>(x) * n + s];
      for (Elt y = 0; y < n; ++y) {
        const int sy = g.tab_[static_cast<size_t>(s) * n + y];
        if (g.tab_[static_cast<size_t>(xs) * n + y] != g.tab_[static_cast<size_t>(x) * n + sy])
          throw NotAssociative(x, s, y,
                               "(" + std::to_string(x) + "*" + std::to_string(s) + ")*" +
                                   std::to_string(y) + " != " + std::to_string(x) + "*(" +
                                   std::to_string(s) + "*" + std::to_string(y) + ")");
      }
    }
  }

  g.inv_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (g.tab_[static_cast<size_t>(i) * n + j] == 0) {
        g.inv_[i] = j;
        break;
      }
    }
    // In an associative Latin square with identity the one-sided inverse is
    // two-sided; keep the check cheap anyway.
    if (g.inv_[i] < 0 || g.tab_[static_cast<size_t>(g.inv_[i]) * n + i] != 0)
      throw NoIdentity(i, "element " + std::to_string(i) + " has no two-sided inverse");
  }

  g.ord_.assign(n, 1);
  for (int i = 1; i < n; ++i) {
    int k = 1;
    Elt x = i;
    while (x != 0) {
      x = g.tab_[static_cast<size_t>(x) * n + i];
      ++k;
    }
    g.ord_[i] = k;
  }

  if (labels.empty()) {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[i] = "g" + std::to_string(i);
  }
  if (static_cast<int>(labels.size()) != n)
    throw GroupError("label list length does not match group order");
  g.labels_ = std::move(labels);

  // Conjugacy partition, lowest representative first.
  auto& cp = g.classes_;
  cp.class_of.assign(n, -1);
  for (Elt x = 0; x < n; ++x) {
    if (cp.class_of[x] >= 0) continue;
    const int id = static_cast<int>(cp.reps.size());
    cp.reps.push_back(x);
    int size = 0;
    for (Elt c = 0; c < n; ++c) {
      Elt y = g.conj(c, x);
      if (cp.class_of[y] < 0) {
        cp.class_of[y] = id;
        ++size;
      }
    }
    cp.sizes.push_back(size);
  }
  return g;
}

FiniteGroup FiniteGroup::trivial() { return from_table({{0}}, {"e"}); }

Elt FiniteGroup::power(Elt x, long long k) const {
  const int o = ord_[x];
  long long r = k % o;
  if (r < 0) r += o;
  Elt acc = 0;
  for (long long i = 0; i < r; ++i) acc = mul(acc, x);
  return acc;
}

int FiniteGroup::exponent() const {
  long long e = 1;
  for (int i = 0; i < n_; ++i) e = std::lcm(e, static_cast<long long>(ord_[i]));
  return static_cast<int>(e);
}

std::vector<std::vector<int>> FiniteGroup::table_rows() const {
  std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) rows[i][j] = tab_[static_cast<size_t>(i) * n_ + j];
  return rows;
}

bool FiniteGroup::is_abelian() const {
  return static_cast<int>(classes_.reps.size()) == n_;
}

bool Subgroup::contains(Elt x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

bool GroupMap::is_bijective() const {
  if (domain->order() != codomain->order()) return false;
  std::vector<char> hit(codomain->order(), 0);
  for (Elt v : images) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

bool is_homomorphism(const FiniteGroup& dom, const FiniteGroup& cod,
                     const std::vector<Elt>& images) {
  const int n = dom.order();
  if (static_cast<int>(images.size()) != n) return false;
  if (images[0] != 0) return false;
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      if (images[dom.mul(x, y)] != cod.mul(images[x], images[y])) return false;
  return true;
}

GroupMap make_group_map(const FiniteGroup& dom, const FiniteGroup& cod,
                        std::vector<Elt> images) {
  if (!is_homomorphism(dom, cod, images))
    throw NotAnEndomorphism("image vector does not define a homomorphism");
  return GroupMap{&dom, &cod, std::move(images)};
}

ConjugacyPartition conjugacy_classes(const FiniteGroup& g) { return g.classes(); }

Subgroup center(const FiniteGroup& g) {
  const int n = g.order();
  Subgroup z{&g, {}};
  for (Elt x = 0; x < n; ++x) {
    bool central = true;
    for (Elt y = 0; y < n && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.members.push_back(x);
  }
  return z;
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Elt> seeds) {
  const int n = g.order();
  std::vector<char> in(n, 0);
  std::vector<Elt> closure{0};
  in[0] = 1;
  std::vector<Elt> work;
  for (Elt s : seeds) {
    if (!in[s]) {
      in[s] = 1;
      closure.push_back(s);
      work.push_back(s);
    }
  }
  while (!work.empty()) {
    Elt x = work.back();
    work.pop_back();
    for (size_t i = 0; i < closure.size(); ++i) {
      Elt y = closure[i];
      for (Elt z : {g.mul(x, y), g.mul(y, x)}) {
        if (!in[z]) {
          in[z] = 1;
          closure.push_back(z);
          work.push_back(z);
        }
      }
    }
  }
  std::sort(closure.begin(), closure.end());
  return Subgroup{&g, std::move(closure)};
}

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup h{&g, std::vector<Elt>(g.order())};
  std::iota(h.members.begin(), h.members.end(), 0);
  return h;
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::set<Elt> comms;
  for (Elt x : a.members)
    for (Elt y : b.members) comms.insert(g.commutator(x, y));
  std::vector<Elt> seeds(comms.begin(), comms.end());
  return subgroup_generated(g, seeds);
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  const Subgroup whole = whole_group(g);
  return commutator_subgroup(g, whole, whole);
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (Elt x : h.members)
    for (Elt c = 0; c < g.order(); ++c)
      if (!h.contains(g.conj(c, x))) return false;
  return true;
}

bool subgroup_is_abelian(const FiniteGroup& g, const Subgroup& h) {
  for (Elt x : h.members)
    for (Elt y : h.members)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

QuotientResult quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw NotNormal("subgroup is not normal");
  const int order = g.order();
  const int q = order / n.order();

  // Cosets keyed by their minimal element; the identity coset is minimal
  // overall, so it lands at index 0 after sorting.
  std::vector<int> coset_of(order, -1);
  std::vector<Elt> coset_min;
  for (Elt x = 0; x < order; ++x) {
    if (coset_of[x] >= 0) continue;
    const int id = static_cast<int>(coset_min.size());
    coset_min.push_back(x);
    for (Elt h : n.members) coset_of[g.mul(x, h)] = id;
  }
  assert(static_cast<int>(coset_min.size()) == q);

  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) table[i][j] = coset_of[g.mul(coset_min[i], coset_min[j])];

  std::vector<std::string> labels(q);
  for (int i = 0; i < q; ++i) labels[i] = g.label(coset_min[i]) + "N";

  QuotientResult out{FiniteGroup::from_table(std::move(table), std::move(labels)),
                     std::move(coset_of)};
  return out;
}

AbelianGroupStructure abelian_invariants(const FiniteGroup& g) {
  assert(g.is_abelian());
  const int n = g.order();
  AbelianGroupStructure s;
  if (n == 1) return s;

  // Per prime p: partition lambda of the Sylow p-part, recovered from the
  // counts c_k = #{x : x^(p^k) = 1} = p^(sum_i min(lambda_i, k)).
  std::map<long long, std::vector<int>> partitions;  // prime -> lambda desc
  long long rem = n;
  for (long long p = 2; p * p <= rem; ++p) {
    if (rem % p == 0) {
      while (rem % p == 0) rem /= p;
      partitions[p] = {};
    }
  }
  if (rem > 1) partitions[rem] = {};

  for (auto& [p, lambda] : partitions) {
    std::vector<int> s_k;  // s_k[k] with c_k = p^s_k
    s_k.push_back(0);
    for (int k = 1;; ++k) {
      long long pk = 1;
      for (int i = 0; i < k; ++i) pk *= p;
      int count = 0;
      for (Elt x = 0; x < n; ++x)
        if (g.element_order(x) != 0 && pk % g.element_order(x) == 0) ++count;
      int e = 0;
      long long c = count;
      while (c > 1) {
        c /= p;
        ++e;
      }
      s_k.push_back(e);
      if (s_k[k] == s_k[k - 1]) break;  // stabilized
    }
    // conjugate partition: m_k = s_k - s_{k-1} = #parts >= k
    std::vector<int> m;
    for (size_t k = 1; k < s_k.size(); ++k)
      if (s_k[k] > s_k[k - 1]) m.push_back(s_k[k] - s_k[k - 1]);
    const int parts = m.empty() ? 0 : m[0];
    lambda.assign(parts, 0);
    for (size_t k = 0; k < m.size(); ++k)
      for (int i = 0; i < m[k]; ++i) lambda[i] += 1;
  }

  size_t chain_len = 0;
  for (auto& [p, lambda] : partitions) chain_len = std::max(chain_len, lambda.size());
  std::vector<long long> divisors(chain_len, 1);
  for (auto& [p, lambda] : partitions) {
    for (size_t i = 0; i < lambda.size(); ++i) {
      long long pe = 1;
      for (int j = 0; j < lambda[i]; ++j) pe *= p;
      divisors[i] *= pe;  // divisors currently descending
    }
  }
  std::reverse(divisors.begin(), divisors.end());
  s.divisors = std::move(divisors);
  return s;
}

StructureFlags structure_flags(const FiniteGroup& g) {
  StructureFlags f;
  f.is_abelian = g.is_abelian();
  if (f.is_abelian) f.abelian_invariants = abelian_invariants(g);

  // Derived series to stabilization.
  {
    Subgroup cur = whole_group(g);
    int len = 0;
    while (cur.order() > 1) {
      Subgroup next = commutator_subgroup(g, cur, cur);
      if (next.order() == cur.order()) break;  // stabilized above 1
      cur = std::move(next);
      ++len;
    }
    if (cur.order() == 1) {
      f.is_solvable = true;
      f.derived_length = len;
    }
  }

  // Lower central series.
  {
    const Subgroup whole = whole_group(g);
    Subgroup cur = whole;
    int cls = 0;
    while (cur.order() > 1) {
      Subgroup next = commutator_subgroup(g, cur, whole);
      if (next.order() == cur.order()) {
        cls = -1;  // stabilized above 1: not nilpotent
        break;
      }
      cur = std::move(next);
      ++cls;
    }
    if (cls >= 0) f.nilpotency_class = cls;
  }
  return f;
}

std::vector<Elt> generating_sequence(const FiniteGroup& g) {
  std::vector<Elt> none;
  return generating_sequence_from(g, none);
}

std::vector<Elt> generating_sequence_from(const FiniteGroup& g, std::span<const Elt> pool) {
  const int n = g.order();
  std::vector<Elt> gens;
  std::vector<char> in(n, 0);
  Subgroup cur{&g, {0}};
  in[0] = 1;
  auto absorb = [&](Elt e) {
    gens.push_back(e);
    std::vector<Elt> seeds = cur.members;
    seeds.push_back(e);
    cur = subgroup_generated(g, seeds);
    std::fill(in.begin(), in.end(), 0);
    for (Elt m : cur.members) in[m] = 1;
  };
  for (Elt e : pool)
    if (!in[e]) absorb(e);
  for (Elt e = 1; e < n; ++e)
    if (!in[e]) absorb(e);
  return gens;
}

ExtractedSubgroup subgroup_as_group(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  const int k = h.order();
  std::vector<int> new_index(g.order(), -1);
  // members are sorted and contain 0, so identity keeps index 0
  for (int i = 0; i < k; ++i) new_index[h.members[i]] = i;
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      int prod = g.mul(h.members[i], h.members[j]);
      assert(new_index[prod] >= 0);
      table[i][j] = new_index[prod];
    }
  }
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) labels[i] = g.label(h.members[i]);
  ExtractedSubgroup out{FiniteGroup::from_table(std::move(table), std::move(labels)),
                        h.members};
  return out;
}

}  // namespace groups
