#include "groups/catalog.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

#include "groups/isomorphism.hpp"
#include "groups/json_io.hpp"

namespace groups {

namespace {

FiniteGroup from_index_mul(int n, const std::function<int(int, int)>& mul,
                           std::vector<std::string> labels = {}) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = mul(i, j);
  return FiniteGroup::from_table(std::move(t), std::move(labels));
}

using Perm = std::vector<int>;

Perm perm_compose(const Perm& p, const Perm& q) {
  // (p*q)(x) = p(q(x))
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

FiniteGroup permutation_closure(int degree, std::vector<Perm> gens, int max_order) {
  Perm id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  std::set<Perm> seen{id};
  std::vector<Perm> elems{id};
  for (const Perm& g : gens) {
    if (static_cast<int>(g.size()) != degree) throw ParseError("generators", "generator degree mismatch");
    Perm s = g;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < degree; ++i)
      if (s[i] != i) throw ParseError("generators", "generator is not a permutation");
  }
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const Perm& g : gens) {
      Perm p = perm_compose(elems[i], g);
      if (seen.insert(p).second) {
        if (static_cast<int>(elems.size()) + 1 > max_order)
          throw OrderCapExceeded("permutation closure exceeds cap " + std::to_string(max_order));
        elems.push_back(std::move(p));
      }
    }
  }
  std::sort(elems.begin(), elems.end());  // identity is lex-least, lands at 0
  std::map<Perm, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<int>(i));
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = index.at(perm_compose(elems[i], elems[j]));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    std::string s = "(";
    for (int x : elems[i]) s += std::to_string(x) + " ";
    s.back() = ')';
    labels[i] = s;
  }
  return FiniteGroup::from_table(std::move(table), std::move(labels));
}

int checked_positive(long long v, const char* what) {
  if (v < 1 || v > kAbsoluteMaxOrder) throw OrderCapExceeded(std::string(what) + " out of range");
  return static_cast<int>(v);
}

}  // namespace

FiniteGroup cyclic_group(int n) {
  checked_positive(n, "cyclic order");
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return from_index_mul(n, [n](int a, int b) { return (a + b) % n; }, std::move(labels));
}

FiniteGroup dihedral_group(int n) {
  checked_positive(2LL * n, "dihedral order");
  // index = rot + flip*n, flip in {0,1}
  return from_index_mul(2 * n, [n](int a, int b) {
    const int ra = a % n, fa = a / n, rb = b % n, fb = b / n;
    const int rot = fa ? (ra - rb % n + n) % n : (ra + rb) % n;
    return rot + ((fa ^ fb) ? n : 0);
  });
}

FiniteGroup generalized_quaternion_group(int order) {
  if (order < 8 || (order & (order - 1)) != 0)
    throw OrderCapExceeded("generalized quaternion order must be 2^k, k >= 3");
  checked_positive(order, "quaternion order");
  const int half = order / 2;  // <a> with a^half = 1, b^2 = a^(half/2)
  const int m = half / 2;
  return from_index_mul(order, [half, m](int x, int y) {
    const int i = x % half, j = x / half, c = y % half, d = y / half;
    int rot = j ? (i - c % half + half) % half : (i + c) % half;
    if (j && d) rot = (rot + m) % half;
    return rot + ((j ^ d) ? half : 0);
  });
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 7) throw OrderCapExceeded("symmetric group supported for n <= 7");
  if (n == 1) return FiniteGroup::trivial();
  std::vector<Perm> gens;
  Perm t(n);
  for (int i = 0; i < n; ++i) t[i] = i;
  std::swap(t[0], t[1]);
  gens.push_back(t);
  if (n > 2) {
    Perm c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.push_back(c);
  }
  return permutation_closure(n, std::move(gens), kAbsoluteMaxOrder);
}

FiniteGroup alternating_group(int n) {
  if (n < 1 || n > 7) throw OrderCapExceeded("alternating group supported for n <= 7");
  if (n <= 2) return FiniteGroup::trivial();
  std::vector<Perm> gens;
  for (int k = 2; k < n; ++k) {
    // 3-cycle (0 1 k)
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    p[0] = 1;
    p[1] = k;
    p[k] = 0;
    gens.push_back(std::move(p));
  }
  return permutation_closure(n, std::move(gens), kAbsoluteMaxOrder);
}

FiniteGroup elementary_abelian_group(int p, int k) {
  long long n = 1;
  for (int i = 0; i < k; ++i) n *= p;
  checked_positive(n, "elementary abelian order");
  FiniteGroup g = cyclic_group(p);
  for (int i = 1; i < k; ++i) g = direct_product(g, cyclic_group(p));
  if (k == 0) g = FiniteGroup::trivial();
  return g;
}

FiniteGroup heisenberg_group(int p) {
  const long long n = 1LL * p * p * p;
  checked_positive(n, "heisenberg order");
  // (a, b, c) ~ [[1, a, c], [0, 1, b], [0, 0, 1]]
  const int pp = p * p;
  return from_index_mul(static_cast<int>(n), [p, pp](int x, int y) {
    const int a1 = x / pp, b1 = (x / p) % p, c1 = x % p;
    const int a2 = y / pp, b2 = (y / p) % p, c2 = y % p;
    const int a = (a1 + a2) % p, b = (b1 + b2) % p, c = (c1 + c2 + a1 * b2) % p;
    return a * pp + b * p + c;
  });
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const long long n = 1LL * a.order() * b.order();
  checked_positive(n, "direct product order");
  const int nb = b.order();
  std::vector<std::string> labels(n);
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < nb; ++j) labels[i * nb + j] = a.label(i) + "|" + b.label(j);
  return from_index_mul(
      static_cast<int>(n),
      [&](int x, int y) {
        return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
      },
      std::move(labels));
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<Elt>>& action) {
  if (static_cast<int>(action.size()) != h.order())
    throw InvalidAction("action must assign an automorphism to every element of H");
  for (const auto& a : action) {
    if (!is_homomorphism(n, n, a)) throw InvalidAction("action image is not an endomorphism");
    GroupMap m{&n, &n, a};
    if (!m.is_bijective()) throw InvalidAction("action image is not bijective");
  }
  for (Elt x = 0; x < h.order(); ++x)
    for (Elt y = 0; y < h.order(); ++y) {
      const auto& composed = action[h.mul(x, y)];
      for (Elt e = 0; e < n.order(); ++e)
        if (composed[e] != action[x][action[y][e]])
          throw InvalidAction("action is not a homomorphism into Aut(N)");
    }
  const long long total = 1LL * n.order() * h.order();
  checked_positive(total, "semidirect product order");
  const int nn = n.order();
  // index = elt_of_N + elt_of_H * |N|; (n1, h1)(n2, h2) = (n1 * h1.n2, h1 h2)
  return from_index_mul(static_cast<int>(total), [&](int x, int y) {
    const int n1 = x % nn, h1 = x / nn, n2 = y % nn, h2 = y / nn;
    return n.mul(n1, action[h1][n2]) + h.mul(h1, h2) * nn;
  });
}

FiniteGroup central_product(const FiniteGroup& a, const FiniteGroup& b,
                            const std::vector<std::pair<Elt, Elt>>& identification) {
  if (identification.empty()) throw InvalidAction("central product needs identified generators");
  const Subgroup za = center(a);
  const Subgroup zb = center(b);
  std::vector<Elt> agens, bgens;
  for (auto [x, y] : identification) {
    if (!za.contains(x) || !zb.contains(y))
      throw InvalidAction("identified elements must be central");
    agens.push_back(x);
    bgens.push_back(y);
  }
  const Subgroup sa = subgroup_generated(a, agens);
  const Subgroup sb = subgroup_generated(b, bgens);

  FiniteGroup prod = direct_product(a, b);
  const int nb = b.order();
  std::vector<Elt> seeds;
  for (auto [x, y] : identification) seeds.push_back(x * nb + b.inv(y));
  const Subgroup graph = subgroup_generated(prod, seeds);
  // The graph of an isomorphism has the same order as either side.
  if (graph.order() != sa.order() || graph.order() != sb.order())
    throw InvalidAction("identification does not define an isomorphism of central subgroups");
  return quotient(prod, graph).group;
}

FiniteGroup extraspecial_group(int p, int two_m_plus_1, char sign) {
  if (two_m_plus_1 < 3 || two_m_plus_1 % 2 == 0)
    throw OrderCapExceeded("extraspecial exponent must be odd and >= 3");
  if (sign != '+' && sign != '-') throw ParseError(std::string(1, sign), "extraspecial sign");
  long long order = 1;
  for (int i = 0; i < two_m_plus_1; ++i) order *= p;
  if (order * p > 512) throw OrderCapExceeded("extraspecial cap is p*|G| <= 512");
  const int m = (two_m_plus_1 - 1) / 2;

  auto plus_block = [&]() {
    return p == 2 ? dihedral_group(4) : heisenberg_group(p);
  };
  auto minus_block = [&]() -> FiniteGroup {
    if (p == 2) return generalized_quaternion_group(8);
    // For odd p: C_{p^2} x| C_p, the exponent-p^2 block. The generator of
    // C_p acts as x -> x^(1+p).
    FiniteGroup cp2 = cyclic_group(p * p);
    FiniteGroup cp = cyclic_group(p);
    std::vector<std::vector<Elt>> action(p, std::vector<Elt>(p * p));
    for (int h = 0; h < p; ++h) {
      long long mult = 1;
      for (int i = 0; i < h; ++i) mult = mult * (1 + p) % (p * p);
      for (int x = 0; x < p * p; ++x) action[h][x] = static_cast<Elt>(x * mult % (p * p));
    }
    return semidirect_product(cp2, cp, action);
  };

  auto central_with = [&](const FiniteGroup& acc, const FiniteGroup& block) {
    // Identify the (order-p) centers, generator to generator.
    const Subgroup zacc = center(acc);
    const Subgroup zblk = center(block);
    assert(zacc.order() == p && zblk.order() == p);
    return central_product(acc, block, {{zacc.members[1], zblk.members[1]}});
  };

  FiniteGroup g = sign == '+' || m > 1 ? plus_block() : minus_block();
  for (int i = 1; i < m; ++i) {
    const bool last = i == m - 1;
    g = central_with(g, (sign == '-' && last) ? minus_block() : plus_block());
  }
  return g;
}

FiniteGroup build(const std::string& name_spec) {
  const size_t star = name_spec.find('*');
  if (star != std::string::npos) {
    FiniteGroup a = build(name_spec.substr(0, star));
    FiniteGroup b = build(name_spec.substr(star + 1));
    return direct_product(a, b);
  }
  const size_t colon = name_spec.find(':');
  const std::string head = name_spec.substr(0, colon);
  std::vector<std::string> args;
  if (colon != std::string::npos) {
    std::stringstream ss(name_spec.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) args.push_back(tok);
  }
  auto int_arg = [&](size_t i) {
    if (i >= args.size()) throw ParseError(name_spec, "missing argument");
    try {
      return std::stoi(args[i]);
    } catch (const std::exception&) {
      throw ParseError(args[i], "expected an integer argument");
    }
  };
  if (head == "cyclic") return cyclic_group(int_arg(0));
  if (head == "dihedral") return dihedral_group(int_arg(0));
  if (head == "quaternion") return generalized_quaternion_group(int_arg(0));
  if (head == "sym") return symmetric_group(int_arg(0));
  if (head == "alt") return alternating_group(int_arg(0));
  if (head == "elem") return elementary_abelian_group(int_arg(0), int_arg(1));
  if (head == "heisenberg") return heisenberg_group(int_arg(0));
  if (head == "extraspecial") {
    if (args.size() != 3 || args[2].size() != 1) throw ParseError(name_spec, "extraspecial:p,e,+|-");
    return extraspecial_group(int_arg(0), int_arg(1), args[2][0]);
  }
  if (head == "trivial") return FiniteGroup::trivial();
  throw ParseError(head, "unknown builder");
}

Fingerprint fingerprint_of(const FiniteGroup& g) {
  Fingerprint fp;
  fp.reserve(g.order());
  for (Elt x = 0; x < g.order(); ++x)
    fp.emplace_back(g.element_order(x), g.classes().sizes[g.classes().class_of[x]]);
  std::sort(fp.begin(), fp.end());
  return fp;
}

std::string fingerprint_key(const FiniteGroup& g) {
  const Fingerprint fp = fingerprint_of(g);
  std::string key = std::to_string(g.order()) + ":";
  std::pair<int, int> cur{-1, -1};
  int count = 0;
  auto flush = [&]() {
    if (count)
      key += std::to_string(cur.first) + "." + std::to_string(cur.second) + "x" +
             std::to_string(count) + ";";
  };
  for (const auto& e : fp) {
    if (e == cur) {
      ++count;
    } else {
      flush();
      cur = e;
      count = 1;
    }
  }
  flush();
  return key;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir,
                                     std::vector<CorpusIssue>* issues,
                                     const SearchBudget& budget) {
  std::vector<std::pair<std::string, std::filesystem::path>> files =
      corpus_file_list(dir);
  std::vector<CorpusEntry> entries;
  std::set<std::string> names;
  for (const auto& [name, file] : files) {
    if (!names.insert(name).second)
      throw DuplicateName("duplicate corpus name: " + name);
    try {
      FiniteGroup g = load_group_source_file(file, budget);
      CorpusEntry e{name, std::move(g), CorpusSource::FileImport, {}, std::nullopt};
      e.fingerprint = fingerprint_of(e.group);
      entries.push_back(std::move(e));
    } catch (const GroupError& err) {
      if (issues) issues->push_back({file.string(), err.what()});
    }
  }
  // Duplicate isomorphism types: pairwise checks inside equal-fingerprint
  // buckets only.
  std::map<Fingerprint, std::vector<size_t>> buckets;
  for (size_t i = 0; i < entries.size(); ++i) buckets[entries[i].fingerprint].push_back(i);
  for (auto& [fp, idx] : buckets) {
    for (size_t i = 1; i < idx.size(); ++i) {
      for (size_t j = 0; j < i; ++j) {
        if (entries[idx[j]].duplicate_of) continue;
        if (isomorphic(entries[idx[i]].group, entries[idx[j]].group, budget)) {
          entries[idx[i]].duplicate_of = entries[idx[j]].name;
          break;
        }
      }
    }
  }
  return entries;
}

}  // namespace groups
