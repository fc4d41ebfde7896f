#include "groups/report.hpp"

#include <chrono>
#include <sstream>

#include "groups/cache.hpp"
#include "groups/isomorphism.hpp"

namespace groups {

using nlohmann::json;
using nlohmann::ordered_json;

WhichInvariants parse_which(const std::string& csv) {
  WhichInvariants w;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (tok == "sha") {
      w.sha = true;
    } else if (tok == "schur") {
      w.schur = true;
    } else if (tok == "b0") {
      w.b0 = true;
    } else if (tok.rfind("family:", 0) == 0) {
      w.families.push_back(parse_family_kind(tok.substr(7)));
    } else {
      throw ParseError(tok, "unknown invariant");
    }
  }
  return w;
}

namespace {

std::vector<long long> divisor_list(const AbelianGroupStructure& s) { return s.divisors; }

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

void check_sha_properties(const FiniteGroup& g, const InvariantReport& r, const ShaReport& s,
                          std::vector<std::string>* violations) {
  if (!s.is_solvable) violations->push_back("sha not solvable");
  const auto cls = r.flags.nilpotency_class;
  if (cls && *cls >= 1) {
    if (!s.nilpotency_class || *s.nilpotency_class > std::max(0, *cls - 1))
      violations->push_back("sha nilpotency class exceeds c-1");
  }
  (void)g;
}

}  // namespace

InvariantReport compute_invariants(const std::string& name, const FiniteGroup& g,
                                   const WhichInvariants& which, const SearchBudget& budget,
                                   ResultCache* cache) {
  InvariantReport r;
  r.name = name;
  r.order = g.order();
  r.flags = structure_flags(g);

  auto cached_sha = [&](const std::string& invariant,
                        const std::function<ShaReport()>& compute) -> std::optional<ShaReport> {
    const std::string key = cache ? ResultCache::key_for(g, invariant, budget) : "";
    if (cache) {
      if (auto hit = cache->get(key)) return sha_report_from_json(*hit);
    }
    ShaReport s = compute();
    if (cache) cache->put(key, sha_report_to_json(s));
    return s;
  };

  if (which.sha) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      r.sha = *cached_sha("sha", [&] { return sha(g, budget); });
      check_sha_properties(g, r, *r.sha, &r.violations);
    } catch (const BudgetExceeded&) {
      r.budget_exhausted["sha"] = true;
    }
    r.timings_ms["sha"] = ms_since(t0);
  }

  for (FamilyKind kind : which.families) {
    const std::string fname = family_kind_name(kind);
    auto t0 = std::chrono::steady_clock::now();
    try {
      FamilySpec spec{kind, {}};
      ShaReport s = *cached_sha("family_" + fname, [&] { return sha_family(g, spec, budget); });
      if ((kind == FamilyKind::Nilpotent || kind == FamilyKind::Sylow) && !s.is_abelian)
        r.violations.push_back("sha_" + fname + " not abelian");
      if (kind == FamilyKind::Abelian &&
          (!s.nilpotency_class.has_value() || *s.nilpotency_class > 2))
        r.violations.push_back("sha_abelian nilpotency class exceeds 2");
      r.family_sha.emplace(fname, std::move(s));
    } catch (const BudgetExceeded&) {
      r.budget_exhausted["family_" + fname] = true;
    }
    r.timings_ms["family_" + fname] = ms_since(t0);
  }

  auto cached_divisors =
      [&](const std::string& invariant,
          const std::function<std::vector<long long>()>& compute) -> std::vector<long long> {
    const std::string key = cache ? ResultCache::key_for(g, invariant, budget) : "";
    if (cache) {
      if (auto hit = cache->get(key)) return hit->get<std::vector<long long>>();
    }
    std::vector<long long> v = compute();
    if (cache) cache->put(key, json(v));
    return v;
  };

  if (which.schur) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      r.schur = cached_divisors(
          "schur", [&] { return divisor_list(schur_multiplier(g, budget).structure); });
    } catch (const BudgetExceeded&) {
      r.budget_exhausted["schur"] = true;
    }
    r.timings_ms["schur"] = ms_since(t0);
  }

  if (which.b0) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      r.bogomolov = cached_divisors(
          "b0", [&] { return divisor_list(bogomolov_multiplier(g, budget).structure); });
      if (r.schur && r.bogomolov) {
        long long bo = 1, mo = 1;
        for (long long d : *r.bogomolov) bo *= d;
        for (long long d : *r.schur) mo *= d;
        if (mo % bo != 0) r.violations.push_back("b0 order does not divide schur order");
      }
    } catch (const BudgetExceeded&) {
      r.budget_exhausted["b0"] = true;
    }
    r.timings_ms["b0"] = ms_since(t0);
  }
  return r;
}

ordered_json sha_report_to_json(const ShaReport& r) {
  ordered_json j;
  j["order"] = r.order;
  j["trivial"] = r.is_trivial;
  ordered_json st;
  st["abelian"] = r.is_abelian;
  if (r.is_abelian) {
    st["divisors"] = r.abelian_structure.divisors;
  } else {
    st["order"] = r.order;
    st["solvable"] = r.is_solvable;
    if (r.nilpotency_class)
      st["nilpotency_class"] = *r.nilpotency_class;
    else
      st["nilpotency_class"] = nullptr;
    if (r.derived_length)
      st["derived_length"] = *r.derived_length;
    else
      st["derived_length"] = nullptr;
  }
  j["structure"] = st;
  if (r.witness)
    j["witness"] = *r.witness;
  else
    j["witness"] = nullptr;
  return j;
}

ShaReport sha_report_from_json(const json& j) {
  ShaReport r;
  r.order = j.at("order").get<long long>();
  r.is_trivial = j.at("trivial").get<bool>();
  const json& st = j.at("structure");
  r.is_abelian = st.at("abelian").get<bool>();
  if (r.is_abelian) {
    r.abelian_structure.divisors = st.at("divisors").get<std::vector<long long>>();
    r.is_solvable = true;
    r.nilpotency_class = r.order == 1 ? 0 : 1;
    r.derived_length = r.order == 1 ? 0 : 1;
  } else {
    r.is_solvable = st.at("solvable").get<bool>();
    if (!st.at("nilpotency_class").is_null())
      r.nilpotency_class = st.at("nilpotency_class").get<int>();
    else
      r.nilpotency_class.reset();
    if (!st.at("derived_length").is_null())
      r.derived_length = st.at("derived_length").get<int>();
    else
      r.derived_length.reset();
  }
  if (j.contains("witness") && !j.at("witness").is_null())
    r.witness = j.at("witness").get<std::vector<Elt>>();
  return r;
}

ordered_json report_to_json(const InvariantReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["order"] = r.order;
  ordered_json flags;
  flags["abelian"] = r.flags.is_abelian;
  flags["solvable"] = r.flags.is_solvable;
  if (r.flags.nilpotency_class)
    flags["nilpotency_class"] = *r.flags.nilpotency_class;
  else
    flags["nilpotency_class"] = nullptr;
  if (r.flags.derived_length)
    flags["derived_length"] = *r.flags.derived_length;
  else
    flags["derived_length"] = nullptr;
  if (r.flags.abelian_invariants)
    flags["abelian_divisors"] = r.flags.abelian_invariants->divisors;
  else
    flags["abelian_divisors"] = nullptr;
  j["flags"] = flags;
  if (r.sha) j["sha"] = sha_report_to_json(*r.sha);
  if (!r.family_sha.empty()) {
    ordered_json fam;
    for (const auto& [k, v] : r.family_sha) fam[k] = sha_report_to_json(v);
    j["family_sha"] = fam;
  }
  if (r.schur) j["schur"] = *r.schur;
  if (r.bogomolov) j["bogomolov"] = *r.bogomolov;
  ordered_json t;
  for (const auto& [k, v] : r.timings_ms) t[k] = v;
  j["timings_ms"] = t;
  ordered_json b = ordered_json::object();
  for (const auto& [k, v] : r.budget_exhausted) b[k] = v;
  j["budget_exhausted"] = b;
  j["violations"] = r.violations;
  return j;
}

InvariantReport report_from_json(const json& j) {
  InvariantReport r;
  r.name = j.at("name").get<std::string>();
  r.order = j.at("order").get<int>();
  const json& flags = j.at("flags");
  r.flags.is_abelian = flags.at("abelian").get<bool>();
  r.flags.is_solvable = flags.at("solvable").get<bool>();
  if (!flags.at("nilpotency_class").is_null())
    r.flags.nilpotency_class = flags.at("nilpotency_class").get<int>();
  if (!flags.at("derived_length").is_null())
    r.flags.derived_length = flags.at("derived_length").get<int>();
  if (!flags.at("abelian_divisors").is_null()) {
    AbelianGroupStructure s;
    s.divisors = flags.at("abelian_divisors").get<std::vector<long long>>();
    r.flags.abelian_invariants = s;
  }
  if (j.contains("sha")) r.sha = sha_report_from_json(j.at("sha"));
  if (j.contains("family_sha"))
    for (auto& [k, v] : j.at("family_sha").items())
      r.family_sha.emplace(k, sha_report_from_json(v));
  if (j.contains("schur")) r.schur = j.at("schur").get<std::vector<long long>>();
  if (j.contains("bogomolov"))
    r.bogomolov = j.at("bogomolov").get<std::vector<long long>>();
  if (j.contains("timings_ms"))
    for (auto& [k, v] : j.at("timings_ms").items()) r.timings_ms[k] = v.get<double>();
  if (j.contains("budget_exhausted"))
    for (auto& [k, v] : j.at("budget_exhausted").items())
      r.budget_exhausted[k] = v.get<bool>();
  if (j.contains("violations"))
    r.violations = j.at("violations").get<std::vector<std::string>>();
  return r;
}

namespace {

std::string divisors_csv(const std::optional<std::vector<long long>>& d) {
  if (!d) return "";
  std::string s;
  for (size_t i = 0; i < d->size(); ++i) {
    if (i) s += "x";
    s += std::to_string((*d)[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

std::string csv_header() {
  return "name,order,abelian,solvable,sha_order,sha_structure,schur,bogomolov,violations";
}

std::string report_to_csv_row(const InvariantReport& r) {
  std::string row = r.name + "," + std::to_string(r.order) + "," +
                    (r.flags.is_abelian ? "1" : "0") + "," +
                    (r.flags.is_solvable ? "1" : "0") + ",";
  if (r.sha) {
    row += std::to_string(r.sha->order) + ",";
    row += r.sha->is_abelian
               ? divisors_csv(r.sha->abelian_structure.divisors)
               : std::string("nonabelian");
  } else {
    row += ",";
  }
  row += "," + divisors_csv(r.schur) + "," + divisors_csv(r.bogomolov) + ",";
  for (size_t i = 0; i < r.violations.size(); ++i) {
    if (i) row += ";";
    row += r.violations[i];
  }
  return row;
}

}  // namespace groups
