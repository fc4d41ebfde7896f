#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "groups/cohomology.hpp"
#include "groups/family.hpp"
#include "groups/rigidity.hpp"

namespace groups {

class ResultCache;

struct WhichInvariants {
  bool sha = false;
  bool schur = false;
  bool b0 = false;
  std::vector<FamilyKind> families;
};

// Parsed from a comma list: "sha", "schur", "b0", "family:sylow", ...
WhichInvariants parse_which(const std::string& csv);

struct InvariantReport {
  std::string name;
  int order = 0;
  StructureFlags flags;
  std::optional<ShaReport> sha;
  std::map<std::string, ShaReport> family_sha;
  std::optional<std::vector<long long>> schur;
  std::optional<std::vector<long long>> bogomolov;
  std::map<std::string, double> timings_ms;
  std::map<std::string, bool> budget_exhausted;
  // Violated structural assertions (must stay empty on scans).
  std::vector<std::string> violations;
};

InvariantReport compute_invariants(const std::string& name, const FiniteGroup& g,
                                   const WhichInvariants& which, const SearchBudget& budget,
                                   ResultCache* cache = nullptr);

nlohmann::ordered_json sha_report_to_json(const ShaReport& r);
ShaReport sha_report_from_json(const nlohmann::json& j);
nlohmann::ordered_json report_to_json(const InvariantReport& r);
InvariantReport report_from_json(const nlohmann::json& j);

std::string csv_header();
std::string report_to_csv_row(const InvariantReport& r);

}  // namespace groups
