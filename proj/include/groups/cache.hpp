#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include <json.hpp>

#include "groups/group.hpp"

namespace groups {

// Single-file result store keyed by (group fingerprint, invariant, budget).
// A version stamp in the key invalidates entries across releases.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path file);

  std::optional<nlohmann::json> get(const std::string& key);
  void put(const std::string& key, nlohmann::json value);
  void flush();

  static std::string key_for(const FiniteGroup& g, const std::string& invariant,
                             const SearchBudget& budget);

 private:
  std::filesystem::path file_;
  std::mutex mu_;
  std::map<std::string, nlohmann::json> entries_;
  bool dirty_ = false;
};

}  // namespace groups
