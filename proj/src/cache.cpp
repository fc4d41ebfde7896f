#include "groups/cache.hpp"

#include <fstream>

#include "groups/catalog.hpp"

namespace groups {

namespace {
constexpr const char* kCacheVersion = "1";
}

ResultCache::ResultCache(std::filesystem::path file) : file_(std::move(file)) {
  std::ifstream in(file_);
  if (!in) return;
  try {
    nlohmann::json j;
    in >> j;
    for (auto& [k, v] : j.items()) entries_[k] = v;
  } catch (const nlohmann::json::exception&) {
    entries_.clear();  // unreadable cache: start over
  }
}

std::optional<nlohmann::json> ResultCache::get(const std::string& key) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::put(const std::string& key, nlohmann::json value) {
  std::lock_guard<std::mutex> lock(mu_);
  entries_[key] = std::move(value);
  dirty_ = true;
}

void ResultCache::flush() {
  std::lock_guard<std::mutex> lock(mu_);
  if (!dirty_) return;
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : entries_) j[k] = v;
  std::ofstream out(file_);
  if (out) {
    out << j.dump() << "\n";
    dirty_ = false;
  }
}

std::string ResultCache::key_for(const FiniteGroup& g, const std::string& invariant,
                                 const SearchBudget& budget) {
  // The fingerprint alone is not an isomorphism invariant key, so the full
  // table goes into the hash.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(g.order()));
  for (Elt x = 0; x < g.order(); ++x)
    for (Elt y = 0; y < g.order(); ++y) mix(static_cast<std::uint64_t>(g.mul(x, y)));
  return std::string(kCacheVersion) + ":" + fingerprint_key(g) + ":" + std::to_string(h) +
         ":" + invariant + ":n" + std::to_string(budget.nodes) + ":e" +
         std::to_string(budget.endo_max_order) + ":s" +
         std::to_string(budget.subgroup_max_order) + ":c" +
         std::to_string(budget.cohomology_max_order);
}

}  // namespace groups
