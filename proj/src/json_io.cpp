#include "groups/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

namespace groups {

using nlohmann::json;
using nlohmann::ordered_json;

FiniteGroup group_from_table_json(const json& j, int max_order) {
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw ParseError(j.is_object() ? "table" : j.dump().substr(0, 32),
                     "group table file needs 'order' and 'table'");
  const int n = j.at("order").get<int>();
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(table.size()) != n)
    throw ParseError("table", "table row count does not match order");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return FiniteGroup::from_table(std::move(table), std::move(labels), max_order);
}

ordered_json group_to_table_json(const FiniteGroup& g) {
  ordered_json j;
  j["order"] = g.order();
  j["labels"] = g.labels();
  j["table"] = g.table_rows();
  return j;
}

FiniteGroup group_from_permutations_json(const json& j, int max_order) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    throw ParseError("degree", "permutation file needs 'degree' and 'generators'");
  const int degree = j.at("degree").get<int>();
  auto gens = j.at("generators").get<std::vector<std::vector<int>>>();
  if (degree < 1) throw ParseError("degree", "degree must be positive");

  using Perm = std::vector<int>;
  for (const Perm& g : gens) {
    if (static_cast<int>(g.size()) != degree)
      throw ParseError("generators", "generator length does not match degree");
    Perm s = g;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < degree; ++i)
      if (s[i] != i) throw ParseError("generators", "generator is not a permutation of 0..d-1");
  }

  Perm id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  std::set<Perm> seen{id};
  std::vector<Perm> elems{id};
  auto compose = [](const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
  };
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const Perm& g : gens) {
      Perm p = compose(elems[i], g);
      if (seen.insert(p).second) {
        if (static_cast<int>(elems.size()) + 1 > max_order)
          throw OrderCapExceeded("permutation closure exceeds cap " + std::to_string(max_order));
        elems.push_back(std::move(p));
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  std::map<Perm, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<int>(i));
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j2 = 0; j2 < n; ++j2) table[i][j2] = index.at(compose(elems[i], elems[j2]));
  return FiniteGroup::from_table(std::move(table));
}

FiniteGroup load_group_source_file(const std::filesystem::path& file,
                                   const SearchBudget& budget) {
  const json j = read_json_file(file);
  if (j.is_object() && j.contains("generators"))
    return group_from_permutations_json(j, std::min(budget.table_max_order, 512));
  return group_from_table_json(j, budget.table_max_order);
}

std::vector<std::pair<std::string, std::filesystem::path>> corpus_file_list(
    const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ParseError(dir.string(), "corpus directory does not exist");
  std::vector<std::pair<std::string, fs::path>> out;
  const fs::path manifest = dir / "manifest.json";
  if (fs::exists(manifest)) {
    const json j = read_json_file(manifest);
    if (!j.contains("groups")) throw ParseError("groups", "manifest needs a 'groups' array");
    for (const auto& e : j.at("groups"))
      out.emplace_back(e.at("name").get<std::string>(),
                       dir / e.at("file").get<std::string>());
    return out;
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) out.emplace_back(f.stem().string(), f);
  return out;
}

void write_json_file(const std::filesystem::path& file, const ordered_json& j) {
  std::ofstream out(file);
  if (!out) throw GroupError("cannot write " + file.string());
  out << j.dump() << "\n";
}

json read_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError(file.string(), "cannot open file");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(file.filename().string(), std::string("invalid JSON: ") + e.what());
  }
  return j;
}

}  // namespace groups
