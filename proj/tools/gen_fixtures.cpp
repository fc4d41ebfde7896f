// Regenerates the bundled small-group fixture corpus: every group of order
// 1..32 plus order 81, one multiplication table per isomorphism type. The
// per-order counts are checked against the classical census before anything
// is written, so a generation bug cannot silently ship fixtures.
//
// Usage: gen_fixtures [fixtures_dir]

#include <cstdio>
#include <filesystem>
#include <map>
#include <string>

#include "groups/json_io.hpp"
#include "groups/smallgroups.hpp"

namespace fs = std::filesystem;
using namespace groups;

namespace {

// Number of groups of each order (classical census).
const std::map<int, int> kGroupCounts = {
    {1, 1},   {2, 1},  {3, 1},  {4, 2},  {5, 1},  {6, 2},  {7, 1},  {8, 5},
    {9, 2},   {10, 2}, {11, 1}, {12, 5}, {13, 1}, {14, 2}, {15, 1}, {16, 14},
    {17, 1},  {18, 5}, {19, 1}, {20, 5}, {21, 2}, {22, 2}, {23, 1}, {24, 15},
    {25, 2},  {26, 2}, {27, 5}, {28, 4}, {29, 1}, {30, 4}, {31, 1}, {32, 51},
    {81, 15},
};

std::string group_name(int order, int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "o%02d_i%02d", order, index + 1);
  return buf;
}

void write_dir(const fs::path& dir, const std::vector<std::pair<std::string, const FiniteGroup*>>& groups) {
  fs::create_directories(dir);
  nlohmann::ordered_json manifest;
  manifest["groups"] = nlohmann::ordered_json::array();
  for (const auto& [name, g] : groups) {
    const std::string file = name + ".json";
    write_json_file(dir / file, group_to_table_json(*g));
    manifest["groups"].push_back({{"name", name}, {"file", file}});
  }
  write_json_file(dir / "manifest.json", manifest);
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path root = argc > 1 ? argv[1] : "fixtures";
  SearchBudget budget;
  SmallGroups catalog(budget);

  std::map<int, const std::vector<FiniteGroup>*> generated;
  for (const auto& [order, expected] : kGroupCounts) {
    std::printf("order %d ... ", order);
    std::fflush(stdout);
    const auto& groups = catalog.of_order(order);
    std::printf("%zu groups\n", groups.size());
    if (static_cast<int>(groups.size()) != expected) {
      std::fprintf(stderr, "FATAL: order %d produced %zu groups, census says %d\n", order,
                   groups.size(), expected);
      return 1;
    }
    generated[order] = &groups;
  }

  std::vector<std::pair<std::string, const FiniteGroup*>> lt32, o32, o81;
  for (const auto& [order, groups] : generated) {
    for (size_t i = 0; i < groups->size(); ++i) {
      const std::string name = group_name(order, static_cast<int>(i));
      if (order < 32)
        lt32.emplace_back(name, &(*groups)[i]);
      else if (order == 32)
        o32.emplace_back(name, &(*groups)[i]);
      else
        o81.emplace_back(name, &(*groups)[i]);
    }
  }
  write_dir(root / "order_lt_32", lt32);
  write_dir(root / "order_32", o32);
  write_dir(root / "order_81", o81);
  std::printf("wrote %zu + %zu + %zu fixtures under %s\n", lt32.size(), o32.size(), o81.size(),
              root.string().c_str());
  return 0;
}
