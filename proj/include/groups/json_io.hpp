#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "groups/group.hpp"

namespace groups {

// Group table file: {"order": n, "labels": [...], "table": [[...]]},
// row-major, 0-based entries, row/column 0 is the identity.
FiniteGroup group_from_table_json(const nlohmann::json& j, int max_order = kAbsoluteMaxOrder);
nlohmann::ordered_json group_to_table_json(const FiniteGroup& g);

// Permutation generator file: {"degree": d, "generators": [[...], ...]},
// one-line images, 0-based. The loader closes the generators (cap 512) and
// builds the induced multiplication table.
FiniteGroup group_from_permutations_json(const nlohmann::json& j, int max_order = 512);

// Loads either format from a file, sniffing by the keys present.
FiniteGroup load_group_source_file(const std::filesystem::path& file,
                                   const SearchBudget& budget = {});

// (name, path) pairs for a corpus directory: manifest.json when present
// ({"groups": [{"name": ..., "file": ...}]}), else every *.json sorted by
// filename with the stem as name.
std::vector<std::pair<std::string, std::filesystem::path>> corpus_file_list(
    const std::filesystem::path& dir);

void write_json_file(const std::filesystem::path& file, const nlohmann::ordered_json& j);
nlohmann::json read_json_file(const std::filesystem::path& file);

}  // namespace groups
