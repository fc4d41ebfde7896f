#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groups/group.hpp"

namespace groups {

FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);                 // order 2n
FiniteGroup generalized_quaternion_group(int order);  // order 2^k, k >= 3
FiniteGroup symmetric_group(int n);                // n <= 7
FiniteGroup alternating_group(int n);              // n <= 7
FiniteGroup elementary_abelian_group(int p, int k);
FiniteGroup heisenberg_group(int p);               // unitriangular 3x3 over F_p

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// action[h] is the image vector of an automorphism of N; the whole vector
// must be a homomorphism H -> Aut(N). Throws InvalidAction otherwise.
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<Elt>>& action);

// (A x B) / {(z, theta(z)^-1)}, where theta is the isomorphism of central
// subgroups determined by the generator pairs (a_i -> b_i).
FiniteGroup central_product(const FiniteGroup& a, const FiniteGroup& b,
                            const std::vector<std::pair<Elt, Elt>>& identification);

// Extraspecial group of order p^(2m+1), built as an iterated central product
// of the two order-p^3 blocks. sign '+': all blocks of the plus type
// (dihedral for p = 2, exponent p for odd p); sign '-': one minus block.
// Requires p * p^(2m+1) <= 512.
FiniteGroup extraspecial_group(int p, int two_m_plus_1, char sign);

// Builder specs: "cyclic:6", "dihedral:4", "quaternion:16", "sym:4",
// "alt:5", "elem:2,3", "heisenberg:3", "extraspecial:2,3,+", and direct
// products joined with '*'. Throws ParseError on bad input.
FiniteGroup build(const std::string& name_spec);

// Multiset of (element order, conjugacy class size) pairs, sorted.
using Fingerprint = std::vector<std::pair<int, int>>;
Fingerprint fingerprint_of(const FiniteGroup& g);
std::string fingerprint_key(const FiniteGroup& g);  // compact string form

enum class CorpusSource { Builtin, FileImport };

struct CorpusEntry {
  std::string name;
  FiniteGroup group;
  CorpusSource source = CorpusSource::FileImport;
  Fingerprint fingerprint;
  // Name of an earlier entry this one is isomorphic to, when the duplicate
  // flagging pass finds one.
  std::optional<std::string> duplicate_of;
};

struct CorpusIssue {
  std::string file;
  std::string message;
};

// Loads every group file in the directory (via manifest.json when present,
// else all *.json in name order). Parse and validation failures are
// collected per file, not fatal. Throws DuplicateName on name collisions.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir,
                                     std::vector<CorpusIssue>* issues = nullptr,
                                     const SearchBudget& budget = {});

}  // namespace groups
