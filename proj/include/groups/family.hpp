#pragma once

#include <string>
#include <vector>

#include "groups/rigidity.hpp"
#include "groups/subgroups.hpp"

namespace groups {

enum class FamilyKind { Cyclic, Abelian, Bicyclic, Nilpotent, Sylow, Custom };

struct FamilySpec {
  FamilyKind kind = FamilyKind::Cyclic;
  std::vector<Subgroup> custom_members;  // required iff Custom
};

// CLI strings: "cyclic", "abelian", "bicyclic", "nilpotent", "sylow".
// ("custom:@file" is resolved by the CLI layer before this call.)
FamilyKind parse_family_kind(const std::string& s);
std::string family_kind_name(FamilyKind k);

// The automorphisms locally inner on every family member: phi such that for
// each subgroup there is a single conjugator a with phi(y) = a y a^-1 on the
// whole subgroup. Conjugacy representatives of the family suffice, because
// the single-conjugator condition transfers along conjugation.
std::vector<std::vector<Elt>> family_locally_inner_automorphisms(
    const FiniteGroup& g, const FamilySpec& family, const SearchBudget& budget = {});

// Sha_F(G): the group above modulo Inn(G). For kind = Sylow these are the
// Coleman automorphisms modulo inner. When G itself belongs to the family
// the condition degenerates to "phi is inner" and the report is trivial by
// construction.
ShaReport sha_family(const FiniteGroup& g, const FamilySpec& family,
                     const SearchBudget& budget = {});

struct FamilyChainReport {
  ShaReport sha_cyclic;    // = Sha(G)
  ShaReport sha_abelian;   // Sha_A(G)
  ShaReport sha_nilpotent; // Sha_N(G)
  bool chain_holds = false;  // Sha_N <= Sha_A <= Sha as automorphism sets
};
FamilyChainReport family_chain_check(const FiniteGroup& g, const SearchBudget& budget = {});

}  // namespace groups
