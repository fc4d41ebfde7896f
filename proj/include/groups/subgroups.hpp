#pragma once

#include <vector>

#include "groups/group.hpp"

namespace groups {

enum class SubgroupKind { Cyclic, Bicyclic, Abelian, Nilpotent, Sylow, All };

struct SubgroupEnumOptions {
  bool up_to_conjugacy = false;
  int sylow_p = 0;  // required for SubgroupKind::Sylow
  SearchBudget budget;
};

// Enumerates subgroups of the given kind, deduplicated, in deterministic
// (order, member-list) order. With up_to_conjugacy set, returns the
// lexicographically least member of each conjugation orbit.
//
// Cyclic:   <x> for every x.
// Bicyclic: <x, y> for every commuting pair (includes all cyclic ones).
// Abelian:  all abelian subgroups, grown by centralizing extensions.
// Sylow:    the maximal p-subgroups (all conjugate).
// All:      the full subgroup lattice; Nilpotent filters it. Both throw
//           BudgetExceeded above budget.subgroup_max_order.
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, SubgroupKind kind,
                                          const SubgroupEnumOptions& opt = {});

// One conjugation-orbit representative per subgroup (lex-least member list).
std::vector<Subgroup> conjugacy_representatives(const FiniteGroup& g,
                                                const std::vector<Subgroup>& subs);

}  // namespace groups
