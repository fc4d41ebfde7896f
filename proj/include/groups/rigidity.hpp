#pragma once

#include <optional>
#include <vector>

#include "groups/group.hpp"

namespace groups {

// A set of automorphisms of one base group, stored as sorted image vectors.
struct AutomorphismGroup {
  const FiniteGroup* base = nullptr;
  std::vector<std::vector<Elt>> elements;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(const std::vector<Elt>& images) const;
  // Verifies closure under composition and inversion (testing hook).
  bool is_closed() const;
};

std::vector<Elt> compose_automorphisms(const std::vector<Elt>& a, const std::vector<Elt>& b);
std::vector<Elt> invert_automorphism(const std::vector<Elt>& a);

// Inn(G) = {x -> g x g^-1}; |Inn(G)| = |G| / |Z(G)|.
AutomorphismGroup inner_automorphisms(const FiniteGroup& g);

// Full Aut(G) by backtracking over generator images, pruned by element order
// and conjugacy class size.
AutomorphismGroup automorphism_group(const FiniteGroup& g, const SearchBudget& budget = {});

// Aut_c(G): automorphisms mapping every element inside its conjugacy class.
// The search restricts generator images to the generator's class and then
// filters by the all-elements condition.
AutomorphismGroup class_preserving_automorphisms(const FiniteGroup& g,
                                                 const SearchBudget& budget = {});

// End_c(G): all endomorphisms g with g(x) conjugate to x for every x, found
// without assuming bijectivity (capped at budget.endo_max_order). For finite
// groups these all turn out bijective; callers check that, not this routine.
std::vector<std::vector<Elt>> locally_inner_endomorphisms(const FiniteGroup& g,
                                                          const SearchBudget& budget = {});

// The group Sha(G) = Out_c(G) = Aut_c(G)/Inn(G) on canonical coset
// representatives, with its structure analyzed.
struct ShaReport {
  long long order = 1;
  bool is_trivial = true;
  bool is_abelian = true;
  AbelianGroupStructure abelian_structure;       // meaningful when abelian
  bool is_solvable = true;
  std::optional<int> nilpotency_class = 0;
  std::optional<int> derived_length = 0;
  // Lexicographically least non-inner class-preserving image vector.
  std::optional<std::vector<Elt>> witness;
  // Out_c on coset representatives (kept for isomorphism cross-checks).
  std::optional<FiniteGroup> quotient_group;
};

ShaReport sha(const FiniteGroup& g, const SearchBudget& budget = {});

// Builds the quotient report for any subgroup of Aut(G) containing Inn(G),
// given as image vectors. Shared by sha() and the family variants.
ShaReport quotient_report(const FiniteGroup& g, const AutomorphismGroup& inn,
                          const std::vector<std::vector<Elt>>& subgroup_of_aut);

bool a_rigid(const FiniteGroup& g, const SearchBudget& budget = {});
bool b_rigid(const FiniteGroup& g, const SearchBudget& budget = {});
bool sha_rigid(const FiniteGroup& g, const SearchBudget& budget = {});

// Conjugation-action 1-cocycle f: G -> G with f(1) = 1 and
// f(xy) = f(x) * (x f(y) x^-1).
struct Cocycle {
  const FiniteGroup* group = nullptr;
  std::vector<Elt> values;
};

bool is_cocycle(const FiniteGroup& g, const std::vector<Elt>& values);

// Mazur's correspondence: f <-> g with g(x) = f(x) x. Round trips exactly;
// f is a coboundary iff the endomorphism is inner.
GroupMap cocycle_to_endo(const Cocycle& f);
Cocycle endo_to_cocycle(const GroupMap& g);

// Conjugator a with f(x) = a x a^-1 x^-1 for all x, when one exists.
std::optional<Elt> coboundary_conjugator(const Cocycle& f);

}  // namespace groups
