#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "groups/common.hpp"

namespace groups {

// Partition of a group's elements into conjugacy classes. Class ids are
// assigned in order of the lowest element index contained, so class 0 is
// always {identity}.
struct ConjugacyPartition {
  std::vector<int> class_of;  // element -> class id
  std::vector<Elt> reps;      // class id -> lowest element in the class
  std::vector<int> sizes;     // class id -> size

  int count() const { return static_cast<int>(reps.size()); }
};

// A finite abelian group presented by its elementary divisor chain
// d1 | d2 | ... | dk, every di >= 2. The empty chain is the trivial group.
struct AbelianGroupStructure {
  std::vector<long long> divisors;

  bool trivial() const { return divisors.empty(); }
  long long order() const {
    long long o = 1;
    for (long long d : divisors) o *= d;
    return o;
  }
  bool operator==(const AbelianGroupStructure&) const = default;
};

// A finite group as a validated multiplication table. Immutable after
// construction; safe to share across threads. Element 0 is the identity.
class FiniteGroup {
 public:
  // Validates the table (Latin square, identity at 0, associativity via
  // Light's test on a greedy generating set) and computes inverses, element
  // orders and the conjugacy partition up front.
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::vector<std::string> labels = {},
                                int max_order = kAbsoluteMaxOrder);

  static FiniteGroup trivial();

  int order() const { return n_; }
  Elt mul(Elt a, Elt b) const { return tab_[static_cast<size_t>(a) * n_ + b]; }
  Elt inv(Elt a) const { return inv_[a]; }
  // g x g^-1
  Elt conj(Elt g, Elt x) const { return mul(mul(g, x), inv(g)); }
  // x y x^-1 y^-1
  Elt commutator(Elt x, Elt y) const { return mul(mul(x, y), mul(inv(x), inv(y))); }
  Elt power(Elt x, long long k) const;
  int element_order(Elt x) const { return ord_[x]; }
  int exponent() const;

  const std::string& label(Elt x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& inverses() const { return inv_; }
  const ConjugacyPartition& classes() const { return classes_; }
  std::vector<std::vector<int>> table_rows() const;

  bool is_abelian() const;

 private:
  FiniteGroup() = default;

  int n_ = 0;
  std::vector<int> tab_;  // row-major n*n
  std::vector<int> inv_;
  std::vector<int> ord_;
  std::vector<std::string> labels_;
  ConjugacyPartition classes_;
};

// A subgroup as a sorted member list. Holds a pointer to the parent group,
// which must outlive the subgroup.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<Elt> members;  // sorted, contains 0

  int order() const { return static_cast<int>(members.size()); }
  bool contains(Elt x) const;
  bool operator==(const Subgroup& o) const { return members == o.members; }
};

// A total multiplicative map between two finite groups, recorded as the
// image vector. images[0] == 0 and images respects multiplication.
struct GroupMap {
  const FiniteGroup* domain = nullptr;
  const FiniteGroup* codomain = nullptr;
  std::vector<Elt> images;

  Elt operator()(Elt x) const { return images[x]; }
  bool is_bijective() const;
};

// Checks the homomorphism property of a candidate image vector.
bool is_homomorphism(const FiniteGroup& dom, const FiniteGroup& cod,
                     const std::vector<Elt>& images);

// Throws NotAnEndomorphism unless images defines a homomorphism.
GroupMap make_group_map(const FiniteGroup& dom, const FiniteGroup& cod,
                        std::vector<Elt> images);

struct StructureFlags {
  bool is_abelian = false;
  bool is_solvable = false;
  std::optional<int> nilpotency_class;  // absent when not nilpotent
  std::optional<int> derived_length;    // absent when not solvable
  std::optional<AbelianGroupStructure> abelian_invariants;  // present iff abelian
};

ConjugacyPartition conjugacy_classes(const FiniteGroup& g);
Subgroup center(const FiniteGroup& g);
Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Elt> seeds);
Subgroup whole_group(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);
// Subgroup of g generated by all commutators [a, b], a in A, b in B.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
bool subgroup_is_abelian(const FiniteGroup& g, const Subgroup& h);

// Coset space G/N on minimal coset representatives, with the projection
// recorded as an image vector (element of G -> quotient element index).
// The identity coset comes first. Throws NotNormal.
struct QuotientResult {
  FiniteGroup group;
  std::vector<Elt> projection;
};
QuotientResult quotient(const FiniteGroup& g, const Subgroup& n);

StructureFlags structure_flags(const FiniteGroup& g);

// Elementary divisors of an abelian group, computed from element-order
// counts per prime (no generator hunting involved). Requires g abelian.
AbelianGroupStructure abelian_invariants(const FiniteGroup& g);

// Greedy generating sequence: repeatedly adjoin the lowest-index element
// outside the closure so far. Empty for the trivial group.
std::vector<Elt> generating_sequence(const FiniteGroup& g);

// Same, but candidates restricted to `pool` first; falls back to all
// elements once the pool is exhausted (used by family computations).
std::vector<Elt> generating_sequence_from(const FiniteGroup& g, std::span<const Elt> pool);

// The subgroup as a standalone FiniteGroup with its own numbering
// (members[i] -> i after sorting so that identity is 0), plus the
// member list in new-index order.
struct ExtractedSubgroup {
  FiniteGroup group;
  std::vector<Elt> parent_of;  // new index -> parent element
};
ExtractedSubgroup subgroup_as_group(const Subgroup& h);

}  // namespace groups
