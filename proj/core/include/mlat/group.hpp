#ifndef MLAT_GROUP_HPP
#define MLAT_GROUP_HPP

#include <string>
#include <vector>

#include "mlat/lattice.hpp"
#include "mlat/mask.hpp"

namespace mlat {

/// A finite group as an explicit Cayley table over indices 0..n-1.
struct FinGroup {
  int n = 0;
  std::vector<int> tab;  // n*n
  int e = -1;
  std::vector<int> inv;
  std::string name;

  int op(int a, int b) const { return tab[a * n + b]; }
};

/// Validates associativity, identity and inverses exhaustively.
FinGroup build_group(int n, const std::vector<int>& tab, std::string name = "");

FinGroup cyclic_group(int k);
FinGroup direct_product(const FinGroup& g, const FinGroup& h);
FinGroup symmetric_group(int k);    // order k!
FinGroup alternating_group(int k);  // order k!/2
FinGroup dihedral_group(int k);     // order 2k
FinGroup quaternion_group();        // order 8

/// Complete multiplication table of a subgroup membership test.
bool is_subgroup(const FinGroup& g, const Mask& s);
bool is_normal_subgroup(const FinGroup& g, const Mask& s);

/// Subgroup generated by a set (always contains the identity).
Mask generated_subgroup(const FinGroup& g, const Mask& seed);

/// All normal subgroups, sorted by mask. A normal subgroup is the join of
/// the normal closures of its elements' conjugacy classes, so closing the
/// class-closure seeds under join reaches exactly the normal subgroups.
std::vector<Mask> normal_subgroups(const FinGroup& g, int bound = 128);

/// Subgroup generated by the commutators a'b'ab with a in A, b in B.
/// Requires both inputs normal; the result is then itself normal and lies
/// inside both A and B.
Mask commutator_subgroup(const FinGroup& g, const Mask& a, const Mask& b);

/// An acting group given by automorphism generators of `group`'s carrier.
struct GroupAction {
  FinGroup group;
  std::vector<std::vector<int>> gens;  // each a permutation of 0..n-1
};

/// The full automorphism group as an action (permutation enumeration, so
/// only sensible for small carriers).
GroupAction automorphism_action(const FinGroup& g, int bound = 8);

enum class GroupMult { commutator, intersection, zero };

/// The normal-subgroup lattice with the chosen multiplication. With an
/// action present, only action-invariant normal subgroups are kept (the
/// invariant-subgroup lattice of the acted-on group). Join is the product
/// subgroup AB, meet is intersection; both are asserted to agree with the
/// order-derived tables.
struct NormalLattice {
  MultLattice lattice;
  std::vector<Mask> subgroups;  // parallel to lattice elements
};

NormalLattice normal_mult_lattice(const FinGroup& g, GroupMult mult,
                                  const GroupAction* action = nullptr, int bound = 128);

/// Group-theoretic verdicts computed directly on subgroups, plus agreement
/// with the element classification of top in the commutator lattice
/// (nilpotent ~ left nilpotent, solvable ~ solvable, abelian ~ abelian,
/// perfect ~ idempotent). Disagreement is an implementation bug.
struct GroupClassification {
  bool nilpotent = false;
  bool solvable = false;
  bool abelian = false;
  bool perfect = false;
  bool lattice_agrees = false;
};

GroupClassification classify_group(const FinGroup& g, int bound = 128);

}  // namespace mlat

#endif
