#ifndef MLAT_MORPHISM_HPP
#define MLAT_MORPHISM_HPP

#include <vector>

#include "mlat/lattice.hpp"

namespace mlat {

/// A structure map between two multiplicative lattices: join-preserving
/// (including the empty join, so bottom goes to bottom), top-preserving,
/// and with f(x)*f(y) <= f(x*y). `adj` is the computed right adjoint
/// u(y) = join{x : f(x) <= y}, characterized by f(x)<=y iff x<=u(y).
struct LatticeMorphism {
  MultLattice src;
  MultLattice dst;
  std::vector<int> map;  // src element -> dst element
  std::vector<int> adj;  // dst element -> src element

  int apply(int x) const { return map[x]; }
  int adjoint(int y) const { return adj[y]; }
};

/// Validates the three morphism axioms and computes the right adjoint.
/// Join preservation over arbitrary subsets reduces, in a finite lattice,
/// to binary joins plus bottom preservation, which is what gets checked.
/// Throws not_join_preserving / top_not_preserved / not_submultiplicative
/// naming a witness, and verifies the adjunction biconditional on all pairs.
LatticeMorphism morphism_build(const MultLattice& src, const MultLattice& dst,
                               const std::vector<int>& map);

}  // namespace mlat

#endif
