#ifndef MLAT_BRACE_HPP
#define MLAT_BRACE_HPP

#include <string>
#include <utility>
#include <vector>

#include "mlat/group.hpp"
#include "mlat/lattice.hpp"
#include "mlat/mask.hpp"
#include "mlat/rng.hpp"

namespace mlat {

/// A finite (left) skew brace: two group structures circ and star on one
/// carrier, sharing their identity, tied by
///   a o (b * c) = (a o b) * a^{-1} * (a o c)
/// where a^{-1} is the star-inverse. The circ-inverse is written a'.
struct SkewBrace {
  int n = 0;
  std::vector<int> circ;
  std::vector<int> star;
  int e = -1;
  std::vector<int> inv_circ;
  std::vector<int> inv_star;
  std::string name;

  int c(int a, int b) const { return circ[a * n + b]; }
  int s(int a, int b) const { return star[a * n + b]; }
};

/// Validates both groups, the shared identity, and the brace law on all
/// triples.
SkewBrace build_brace(int n, const std::vector<int>& circ, const std::vector<int>& star,
                      std::string name = "");

/// Both operations equal to the group's: the brace law degenerates to
/// associativity.
SkewBrace trivial_brace(const FinGroup& g);

/// star = ring addition, circ = the circle operation x+y+xy; a group
/// exactly when the rng is radical.
SkewBrace brace_from_radical_rng(const FinRng& r);

/// lambda_a(b) = a^{-1} * (a o b). Each lambda_a is verified to be a
/// star-automorphism and a -> lambda_a a homomorphism out of (A,o);
/// action.gens[a] is lambda_a, indexed by brace element.
struct LambdaAction {
  GroupAction action;
};

LambdaAction lambda_action(const SkewBrace& a);

/// The group on A x A with (a1,a2)(b1,b2) = (a1 * a2^{-1} * (a2 o b1),
/// a2 o b2); pair (x,y) has index x*n + y.
FinGroup semidirect_product(const SkewBrace& a);

/// r(x,y) = (u, u' o x o y) with u = lambda_x(y). Bijectivity and the
/// braid relation hold for every valid skew brace and are asserted;
/// involutivity is a genuine flag (it holds e.g. for radical-rng braces).
struct YbeReport {
  std::vector<std::pair<int, int>> r;  // entry x*n + y
  bool bijective = false;
  bool braid_holds = false;
  bool involutive = false;
};

YbeReport ybe_solution(const SkewBrace& a);

/// An ideal: a subgroup normal in both groups whose circ- and star-cosets
/// coincide for every element of A.
bool is_brace_ideal(const SkewBrace& a, const Mask& s);

/// All ideals, sorted by mask. Also asserts the ideal <-> congruence
/// bijection: coset partitions are two-operation congruences, and every
/// such congruence arises as the coset partition of its class of e.
std::vector<Mask> brace_ideals(const SkewBrace& a, int bound = 16);

/// Least ideal containing the seed, by the alternating closure schedule:
/// star-normal closure, circ-normal closure, then the union of all
/// lambda_a images, repeated to a fixpoint.
Mask generated_ideal(const SkewBrace& a, const Mask& seed);

/// Ideal generated by both projections of the commutator [IxI, JxJ]
/// inside the semidirect product; always lands inside the intersection.
Mask brace_ideal_product(const SkewBrace& a, const Mask& i, const Mask& j);

/// The ideal lattice: join = generated ideal of the union, meet =
/// intersection, multiplication = brace_ideal_product.
struct BraceLattice {
  MultLattice lattice;
  std::vector<Mask> ideal_masks;  // parallel to lattice elements
};

BraceLattice brace_lattice(const SkewBrace& a, int bound = 16);

/// The right center of the top ideal: the largest ideal I with
/// product(A, I) trivial.
Mask socle(const SkewBrace& a, int bound = 16);

/// Brace structure on the cosets modulo an ideal.
SkewBrace quotient_brace(const SkewBrace& a, const Mask& i);

}  // namespace mlat

#endif
