#ifndef MLAT_RNG_HPP
#define MLAT_RNG_HPP

#include <string>
#include <vector>

#include "mlat/lattice.hpp"
#include "mlat/mask.hpp"

namespace mlat {

/// A finite rng: an abelian additive group with an associative
/// multiplication distributing over it on both sides. No multiplicative
/// identity is assumed.
struct FinRng {
  int n = 0;
  std::vector<int> add;
  std::vector<int> mul;
  int zero = -1;
  std::vector<int> neg;
  std::string name;

  int a(int x, int y) const { return add[x * n + y]; }
  int m(int x, int y) const { return mul[x * n + y]; }
  int sub(int x, int y) const { return add[x * n + neg[y]]; }
};

FinRng build_rng(int n, const std::vector<int>& add, const std::vector<int>& mul,
                 std::string name = "");

FinRng zmod(int k);          // Z/k with the usual multiplication
FinRng two_z_mod8();         // the rng 2Z/8 = {0,2,4,6} under mod-8 arithmetic
FinRng zero_mul_rng(int k);  // Z/k addition with the constant-zero multiplication

bool is_ideal(const FinRng& r, const Mask& s);

/// Smallest (two-sided) ideal containing the seed.
Mask ideal_generated(const FinRng& r, const Mask& seed);

/// All ideals, sorted by mask: principal ideals closed under sums.
std::vector<Mask> ideals(const FinRng& r, int bound = 64);

/// Additive closure of all pairwise products; checked to be an ideal
/// inside the intersection of the factors.
Mask ideal_product(const FinRng& r, const Mask& i, const Mask& j);

enum class RngMult { product, intersection, zero, ring_commutator };

/// The ideal lattice with join = ideal sum, meet = intersection, and the
/// chosen multiplication. ring_commutator uses the ideal generated by the
/// additive commutators ij - ji.
struct IdealLattice {
  MultLattice lattice;
  std::vector<Mask> ideal_masks;  // parallel to lattice elements
};

IdealLattice ideal_lattice(const FinRng& r, RngMult mult, int bound = 64);

/// x∘y = x + y + xy makes (R,∘) a monoid with identity 0. The Jacobson
/// radical is {x : yx has a left ∘-inverse for every y}; the ring is
/// radical when that is everything, equivalently when (R,∘) is a group.
struct CircleRadical {
  std::vector<int> circle;  // n*n monoid table
  Mask jacobson;
  bool is_radical_ring = false;
};

CircleRadical circle_and_radical(const FinRng& r);

}  // namespace mlat

#endif
