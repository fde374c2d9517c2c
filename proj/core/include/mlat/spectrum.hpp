#ifndef MLAT_SPECTRUM_HPP
#define MLAT_SPECTRUM_HPP

#include <optional>
#include <vector>

#include "mlat/lattice.hpp"
#include "mlat/mask.hpp"
#include "mlat/morphism.hpp"

namespace mlat {

/// Per-element flags. prime: p != top and xy <= p forces x <= p or y <= p.
/// semiprime: x*x <= s forces x <= s. meet_irreducible: q != top and
/// q = x ^ y forces q = x or q = y (the top is excluded so that, on
/// m-distributive lattices, prime coincides exactly with meet-irreducible
/// semiprime; the empty meet is top, so top is never "irreducible" here).
/// idempotent: x*x = x. abelian: x*x = bottom.
struct ElementClassification {
  std::vector<uint8_t> prime;
  std::vector<uint8_t> semiprime;
  std::vector<uint8_t> meet_irreducible;
  std::vector<uint8_t> idempotent;
  std::vector<uint8_t> abelian;

  std::vector<int> primes() const;
  std::vector<int> semiprimes() const;
};

ElementClassification classify_elements(const MultLattice& m);

/// The prime elements with their closed-set topology. v_of[x] is
/// V(x) = {p prime : x <= p} as a bit mask over spec positions. The family
/// {V(x)} is already closed under finite unions (V(xy) = V(x) u V(y)) and
/// intersections (V(x v y) = V(x) n V(y)); both laws are asserted here.
struct ZariskiTopology {
  std::vector<int> spec;  // prime elements, ascending element index
  std::vector<Mask> v_of;
  std::vector<Mask> closed_sets;  // deduplicated, mask order

  int spec_index(int p) const;  // position of prime p in spec, -1 if absent
};

ZariskiTopology zariski(const MultLattice& m);

/// A space is sober when every irreducible closed set is the closure of
/// exactly one point. `witness` is a violating closed set when not sober.
struct SoberReport {
  bool sober = false;
  std::optional<Mask> witness;
};

SoberReport check_sober(const ZariskiTopology& t);

/// iv_fixed lists the elements with x = I(V(x)) = meet of all primes above
/// x — equivalently, the elements that are meets of sets of primes. That
/// sub-poset is checked to be a distributive lattice under its induced
/// order (always a theorem); its equality with the semiprime set is a
/// theorem only under m-distributivity and is asserted exactly then,
/// reported as `semiprime_match` otherwise.
struct GaloisReport {
  std::vector<int> iv_fixed;
  bool semiprime_match = false;
  bool rad_distributive = false;
};

GaloisReport galois(const MultLattice& m);

/// S is an m-system when every pair x,y in S has some z in S with
/// z <= x*y. For an m-system in an m-distributive lattice, any maximal
/// element of {y : no c in S has c <= y} is prime; max_avoiding_prime is
/// the lowest-index such maximal element, absent when the set is empty.
struct MSystemReport {
  bool is_m_system = false;
  std::optional<int> max_avoiding_prime;
};

MSystemReport m_system_tools(const MultLattice& m, const std::vector<int>& elems);

/// The spectral map of a morphism: each prime p of the target is sent to
/// adj[p], which is prime in the source; preimages of closed sets are
/// closed (preimage of V(x) is V(f(x)), checked for every x).
struct SpecMapReport {
  std::vector<int> dst_spec;
  std::vector<int> point_map;  // parallel to dst_spec, elements of src
  bool continuous = false;
};

SpecMapReport spec_map(const LatticeMorphism& f);

}  // namespace mlat

#endif
