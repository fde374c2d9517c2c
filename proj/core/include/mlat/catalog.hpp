#ifndef MLAT_CATALOG_HPP
#define MLAT_CATALOG_HPP

#include <string>
#include <vector>

#include "mlat/brace.hpp"
#include "mlat/group.hpp"
#include "mlat/lattice.hpp"
#include "mlat/rng.hpp"

namespace mlat {

/// Powerset of `atoms` letters ordered by bitmask; multiplication is meet
/// or constant bottom.
MultLattice boolean_lattice(int atoms, bool meet_mult);

/// The two five-element non-distributive landmarks, with meet
/// multiplication: the diamond (three incomparable atoms) and the
/// pentagon (a 2-chain next to a single atom).
MultLattice m3_lattice();
MultLattice n5_lattice();

FinGroup catalog_group(const std::string& name);  // c2 c4 c2xc2 s3 d4 q8 a4 s4 a5
FinRng catalog_rng(const std::string& name);      // z4 z6 z8 2z8
SkewBrace catalog_brace(const std::string& name); // triv-c2 triv-c4 triv-s3 triv-q8 rad-2z8

/// The fixed test-bed family: all chain kinds for k = 2..5, Boolean
/// lattices with 2 and 3 atoms (meet and zero), the diamond and pentagon,
/// commutator lattices of the group catalog, product ideal lattices of
/// the rng catalog, and the brace lattices.
std::vector<std::string> catalog_names();
MultLattice catalog_lattice(const std::string& name);

}  // namespace mlat

#endif
