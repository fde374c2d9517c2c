#ifndef MLAT_DOT_HPP
#define MLAT_DOT_HPP

#include <string>

#include "mlat/lattice.hpp"

namespace mlat {

/// Hasse diagram: one node per element, a directed edge from each cover
/// to the element it covers, primes drawn with a doubled border.
std::string hasse_dot(const MultLattice& m);

/// Specialization order on the spectrum: nodes are the primes, edges are
/// the covering pairs of the order they inherit from the lattice.
std::string spec_dot(const MultLattice& m);

}  // namespace mlat

#endif
