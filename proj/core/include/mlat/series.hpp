#ifndef MLAT_SERIES_HPP
#define MLAT_SERIES_HPP

#include <optional>
#include <vector>

#include "mlat/lattice.hpp"

namespace mlat {

enum class SeriesKind { lower_central_left, lower_central_right, derived, upper_central };

/// One iterated series. Terms run until the first repetition and include
/// it, so the last two entries of a completed trace are equal. Descending
/// kinds stabilize when they reach bottom; the ascending one when it
/// reaches top.
struct SeriesTrace {
  SeriesKind kind{};
  std::vector<int> terms;
  bool stabilized = false;
  int reached = -1;
};

struct SeriesBundle {
  SeriesTrace lcs_left;   // x, x*x, (x*x)*x, ...   (x_{n+1} = x_n * x)
  SeriesTrace lcs_right;  // x, x*x, x*(x*x), ...   (_{n+1}x = x * _nx)
  SeriesTrace derived;    // x, x*x, x^(n) * x^(n), ...
};

SeriesBundle series(const MultLattice& m, int x);

/// Element-level classification: left/right nilpotent = the corresponding
/// lower central series reaches bottom; solvable = the derived series
/// does; abelian = x*x is bottom; idempotent = x*x is x.
struct ClassificationFlags {
  bool left_nilpotent = false;
  bool right_nilpotent = false;
  bool solvable = false;
  bool abelian = false;
  bool idempotent = false;
  int derived_element = -1;  // x * x
};

ClassificationFlags classify(const MultLattice& m, int x);

/// Annihilators exist as joins only under m-distributivity; elsewhere the
/// candidate join may fail the zero test, in which case the value is
/// absent ("undefined") rather than wrong. Centers inherit that.
struct AnnihilatorReport {
  std::optional<int> r_ann;     // greatest y with x*y = 0, when the join qualifies
  std::optional<int> l_ann;     // greatest y with y*x = 0
  std::optional<int> r_center;  // x ^ r_ann
  std::optional<int> l_center;  // x ^ l_ann
};

AnnihilatorReport annihilators(const MultLattice& m, int x);

/// z_0 = bottom, z_{k+1} = join of {z : z*top <= z_k}. Each candidate set
/// contains z_k itself, so the series ascends. When the join fails its own
/// bound (possible without m-distributivity) the series stops there and
/// undefined_step is set; the hypercenter is the largest defined term.
struct UpperCentralReport {
  SeriesTrace trace;
  bool undefined_step = false;
  int hypercenter = -1;
  bool hypercentral = false;
};

UpperCentralReport upper_central_series(const MultLattice& m);

/// The six equivalent no-prime conditions, computed independently:
/// (a) top is the unique semiprime element;
/// (b) every x != top has some y > x with y*y <= x;
/// (c) an ascending chain from bottom to top with each step's square below
///     the previous term exists (a greedy chain is built as witness);
/// (d) there are no prime elements;
/// (e) the meet of all primes is top;
/// (f) every m-system contains bottom — exhaustive for n <= 12, otherwise
///     inferred from (d) and flagged.
/// Their equivalence is a theorem for m-distributive lattices, which is
/// the required precondition, so agree is asserted.
struct HyperabelianReport {
  bool cond_a = false, cond_b = false, cond_c = false;
  bool cond_d = false, cond_e = false, cond_f = false;
  bool cond_f_inferred = false;
  bool agree = false;
  bool hyperabelian = false;
  std::optional<std::vector<int>> chain_witness;
  int spec_size = 0;
};

HyperabelianReport hyperabelian_report(const MultLattice& m);

/// For n <= h with bottom prime in [0,n]: inside [0,h] the two annihilators
/// of n coincide and give the unique prime p of [0,h] with p ^ n = bottom.
struct AnnihilatorPrimeCheck {
  bool holds = false;
  int p = -1;  // the prime, as an element of the ambient lattice
};

AnnihilatorPrimeCheck annihilator_prime_lemma_check(const MultLattice& m, int h, int n);

}  // namespace mlat

#endif
