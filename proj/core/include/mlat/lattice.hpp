#ifndef MLAT_LATTICE_HPP
#define MLAT_LATTICE_HPP

#include <string>
#include <vector>

namespace mlat {

/// A finite bounded lattice. Elements are dense indices 0..n-1 with display
/// labels; the order and both bound operations are kept as full tables so
/// every law check is a plain table scan. In a finite lattice every element
/// is compact, so no separate compact-element set is tracked.
struct FinLattice {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<uint8_t> leq;  // n*n, leq[x*n+y] == 1 iff x <= y
  std::vector<int> join_tab;
  std::vector<int> meet_tab;
  int bottom = -1;
  int top = -1;

  bool le(int x, int y) const { return leq[x * n + y] != 0; }
  int join(int x, int y) const { return join_tab[x * n + y]; }
  int meet(int x, int y) const { return meet_tab[x * n + y]; }
  const std::string& label(int x) const { return labels[x]; }

  /// Join of an arbitrary subset; the empty join is bottom.
  int join_all(const std::vector<int>& xs) const;
  /// Meet of an arbitrary subset; the empty meet is top.
  int meet_all(const std::vector<int>& xs) const;

  /// Covering pairs (x covers y): y < x with nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;
};

/// Validates a reflexive antisymmetric relation as a bounded lattice and
/// fills in the join/meet tables by scanning upper/lower bounds of every
/// pair. Throws mlat_error with codes not_a_partial_order, no_bounds,
/// not_a_lattice.
FinLattice build_lattice(int n, const std::vector<uint8_t>& leq,
                         std::vector<std::string> labels = {});

/// A lattice together with a multiplication table satisfying
/// mul(x,y) <= meet(x,y). Nothing else is assumed of the multiplication:
/// it need not be associative, commutative, monotone, or unital.
struct MultLattice {
  FinLattice lat;
  std::vector<int> mul_tab;
  std::string name;

  int n() const { return lat.n; }
  int bottom() const { return lat.bottom; }
  int top() const { return lat.top; }
  bool le(int x, int y) const { return lat.le(x, y); }
  int join(int x, int y) const { return lat.join(x, y); }
  int meet(int x, int y) const { return lat.meet(x, y); }
  int mul(int x, int y) const { return mul_tab[x * lat.n + y]; }
  const std::string& label(int x) const { return lat.labels[x]; }
};

/// Checks mul(x,y) <= meet(x,y) for all pairs and wraps the result.
/// Throws axiom_violation naming the first failing pair (row-major scan).
MultLattice attach_multiplication(const FinLattice& lat, const std::vector<int>& mul,
                                  std::string name = "");

struct LawReport {
  bool monotone = false;        // x<=y, x'<=y'  =>  xx' <= yy'
  bool m_distributive = false;  // (x v y)z = xz v yz and symmetrically
  bool commutative = false;
  bool associative = false;
};

/// Exhaustive law scan over all pairs/triples. In a finite lattice the
/// binary m-distributivity flag also certifies the arbitrary-join form:
/// finite joins reduce by induction and the empty join is forced by
/// x*0 = 0, which the multiplication axiom already gives.
LawReport law_report(const MultLattice& m);

/// Same lattice with the symmetrized multiplication x*y v y*x. The result
/// is always commutative, and the construction is idempotent.
MultLattice square_lattice(const MultLattice& m);

/// An arbitrary binary operation on a finite carrier, used by the
/// operation-composition calculus.
struct BinOpTable {
  int n = 0;
  std::vector<int> op;  // n*n, entries in [0,n)

  int apply(int x, int y) const { return op[x * n + y]; }
};

/// Composes two operations into x |-> circ(star(x,y), star(y,x)).
/// The left projection star(x,y)=x is a two-sided identity for this
/// composition, and the composition is associative.
BinOpTable compose_operations(const BinOpTable& star, const BinOpTable& circ);

/// The interval [0,h] as a multiplicative sublattice: products of elements
/// below h stay below h. Its top is h, which in general differs from the
/// ambient top. to_parent/from_parent translate element indices.
struct IntervalSublattice {
  MultLattice m;
  std::vector<int> to_parent;
  std::vector<int> from_parent;  // -1 outside the interval
};

IntervalSublattice interval_sublattice(const MultLattice& m, int h);

enum class ChainKind { dvr, meet, zero };

/// Chain c_0 > c_1 > ... > c_{k-1} with element index i = c_i, so index 0
/// is the top. dvr: c_a * c_b = c_{min(a+b,k-1)} (the ideal chain of a
/// truncated discrete valuation ring); meet: c_{max(a,b)}; zero: constant
/// bottom.
MultLattice chain_mult_lattice(int k, ChainKind kind);

}  // namespace mlat

#endif
