// Independent reference implementations, deliberately written the dumb
// way (exhaustive subset scans) so the fast library routines have
// something honest to disagree with.
#ifndef MLAT_TESTS_ORACLES_HPP
#define MLAT_TESTS_ORACLES_HPP

#include <optional>
#include <vector>

#include "mlat/brace.hpp"
#include "mlat/group.hpp"
#include "mlat/lattice.hpp"
#include "mlat/mask.hpp"
#include "mlat/rng.hpp"

namespace mlat::oracles {

/// Every normal subgroup, found by testing all 2^n subsets. Only sane for
/// n <= 16 or so.
inline std::vector<Mask> normal_subgroups_bruteforce(const FinGroup& g) {
  std::vector<Mask> out;
  for (unsigned long long bits = 0; bits < (1ull << g.n); ++bits) {
    Mask s(g.n);
    for (int i = 0; i < g.n; ++i)
      if (bits & (1ull << i)) s.set(i);
    if (s.test(g.e) && is_subgroup(g, s) && is_normal_subgroup(g, s)) out.push_back(s);
  }
  return out;
}

/// Least ideal containing the seed, as the intersection of all ideals
/// that contain it (the enumeration route, independent of the closure
/// schedule used by generated_ideal).
inline Mask generated_ideal_bruteforce(const SkewBrace& a, const Mask& seed) {
  Mask acc = Mask::full(a.n);
  for (const Mask& i : brace_ideals(a))
    if (seed.subset_of(i)) acc = acc & i;
  return acc;
}

/// The arbitrary-join form of m-distributivity, checked over every pair
/// of subsets: (vX)(vY) must equal the join of all pairwise products.
/// Only sane for n <= 6.
inline bool m_distributive_all_subsets(const MultLattice& m) {
  const int n = m.n();
  for (unsigned xs = 0; xs < (1u << n); ++xs) {
    for (unsigned ys = 0; ys < (1u << n); ++ys) {
      std::vector<int> X, Y;
      for (int i = 0; i < n; ++i) {
        if (xs & (1u << i)) X.push_back(i);
        if (ys & (1u << i)) Y.push_back(i);
      }
      const int lhs = m.mul(m.lat.join_all(X), m.lat.join_all(Y));
      int rhs = m.bottom();
      for (int x : X)
        for (int y : Y) rhs = m.join(rhs, m.mul(x, y));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

/// Two multiplicative lattices are table-isomorphic when some bijection
/// carries order and multiplication across. Backtracking search; fine for
/// the handfuls of elements these lattices have.
inline bool table_isomorphic(const MultLattice& a, const MultLattice& b) {
  if (a.n() != b.n()) return false;
  const int n = a.n();
  std::vector<int> map(n, -1), used(n, 0);
  auto consistent = [&](int x, int y) {
    for (int z = 0; z < n; ++z) {
      if (map[z] < 0) continue;
      if (a.le(x, z) != b.le(y, map[z])) return false;
      if (a.le(z, x) != b.le(map[z], y)) return false;
      if (map[a.mul(x, z)] >= 0 && map[a.mul(x, z)] != b.mul(y, map[z])) return false;
      if (map[a.mul(z, x)] >= 0 && map[a.mul(z, x)] != b.mul(map[z], y)) return false;
    }
    if (map[a.mul(x, x)] >= 0 && map[a.mul(x, x)] != b.mul(y, y)) return false;
    return true;
  };
  auto rec = [&](auto&& self, int x) -> bool {
    if (x == n) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (a.le(i, j) != b.le(map[i], map[j])) return false;
          if (map[a.mul(i, j)] != b.mul(map[i], map[j])) return false;
        }
      return true;
    }
    for (int y = 0; y < n; ++y) {
      if (used[y] || !consistent(x, y)) continue;
      map[x] = y;
      used[y] = 1;
      if (self(self, x + 1)) return true;
      map[x] = -1;
      used[y] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace mlat::oracles

#endif
