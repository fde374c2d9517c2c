#include "mlat/morphism.hpp"

#include "mlat/errors.hpp"

namespace mlat {

LatticeMorphism morphism_build(const MultLattice& src, const MultLattice& dst,
                               const std::vector<int>& map) {
  int n = src.n();
  if ((int)map.size() != n)
    throw mlat_error(errc::size_mismatch, "map length differs from source size");
  for (int x = 0; x < n; ++x) {
    if (map[x] < 0 || map[x] >= dst.n())
      throw mlat_error(errc::validation_error, "map value out of range at " + src.label(x));
  }

  if (map[src.top()] != dst.top())
    throw mlat_error(errc::top_not_preserved,
                     "f(" + src.label(src.top()) + ") = " + dst.label(map[src.top()]));
  if (map[src.bottom()] != dst.bottom())
    throw mlat_error(errc::not_join_preserving,
                     "empty join: f(" + src.label(src.bottom()) + ") = " +
                         dst.label(map[src.bottom()]));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (map[src.join(x, y)] != dst.join(map[x], map[y]))
        throw mlat_error(errc::not_join_preserving,
                         "f(" + src.label(x) + " v " + src.label(y) + ") != f(" + src.label(x) +
                             ") v f(" + src.label(y) + ")");
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!dst.le(dst.mul(map[x], map[y]), map[src.mul(x, y)]))
        throw mlat_error(errc::not_submultiplicative,
                         "f(" + src.label(x) + ")f(" + src.label(y) + ") is not below f(" +
                             src.label(x) + "*" + src.label(y) + ")");
    }
  }

  LatticeMorphism f;
  f.src = src;
  f.dst = dst;
  f.map = map;
  f.adj.resize(dst.n());
  for (int y = 0; y < dst.n(); ++y) {
    int u = src.bottom();
    for (int x = 0; x < n; ++x) {
      if (dst.le(map[x], y)) u = src.join(u, x);
    }
    f.adj[y] = u;
  }

  // The adjunction f(x) <= y iff x <= u(y) is a theorem for join-preserving
  // maps between complete lattices, so a failure here is an implementation
  // bug, not an input error.
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < dst.n(); ++y) {
      if (dst.le(map[x], y) != src.le(x, f.adj[y]))
        throw falsification_error("adjunction biconditional failed at (" + src.label(x) + "," +
                                  dst.label(y) + ")");
    }
  }
  return f;
}

}  // namespace mlat
