#include "mlat/lattice.hpp"

#include <algorithm>

#include "mlat/errors.hpp"

namespace mlat {

int FinLattice::join_all(const std::vector<int>& xs) const {
  int acc = bottom;
  for (int x : xs) acc = join(acc, x);
  return acc;
}

int FinLattice::meet_all(const std::vector<int>& xs) const {
  int acc = top;
  for (int x : xs) acc = meet(acc, x);
  return acc;
}

std::vector<std::pair<int, int>> FinLattice::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !le(y, x)) continue;
      bool gap = true;
      for (int z = 0; z < n && gap; ++z) {
        if (z != x && z != y && le(y, z) && le(z, x)) gap = false;
      }
      if (gap) out.emplace_back(x, y);  // x covers y
    }
  }
  return out;
}

FinLattice build_lattice(int n, const std::vector<uint8_t>& leq,
                         std::vector<std::string> labels) {
  if (n <= 0) throw mlat_error(errc::validation_error, "lattice needs at least one element");
  if ((int)leq.size() != n * n)
    throw mlat_error(errc::size_mismatch, "order relation must be an n*n table");
  if (labels.empty()) {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i);
  }
  if ((int)labels.size() != n)
    throw mlat_error(errc::size_mismatch, "label count differs from element count");

  auto le = [&](int x, int y) { return leq[x * n + y] != 0; };

  for (int x = 0; x < n; ++x) {
    if (!le(x, x))
      throw mlat_error(errc::not_a_partial_order,
                       "relation is not reflexive at " + labels[x]);
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y && le(x, y) && le(y, x))
        throw mlat_error(errc::not_a_partial_order,
                         "relation is not antisymmetric on {" + labels[x] + "," + labels[y] + "}");
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!le(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (le(y, z) && !le(x, z))
          throw mlat_error(errc::not_a_partial_order,
                           "relation is not transitive through " + labels[y]);
      }
    }
  }

  FinLattice L;
  L.n = n;
  L.labels = std::move(labels);
  L.leq = leq;

  for (int b = 0; b < n; ++b) {
    bool least = true;
    for (int x = 0; x < n && least; ++x) least = le(b, x);
    if (least) {
      L.bottom = b;
      break;
    }
  }
  for (int t = 0; t < n; ++t) {
    bool greatest = true;
    for (int x = 0; x < n && greatest; ++x) greatest = le(x, t);
    if (greatest) {
      L.top = t;
      break;
    }
  }
  if (L.bottom < 0 || L.top < 0)
    throw mlat_error(errc::no_bounds, "poset has no least or no greatest element");

  // Least upper bound / greatest lower bound of each pair by direct scan.
  L.join_tab.assign(n * n, -1);
  L.meet_tab.assign(n * n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int lub = -1;
      for (int u = 0; u < n; ++u) {
        if (!le(x, u) || !le(y, u)) continue;
        if (lub < 0 || le(u, lub)) lub = u;
      }
      // lub is some minimal upper bound; it is the least one iff it is
      // below every other upper bound.
      for (int u = 0; u < n && lub >= 0; ++u) {
        if (le(x, u) && le(y, u) && !le(lub, u)) lub = -1;
      }
      if (lub < 0)
        throw mlat_error(errc::not_a_lattice,
                         "{" + L.labels[x] + "," + L.labels[y] + "} has no least upper bound");
      L.join_tab[x * n + y] = lub;

      int glb = -1;
      for (int v = 0; v < n; ++v) {
        if (!le(v, x) || !le(v, y)) continue;
        if (glb < 0 || le(glb, v)) glb = v;
      }
      for (int v = 0; v < n && glb >= 0; ++v) {
        if (le(v, x) && le(v, y) && !le(v, glb)) glb = -1;
      }
      if (glb < 0)
        throw mlat_error(errc::not_a_lattice,
                         "{" + L.labels[x] + "," + L.labels[y] + "} has no greatest lower bound");
      L.meet_tab[x * n + y] = glb;
    }
  }
  return L;
}

MultLattice attach_multiplication(const FinLattice& lat, const std::vector<int>& mul,
                                  std::string name) {
  int n = lat.n;
  if ((int)mul.size() != n * n)
    throw mlat_error(errc::size_mismatch, "multiplication must be an n*n table");
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int p = mul[x * n + y];
      if (p < 0 || p >= n)
        throw mlat_error(errc::validation_error, "multiplication entry out of range at (" +
                                                     lat.labels[x] + "," + lat.labels[y] + ")");
      if (!lat.le(p, lat.meet(x, y)))
        throw mlat_error(errc::axiom_violation, lat.labels[x] + "*" + lat.labels[y] + " = " +
                                                    lat.labels[p] + " is not below " +
                                                    lat.labels[x] + " meet " + lat.labels[y]);
    }
  }
  MultLattice m;
  m.lat = lat;
  m.mul_tab = mul;
  m.name = std::move(name);
  return m;
}

LawReport law_report(const MultLattice& m) {
  int n = m.n();
  LawReport r;
  r.monotone = true;
  r.m_distributive = true;
  r.commutative = true;
  r.associative = true;

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (m.mul(x, y) != m.mul(y, x)) r.commutative = false;
    }
  }
  for (int x = 0; x < n && r.monotone; ++x) {
    for (int y = 0; y < n && r.monotone; ++y) {
      if (!m.le(x, y)) continue;
      for (int a = 0; a < n && r.monotone; ++a) {
        for (int b = 0; b < n; ++b) {
          if (!m.le(a, b)) continue;
          if (!m.le(m.mul(x, a), m.mul(y, b))) {
            r.monotone = false;
            break;
          }
        }
      }
    }
  }
  for (int x = 0; x < n && r.m_distributive; ++x) {
    for (int y = 0; y < n && r.m_distributive; ++y) {
      int j = m.join(x, y);
      for (int z = 0; z < n; ++z) {
        if (m.mul(j, z) != m.join(m.mul(x, z), m.mul(y, z)) ||
            m.mul(z, j) != m.join(m.mul(z, x), m.mul(z, y))) {
          r.m_distributive = false;
          break;
        }
      }
    }
  }
  for (int x = 0; x < n && r.associative; ++x) {
    for (int y = 0; y < n && r.associative; ++y) {
      for (int z = 0; z < n; ++z) {
        if (m.mul(m.mul(x, y), z) != m.mul(x, m.mul(y, z))) {
          r.associative = false;
          break;
        }
      }
    }
  }
  return r;
}

MultLattice square_lattice(const MultLattice& m) {
  int n = m.n();
  std::vector<int> sq(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) sq[x * n + y] = m.join(m.mul(x, y), m.mul(y, x));
  std::string name = m.name.empty() ? "" : m.name + " (symmetrized)";
  return attach_multiplication(m.lat, sq, name);
}

BinOpTable compose_operations(const BinOpTable& star, const BinOpTable& circ) {
  if (star.n != circ.n)
    throw mlat_error(errc::size_mismatch, "operations live on carriers of different size");
  int n = star.n;
  BinOpTable out;
  out.n = n;
  out.op.resize(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      out.op[x * n + y] = circ.apply(star.apply(x, y), star.apply(y, x));
  return out;
}

IntervalSublattice interval_sublattice(const MultLattice& m, int h) {
  int n = m.n();
  if (h < 0 || h >= n) throw mlat_error(errc::validation_error, "interval bound out of range");

  IntervalSublattice out;
  out.from_parent.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (m.le(x, h)) {
      out.from_parent[x] = (int)out.to_parent.size();
      out.to_parent.push_back(x);
    }
  }
  int k = (int)out.to_parent.size();
  std::vector<uint8_t> leq(k * k);
  std::vector<int> mul(k * k);
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) {
    labels[i] = m.label(out.to_parent[i]);
    for (int j = 0; j < k; ++j) {
      leq[i * k + j] = m.le(out.to_parent[i], out.to_parent[j]) ? 1 : 0;
      // x*y <= x meet y <= h keeps the interval closed under products.
      mul[i * k + j] = out.from_parent[m.mul(out.to_parent[i], out.to_parent[j])];
    }
  }
  std::string name = m.name.empty() ? "" : m.name + "[0," + m.label(h) + "]";
  out.m = attach_multiplication(build_lattice(k, leq, labels), mul, name);
  return out;
}

MultLattice chain_mult_lattice(int k, ChainKind kind) {
  if (k < 1) throw mlat_error(errc::validation_error, "chain needs at least one element");
  // Element i is c_i with c_0 the top and c_{k-1} the bottom, so c_a <= c_b
  // iff a >= b.
  std::vector<uint8_t> leq(k * k);
  std::vector<std::string> labels(k);
  for (int a = 0; a < k; ++a) {
    labels[a] = "c" + std::to_string(a);
    for (int b = 0; b < k; ++b) leq[a * k + b] = (a >= b) ? 1 : 0;
  }
  std::vector<int> mul(k * k);
  std::string name;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      switch (kind) {
        case ChainKind::dvr: mul[a * k + b] = std::min(a + b, k - 1); break;
        case ChainKind::meet: mul[a * k + b] = std::max(a, b); break;
        case ChainKind::zero: mul[a * k + b] = k - 1; break;
      }
    }
  }
  switch (kind) {
    case ChainKind::dvr: name = "chain-dvr-" + std::to_string(k); break;
    case ChainKind::meet: name = "chain-meet-" + std::to_string(k); break;
    case ChainKind::zero: name = "chain-zero-" + std::to_string(k); break;
  }
  return attach_multiplication(build_lattice(k, leq, labels), mul, name);
}

}  // namespace mlat
