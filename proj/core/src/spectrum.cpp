#include "mlat/spectrum.hpp"

#include <algorithm>
#include <set>

#include "mlat/errors.hpp"

namespace mlat {

std::vector<int> ElementClassification::primes() const {
  std::vector<int> out;
  for (int i = 0; i < (int)prime.size(); ++i)
    if (prime[i]) out.push_back(i);
  return out;
}

std::vector<int> ElementClassification::semiprimes() const {
  std::vector<int> out;
  for (int i = 0; i < (int)semiprime.size(); ++i)
    if (semiprime[i]) out.push_back(i);
  return out;
}

ElementClassification classify_elements(const MultLattice& m) {
  int n = m.n();
  ElementClassification c;
  c.prime.assign(n, 0);
  c.semiprime.assign(n, 0);
  c.meet_irreducible.assign(n, 0);
  c.idempotent.assign(n, 0);
  c.abelian.assign(n, 0);

  for (int p = 0; p < n; ++p) {
    c.idempotent[p] = m.mul(p, p) == p;
    c.abelian[p] = m.mul(p, p) == m.bottom();

    bool sp = true;
    for (int x = 0; x < n && sp; ++x)
      if (m.le(m.mul(x, x), p) && !m.le(x, p)) sp = false;
    c.semiprime[p] = sp;

    if (p != m.top()) {
      bool pr = true;
      for (int x = 0; x < n && pr; ++x)
        for (int y = 0; y < n; ++y)
          if (m.le(m.mul(x, y), p) && !m.le(x, p) && !m.le(y, p)) {
            pr = false;
            break;
          }
      c.prime[p] = pr;

      bool mi = true;
      for (int x = 0; x < n && mi; ++x)
        for (int y = 0; y < n; ++y)
          if (m.meet(x, y) == p && x != p && y != p) {
            mi = false;
            break;
          }
      c.meet_irreducible[p] = mi;
    }
  }

  // Every prime is semiprime and meet-irreducible, with no hypothesis on
  // the lattice.
  for (int p = 0; p < n; ++p) {
    if (c.prime[p] && (!c.semiprime[p] || !c.meet_irreducible[p]))
      throw falsification_error("prime element " + m.label(p) +
                                " is not meet-irreducible semiprime");
  }
  return c;
}

int ZariskiTopology::spec_index(int p) const {
  auto it = std::lower_bound(spec.begin(), spec.end(), p);
  if (it == spec.end() || *it != p) return -1;
  return (int)(it - spec.begin());
}

ZariskiTopology zariski(const MultLattice& m) {
  int n = m.n();
  ElementClassification c = classify_elements(m);

  ZariskiTopology t;
  t.spec = c.primes();
  int k = (int)t.spec.size();
  t.v_of.assign(n, Mask(k));
  for (int x = 0; x < n; ++x)
    for (int i = 0; i < k; ++i)
      if (m.le(x, t.spec[i])) t.v_of[x].set(i);

  if (t.v_of[m.top()].any())
    throw falsification_error("V(top) is nonempty");
  if (!t.v_of[m.bottom()].is_full() && k > 0)
    throw falsification_error("V(bottom) misses a prime");
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (t.v_of[m.mul(x, y)] != (t.v_of[x] | t.v_of[y]))
        throw falsification_error("V(" + m.label(x) + "*" + m.label(y) +
                                  ") differs from the union of closed sets");
      if (t.v_of[m.join(x, y)] != (t.v_of[x] & t.v_of[y]))
        throw falsification_error("V(" + m.label(x) + " v " + m.label(y) +
                                  ") differs from the intersection of closed sets");
      if (m.le(x, y) && !t.v_of[y].subset_of(t.v_of[x]))
        throw falsification_error("V is not antitone on " + m.label(x) + " <= " + m.label(y));
    }
  }

  std::set<Mask> family(t.v_of.begin(), t.v_of.end());
  // Close under pairwise unions and intersections. The two laws above say
  // this adds nothing, so one sweep detecting no growth doubles as a check.
  size_t before = family.size();
  std::vector<Mask> base(family.begin(), family.end());
  for (size_t i = 0; i < base.size(); ++i) {
    for (size_t j = i; j < base.size(); ++j) {
      family.insert(base[i] | base[j]);
      family.insert(base[i] & base[j]);
    }
  }
  if (family.size() != before)
    throw falsification_error("closed-set family was not already closed under union/intersection");
  t.closed_sets.assign(family.begin(), family.end());
  return t;
}

SoberReport check_sober(const ZariskiTopology& t) {
  SoberReport r;
  r.sober = true;
  for (const Mask& cset : t.closed_sets) {
    if (cset.none()) continue;
    bool reducible = false;
    for (const Mask& a : t.closed_sets) {
      if (reducible) break;
      if (!a.subset_of(cset) || a == cset) continue;
      for (const Mask& b : t.closed_sets) {
        if (!b.subset_of(cset) || b == cset) continue;
        if ((a | b) == cset) {
          reducible = true;
          break;
        }
      }
    }
    if (reducible) continue;

    // Closure of a point = intersection of all closed sets containing it.
    int generic_points = 0;
    for (int i : cset.members()) {
      Mask closure = cset;
      for (const Mask& a : t.closed_sets)
        if (a.test(i)) closure = closure & a;
      if (closure == cset) ++generic_points;
    }
    if (generic_points != 1) {
      r.sober = false;
      r.witness = cset;
      return r;
    }
  }
  return r;
}

GaloisReport galois(const MultLattice& m) {
  int n = m.n();
  ElementClassification c = classify_elements(m);
  ZariskiTopology t = zariski(m);

  GaloisReport g;
  std::vector<uint8_t> fixed(n, 0);
  for (int x = 0; x < n; ++x) {
    int iv = m.top();  // empty meet
    for (int i : t.v_of[x].members()) iv = m.meet(iv, t.spec[i]);
    if (!m.le(x, iv))
      throw falsification_error("x <= IV(x) failed at " + m.label(x));
    fixed[x] = iv == x;
    if (fixed[x]) g.iv_fixed.push_back(x);
  }

  g.semiprime_match = true;
  for (int x = 0; x < n; ++x)
    if (fixed[x] != c.semiprime[x]) g.semiprime_match = false;
  if (!g.semiprime_match && law_report(m).m_distributive)
    throw falsification_error(
        "meets of primes differ from semiprime elements in an m-distributive lattice");

  // The meet-of-primes elements form a complete lattice: meets are the
  // ambient ones, joins are meets of common upper bounds inside the set.
  // That lattice is order-dual to the closed-set family, hence distributive.
  const std::vector<int>& rad = g.iv_fixed;
  auto rad_join = [&](int u, int v) {
    int j = m.top();
    for (int z : rad)
      if (m.le(u, z) && m.le(v, z)) j = m.meet(j, z);
    return j;
  };
  g.rad_distributive = true;
  for (int a : rad)
    for (int b : rad)
      for (int cc : rad) {
        int lhs = m.meet(a, rad_join(b, cc));
        int rhs = rad_join(m.meet(a, b), m.meet(a, cc));
        if (lhs != rhs) {
          g.rad_distributive = false;
          throw falsification_error("the lattice of meets of primes is not distributive at (" +
                                    m.label(a) + "," + m.label(b) + "," + m.label(cc) + ")");
        }
      }
  return g;
}

MSystemReport m_system_tools(const MultLattice& m, const std::vector<int>& elems) {
  if (elems.empty()) throw mlat_error(errc::empty_set, "an m-system must be nonempty");
  int n = m.n();
  for (int e : elems)
    if (e < 0 || e >= n) throw mlat_error(errc::validation_error, "element index out of range");

  MSystemReport r;
  r.is_m_system = true;
  for (int x : elems) {
    for (int y : elems) {
      int p = m.mul(x, y);
      bool found = false;
      for (int z : elems)
        if (m.le(z, p)) {
          found = true;
          break;
        }
      if (!found) {
        r.is_m_system = false;
        break;
      }
    }
    if (!r.is_m_system) break;
  }

  if (r.is_m_system && law_report(m).m_distributive) {
    // T = elements with no member of S below them; maximal ones are prime.
    std::vector<uint8_t> in_T(n, 0);
    for (int y = 0; y < n; ++y) {
      bool hit = false;
      for (int c : elems)
        if (m.le(c, y)) {
          hit = true;
          break;
        }
      in_T[y] = !hit;
    }
    ElementClassification c = classify_elements(m);
    for (int y = 0; y < n; ++y) {
      if (!in_T[y]) continue;
      bool maximal = true;
      for (int z = 0; z < n && maximal; ++z)
        if (z != y && in_T[z] && m.le(y, z)) maximal = false;
      if (maximal) {
        if (!c.prime[y])
          throw falsification_error("maximal avoiding element " + m.label(y) + " is not prime");
        r.max_avoiding_prime = y;  // lowest index wins
        break;
      }
    }
  }
  return r;
}

SpecMapReport spec_map(const LatticeMorphism& f) {
  ElementClassification src_c = classify_elements(f.src);
  ZariskiTopology dst_t = zariski(f.dst);
  ZariskiTopology src_t = zariski(f.src);

  SpecMapReport r;
  r.dst_spec = dst_t.spec;
  for (int p : dst_t.spec) {
    int q = f.adj[p];
    if (!src_c.prime[q])
      throw falsification_error("adjoint image of prime " + f.dst.label(p) + " is not prime");
    r.point_map.push_back(q);
  }

  // Preimage of V(x) under the point map must be V(f(x)); this also makes
  // the map continuous, since every closed set is some V(x).
  r.continuous = true;
  for (int x = 0; x < f.src.n(); ++x) {
    Mask pre(int(dst_t.spec.size()));
    for (int i = 0; i < (int)dst_t.spec.size(); ++i) {
      int si = src_t.spec_index(r.point_map[i]);
      if (si >= 0 && src_t.v_of[x].test(si)) pre.set(i);
    }
    if (pre != dst_t.v_of[f.map[x]])
      throw falsification_error("preimage of the closed set of " + f.src.label(x) +
                                " is not the closed set of its image");
  }
  return r;
}

}  // namespace mlat
