#include "mlat/brace.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "mlat/errors.hpp"
#include "mlat/series.hpp"

namespace mlat {

SkewBrace build_brace(int n, const std::vector<int>& circ, const std::vector<int>& star,
                      std::string name) {
  FinGroup gc = build_group(n, circ, name + ",circ");
  FinGroup gs = build_group(n, star, name + ",star");
  if (gc.e != gs.e)
    throw mlat_error(errc::validation_error, "the two groups must share their identity");

  SkewBrace a;
  a.n = n;
  a.circ = circ;
  a.star = star;
  a.e = gc.e;
  a.inv_circ = gc.inv;
  a.inv_star = gs.inv;
  a.name = std::move(name);

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (a.c(x, a.s(y, z)) != a.s(a.s(a.c(x, y), a.inv_star[x]), a.c(x, z)))
          throw mlat_error(errc::validation_error, "the skew brace law fails");
  return a;
}

SkewBrace trivial_brace(const FinGroup& g) {
  return build_brace(g.n, g.tab, g.tab, "triv(" + g.name + ")");
}

SkewBrace brace_from_radical_rng(const FinRng& r) {
  CircleRadical cr = circle_and_radical(r);
  if (!cr.is_radical_ring)
    throw mlat_error(errc::not_a_radical_ring,
                     r.name + " has a proper radical, so its circle monoid is not a group");
  return build_brace(r.n, cr.circle, r.add, "rad(" + r.name + ")");
}

LambdaAction lambda_action(const SkewBrace& a) {
  int n = a.n;
  LambdaAction out;
  out.action.group = build_group(n, a.star, a.name + ",star");
  out.action.gens.resize(n);
  for (int x = 0; x < n; ++x) {
    std::vector<int>& lam = out.action.gens[x];
    lam.resize(n);
    for (int b = 0; b < n; ++b) lam[b] = a.s(a.inv_star[x], a.c(x, b));
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc)
        if (lam[a.s(b, cc)] != a.s(lam[b], lam[cc]))
          throw falsification_error("lambda of element " + std::to_string(x) +
                                    " is not a star-automorphism");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const std::vector<int>& lx = out.action.gens[x];
      const std::vector<int>& ly = out.action.gens[y];
      const std::vector<int>& lxy = out.action.gens[a.c(x, y)];
      for (int b = 0; b < n; ++b)
        if (lxy[b] != lx[ly[b]])
          throw falsification_error("lambda is not a homomorphism out of the circle group");
    }
  return out;
}

FinGroup semidirect_product(const SkewBrace& a) {
  int n = a.n;
  int m = n * n;
  std::vector<int> tab(m * m);
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2)
      for (int b1 = 0; b1 < n; ++b1)
        for (int b2 = 0; b2 < n; ++b2) {
          int first = a.s(a.s(a1, a.inv_star[a2]), a.c(a2, b1));
          int second = a.c(a2, b2);
          tab[(a1 * n + a2) * m + (b1 * n + b2)] = first * n + second;
        }
  return build_group(m, tab, "P(" + a.name + ")");
}

YbeReport ybe_solution(const SkewBrace& a) {
  int n = a.n;
  YbeReport rep;
  rep.r.resize(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int u = a.s(a.inv_star[x], a.c(x, y));
      int v = a.c(a.c(a.inv_circ[u], x), y);
      rep.r[x * n + y] = {u, v};
    }

  std::set<std::pair<int, int>> image(rep.r.begin(), rep.r.end());
  rep.bijective = (int)image.size() == n * n;
  if (!rep.bijective) throw falsification_error("the braiding map is not bijective");

  auto r_pair = [&](int x, int y) { return rep.r[x * n + y]; };
  rep.braid_holds = true;
  for (int x = 0; x < n && rep.braid_holds; ++x)
    for (int y = 0; y < n && rep.braid_holds; ++y)
      for (int z = 0; z < n; ++z) {
        // (r x id)(id x r)(r x id), rightmost applied first.
        auto [l1, l2] = r_pair(x, y);
        auto [l3, l4] = r_pair(l2, z);
        auto [l5, l6] = r_pair(l1, l3);
        // (id x r)(r x id)(id x r).
        auto [m1, m2] = r_pair(y, z);
        auto [m3, m4] = r_pair(x, m1);
        auto [m5, m6] = r_pair(m4, m2);
        if (l5 != m3 || l6 != m5 || l4 != m6) {
          rep.braid_holds = false;
          break;
        }
      }
  if (!rep.braid_holds) throw falsification_error("the braid relation fails on " + a.name);

  rep.involutive = true;
  for (int x = 0; x < n && rep.involutive; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = r_pair(x, y);
      if (r_pair(u, v) != std::make_pair(x, y)) {
        rep.involutive = false;
        break;
      }
    }
  return rep;
}

namespace {

bool normal_in(const std::vector<int>& tab, const std::vector<int>& inv, int n, const Mask& s,
               int e) {
  if (!s.test(e)) return false;
  auto op = [&](int x, int y) { return tab[x * n + y]; };
  std::vector<int> mem = s.members();
  for (int x : mem) {
    if (!s.test(inv[x])) return false;
    for (int y : mem)
      if (!s.test(op(x, y))) return false;
  }
  for (int x : mem)
    for (int t = 0; t < n; ++t)
      if (!s.test(op(op(t, x), inv[t]))) return false;
  return true;
}

}  // namespace

bool is_brace_ideal(const SkewBrace& a, const Mask& s) {
  if (!normal_in(a.circ, a.inv_circ, a.n, s, a.e)) return false;
  if (!normal_in(a.star, a.inv_star, a.n, s, a.e)) return false;
  for (int x = 0; x < a.n; ++x) {
    Mask circ_coset(a.n), star_coset(a.n);
    for (int i : s.members()) {
      circ_coset.set(a.c(i, x));
      star_coset.set(a.s(i, x));
    }
    if (circ_coset != star_coset) return false;
  }
  return true;
}

namespace {

// Smallest equivalence relation containing the seed pairs and compatible
// with both operations, as a union-find over the carrier.
struct Partition {
  std::vector<int> parent;
  explicit Partition(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent[y] = x;
    return true;
  }
  std::vector<int> canon() {
    std::vector<int> c(parent.size());
    for (int i = 0; i < (int)parent.size(); ++i) c[i] = find(i);
    return c;
  }
};

std::vector<int> congruence_closure(const SkewBrace& a, Partition p) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < a.n; ++x)
      for (int y = x + 1; y < a.n; ++y) {
        if (p.find(x) != p.find(y)) continue;
        for (int t = 0; t < a.n; ++t) {
          grew |= p.unite(a.c(x, t), a.c(y, t));
          grew |= p.unite(a.c(t, x), a.c(t, y));
          grew |= p.unite(a.s(x, t), a.s(y, t));
          grew |= p.unite(a.s(t, x), a.s(t, y));
        }
      }
  }
  return p.canon();
}

}  // namespace

std::vector<Mask> brace_ideals(const SkewBrace& a, int bound) {
  if (a.n > bound)
    throw mlat_error(errc::order_bound, "brace order " + std::to_string(a.n) +
                                            " exceeds the bound " + std::to_string(bound));
  FinGroup star = build_group(a.n, a.star, a.name + ",star");
  std::vector<Mask> ideals;
  for (const Mask& s : normal_subgroups(star))
    if (is_brace_ideal(a, s)) ideals.push_back(s);

  // Coset partitions of ideals are exactly the congruences of both
  // operations.
  std::set<std::vector<int>> from_ideals;
  for (const Mask& s : ideals) {
    Partition p(a.n);
    for (int i : s.members()) p.unite(a.e, i);
    std::vector<int> closed = congruence_closure(a, p);
    // Closure must not merge beyond the cosets: class of e stays s.
    Mask cls(a.n);
    for (int x = 0; x < a.n; ++x)
      if (closed[x] == closed[a.e]) cls.set(x);
    if (cls != s)
      throw falsification_error("coset partition of an ideal is not a congruence");
    from_ideals.insert(closed);
  }

  std::set<std::vector<int>> congruences;
  for (int x = 0; x < a.n; ++x)
    for (int y = x + 1; y < a.n; ++y) {
      Partition p(a.n);
      p.unite(x, y);
      congruences.insert(congruence_closure(a, p));
    }
  {
    Partition p(a.n);
    congruences.insert(congruence_closure(a, p));  // the identity congruence
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(congruences.begin(), congruences.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        Partition p(a.n);
        for (int x = 0; x < a.n; ++x) {
          p.unite(x, cur[i][x]);
          p.unite(x, cur[j][x]);
        }
        if (congruences.insert(congruence_closure(a, p)).second) grew = true;
      }
  }
  if (congruences != from_ideals)
    throw falsification_error("congruences and ideal coset partitions do not correspond on " +
                              a.name);
  for (const std::vector<int>& cong : congruences) {
    Mask cls(a.n);
    for (int x = 0; x < a.n; ++x)
      if (cong[x] == cong[a.e]) cls.set(x);
    if (!is_brace_ideal(a, cls))
      throw falsification_error("a congruence class of the identity is not an ideal");
  }
  return ideals;
}

Mask generated_ideal(const SkewBrace& a, const Mask& seed) {
  int n = a.n;
  LambdaAction lam = lambda_action(a);
  Mask x(n);
  x.set(a.e);
  for (int v : seed.members()) x.set(v);

  auto normal_closure = [&](const std::vector<int>& tab, const std::vector<int>& inv,
                            const Mask& s) {
    auto op = [&](int p, int q) { return tab[p * n + q]; };
    Mask out(n);
    out.set(a.e);
    for (int v : s.members())
      for (int t = 0; t < n; ++t) out.set(op(op(t, v), inv[t]));
    // Subgroup closure of the conjugate set.
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> mem = out.members();
      for (int p : mem) {
        if (!out.test(inv[p])) {
          out.set(inv[p]);
          grew = true;
        }
        for (int q : mem) {
          int v = op(p, q);
          if (!out.test(v)) {
            out.set(v);
            grew = true;
          }
        }
      }
    }
    return out;
  };

  int stable = 0;
  for (int step = 0; stable < 3; ++step) {
    Mask next(n);
    switch (step % 3) {
      case 0: next = normal_closure(a.star, a.inv_star, x); break;
      case 1: next = normal_closure(a.circ, a.inv_circ, x); break;
      case 2: {
        next = x;
        for (int t = 0; t < n; ++t)
          for (int v : x.members()) next.set(lam.action.gens[t][v]);
        break;
      }
    }
    stable = next == x ? stable + 1 : 0;
    x = next;
  }
  if (!is_brace_ideal(a, x))
    throw falsification_error("the closure schedule did not produce an ideal");
  return x;
}

Mask brace_ideal_product(const SkewBrace& a, const Mask& i, const Mask& j) {
  if (!is_brace_ideal(a, i) || !is_brace_ideal(a, j))
    throw mlat_error(errc::not_an_ideal, "brace ideal product needs ideal inputs");
  FinGroup p = semidirect_product(a);
  int n = a.n;
  Mask ii(p.n), jj(p.n);
  for (int x : i.members())
    for (int y : i.members()) ii.set(x * n + y);
  for (int x : j.members())
    for (int y : j.members()) jj.set(x * n + y);
  if (!is_normal_subgroup(p, ii) || !is_normal_subgroup(p, jj))
    throw falsification_error("an ideal square is not normal in the semidirect product");

  Mask comm = commutator_subgroup(p, ii, jj);
  Mask seed(n);
  for (int v : comm.members()) {
    seed.set(v / n);
    seed.set(v % n);
  }
  Mask out = generated_ideal(a, seed);
  if (!out.subset_of(i & j))
    throw falsification_error("an ideal product escapes the intersection of its factors");
  return out;
}

BraceLattice brace_lattice(const SkewBrace& a, int bound) {
  std::vector<Mask> ids = brace_ideals(a, bound);
  int n = (int)ids.size();
  std::map<Mask, int> index;
  for (int i = 0; i < n; ++i) index[ids[i]] = i;

  std::vector<uint8_t> leq(n * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = "I" + std::to_string(i) + "[" + std::to_string(ids[i].count()) + "]";
    for (int j = 0; j < n; ++j) leq[i * n + j] = ids[i].subset_of(ids[j]) ? 1 : 0;
  }
  FinLattice lat = build_lattice(n, leq, labels);

  std::vector<int> mul(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = index.find(generated_ideal(a, ids[i] | ids[j]));
      if (it == index.end() || it->second != lat.join(i, j))
        throw falsification_error("generated ideal of a union is not the lattice join");
      auto mt = index.find(ids[i] & ids[j]);
      if (mt == index.end() || mt->second != lat.meet(i, j))
        throw falsification_error("ideal intersection is not the lattice meet");
      mul[i * n + j] = index.at(brace_ideal_product(a, ids[i], ids[j]));
    }

  BraceLattice out;
  out.lattice = attach_multiplication(lat, mul, "I(" + a.name + ")");
  out.ideal_masks = std::move(ids);
  return out;
}

Mask socle(const SkewBrace& a, int bound) {
  BraceLattice bl = brace_lattice(a, bound);
  AnnihilatorReport ann = annihilators(bl.lattice, bl.lattice.top());
  if (!ann.r_center)
    throw mlat_error(errc::undefined_annihilator,
                     "the annihilator join fails its zero test on " + a.name);
  return bl.ideal_masks[*ann.r_center];
}

SkewBrace quotient_brace(const SkewBrace& a, const Mask& i) {
  if (!is_brace_ideal(a, i))
    throw mlat_error(errc::not_an_ideal, "quotient needs an ideal");
  int n = a.n;
  // Star-cosets (= circ-cosets); class representative is the least member.
  std::vector<int> rep(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (rep[x] >= 0) continue;
    Mask coset(n);
    for (int v : i.members()) coset.set(a.s(v, x));
    Mask circ_coset(n);
    for (int v : i.members()) circ_coset.set(a.c(v, x));
    if (coset != circ_coset)
      throw falsification_error("circ- and star-cosets differ modulo an ideal");
    int r = coset.members().front();
    for (int v : coset.members()) rep[v] = r;
    reps.push_back(r);
  }
  std::sort(reps.begin(), reps.end());
  std::map<int, int> idx;
  for (int k = 0; k < (int)reps.size(); ++k) idx[reps[k]] = k;

  int m = (int)reps.size();
  std::vector<int> circ_q(m * m), star_q(m * m);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) {
      circ_q[k * m + l] = idx.at(rep[a.c(reps[k], reps[l])]);
      star_q[k * m + l] = idx.at(rep[a.s(reps[k], reps[l])]);
    }
  // Well-definedness: every pair, not just the representatives, must land
  // in the same class.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int cx = idx.at(rep[x]), cy = idx.at(rep[y]);
      if (circ_q[cx * m + cy] != idx.at(rep[a.c(x, y)]) ||
          star_q[cx * m + cy] != idx.at(rep[a.s(x, y)]))
        throw falsification_error("quotient operations are not well defined modulo an ideal");
    }
  return build_brace(m, circ_q, star_q, a.name + "/I" + std::to_string(i.count()));
}

}  // namespace mlat
