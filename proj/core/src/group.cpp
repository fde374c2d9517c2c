#include "mlat/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "mlat/errors.hpp"
#include "mlat/series.hpp"

namespace mlat {

FinGroup build_group(int n, const std::vector<int>& tab, std::string name) {
  if (n <= 0) throw mlat_error(errc::validation_error, "group needs at least one element");
  if ((int)tab.size() != n * n)
    throw mlat_error(errc::size_mismatch, "Cayley table must be n*n");
  for (int v : tab)
    if (v < 0 || v >= n)
      throw mlat_error(errc::validation_error, "Cayley table entry out of range");

  auto op = [&](int a, int b) { return tab[a * n + b]; };

  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ident = true;
    for (int x = 0; x < n && ident; ++x) ident = op(c, x) == x && op(x, c) == x;
    if (ident) e = c;
  }
  if (e < 0) throw mlat_error(errc::validation_error, "no identity element");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(a, op(b, c)))
          throw mlat_error(errc::validation_error, "operation is not associative");

  FinGroup g;
  g.n = n;
  g.tab = tab;
  g.e = e;
  g.inv.assign(n, -1);
  g.name = std::move(name);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (op(a, b) == e && op(b, a) == e) {
        g.inv[a] = b;
        break;
      }
    if (g.inv[a] < 0) throw mlat_error(errc::validation_error, "an element has no inverse");
  }
  return g;
}

FinGroup cyclic_group(int k) {
  std::vector<int> tab(k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) tab[a * k + b] = (a + b) % k;
  return build_group(k, tab, "C" + std::to_string(k));
}

FinGroup direct_product(const FinGroup& g, const FinGroup& h) {
  int n = g.n * h.n;
  std::vector<int> tab(n * n);
  auto idx = [&](int a, int b) { return a * h.n + b; };
  for (int a1 = 0; a1 < g.n; ++a1)
    for (int a2 = 0; a2 < h.n; ++a2)
      for (int b1 = 0; b1 < g.n; ++b1)
        for (int b2 = 0; b2 < h.n; ++b2)
          tab[idx(a1, a2) * n + idx(b1, b2)] = idx(g.op(a1, b1), h.op(a2, b2));
  return build_group(n, tab, g.name + "x" + h.name);
}

namespace {

// Permutations in lexicographic order; composition applies the right
// factor first, matching function composition (p*q)(x) = p(q(x)).
FinGroup permutation_group(int k, bool even_only, const std::string& name) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (even_only) {
      int inversions = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (p[i] > p[j]) ++inversions;
      if (inversions % 2) continue;
    }
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < (int)perms.size(); ++i) index[perms[i]] = i;

  int n = (int)perms.size();
  std::vector<int> tab(n * n);
  std::vector<int> comp(k);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int x = 0; x < k; ++x) comp[x] = perms[a][perms[b][x]];
      tab[a * n + b] = index.at(comp);
    }
  return build_group(n, tab, name);
}

}  // namespace

FinGroup symmetric_group(int k) { return permutation_group(k, false, "S" + std::to_string(k)); }

FinGroup alternating_group(int k) { return permutation_group(k, true, "A" + std::to_string(k)); }

FinGroup dihedral_group(int k) {
  // Element (i, j) = r^i s^j with s r s = r^{-1}; index i + k*j.
  int n = 2 * k;
  std::vector<int> tab(n * n);
  for (int i1 = 0; i1 < k; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < k; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = j1 ? (i1 - i2 % k + k) % k : (i1 + i2) % k;
          int j = (j1 + j2) % 2;
          tab[(i1 + k * j1) * n + (i2 + k * j2)] = i + k * j;
        }
  return build_group(n, tab, "D" + std::to_string(k));
}

FinGroup quaternion_group() {
  // Indices: axis 0..3 = 1,i,j,k; +4 for negation.
  auto mulq = [](int a, int b) {
    int sa = a / 4, sb = b / 4, xa = a % 4, xb = b % 4;
    static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    int s = (sa + sb + sign[xa][xb]) % 2;
    return axis[xa][xb] + 4 * s;
  };
  std::vector<int> tab(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) tab[a * 8 + b] = mulq(a, b);
  return build_group(8, tab, "Q8");
}

bool is_subgroup(const FinGroup& g, const Mask& s) {
  if (!s.test(g.e)) return false;
  std::vector<int> mem = s.members();
  for (int a : mem)
    for (int b : mem)
      if (!s.test(g.op(a, b))) return false;
  for (int a : mem)
    if (!s.test(g.inv[a])) return false;
  return true;
}

bool is_normal_subgroup(const FinGroup& g, const Mask& s) {
  if (!is_subgroup(g, s)) return false;
  for (int a : s.members())
    for (int x = 0; x < g.n; ++x)
      if (!s.test(g.op(g.op(x, a), g.inv[x]))) return false;
  return true;
}

Mask generated_subgroup(const FinGroup& g, const Mask& seed) {
  Mask s(g.n);
  s.set(g.e);
  for (int a : seed.members()) s.set(a);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> mem = s.members();
    for (int a : mem) {
      for (int b : mem) {
        int c = g.op(a, b);
        if (!s.test(c)) {
          s.set(c);
          grew = true;
        }
      }
      int i = g.inv[a];
      if (!s.test(i)) {
        s.set(i);
        grew = true;
      }
    }
  }
  return s;
}

std::vector<Mask> normal_subgroups(const FinGroup& g, int bound) {
  if (g.n > bound)
    throw mlat_error(errc::order_bound, "group order " + std::to_string(g.n) +
                                            " exceeds the bound " + std::to_string(bound));
  // Normal closures of single conjugacy classes; every normal subgroup is
  // a join of these.
  std::set<Mask> found;
  Mask trivial(g.n);
  trivial.set(g.e);
  found.insert(trivial);
  for (int x = 0; x < g.n; ++x) {
    Mask cls(g.n);
    for (int t = 0; t < g.n; ++t) cls.set(g.op(g.op(t, x), g.inv[t]));
    found.insert(generated_subgroup(g, cls));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> cur(found.begin(), found.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        Mask join = generated_subgroup(g, cur[i] | cur[j]);
        if (found.insert(join).second) grew = true;
      }
  }
  return std::vector<Mask>(found.begin(), found.end());
}

Mask commutator_subgroup(const FinGroup& g, const Mask& a, const Mask& b) {
  if (!is_normal_subgroup(g, a) || !is_normal_subgroup(g, b))
    throw mlat_error(errc::not_normal, "commutator needs normal subgroups");
  Mask gens(g.n);
  for (int x : a.members())
    for (int y : b.members())
      gens.set(g.op(g.op(g.inv[x], g.inv[y]), g.op(x, y)));
  Mask c = generated_subgroup(g, gens);
  if (!is_normal_subgroup(g, c))
    throw falsification_error("commutator of normal subgroups is not normal");
  if (!c.subset_of(a) || !c.subset_of(b))
    throw falsification_error("commutator subgroup escapes its factors");
  return c;
}

GroupAction automorphism_action(const FinGroup& g, int bound) {
  if (g.n > bound)
    throw mlat_error(errc::order_bound,
                     "automorphism enumeration limited to order " + std::to_string(bound));
  GroupAction act;
  act.group = g;
  std::vector<int> p(g.n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (p[g.e] != g.e) continue;
    bool ok = true;
    for (int a = 0; a < g.n && ok; ++a)
      for (int b = 0; b < g.n; ++b)
        if (p[g.op(a, b)] != g.op(p[a], p[b])) {
          ok = false;
          break;
        }
    if (ok) act.gens.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return act;
}

NormalLattice normal_mult_lattice(const FinGroup& g, GroupMult mult, const GroupAction* action,
                                  int bound) {
  std::vector<Mask> subs = normal_subgroups(g, bound);
  if (action) {
    if (action->group.n != g.n)
      throw mlat_error(errc::size_mismatch, "action acts on a different carrier");
    std::vector<Mask> kept;
    for (const Mask& s : subs) {
      bool invariant = true;
      for (const auto& gen : action->gens) {
        Mask img(g.n);
        for (int x : s.members()) img.set(gen[x]);
        if (img != s) {
          invariant = false;
          break;
        }
      }
      if (invariant) kept.push_back(s);
    }
    subs = std::move(kept);
  }

  int n = (int)subs.size();
  std::map<Mask, int> index;
  for (int i = 0; i < n; ++i) index[subs[i]] = i;

  std::vector<uint8_t> leq(n * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = "N" + std::to_string(i) + "[" + std::to_string(subs[i].count()) + "]";
    for (int j = 0; j < n; ++j) leq[i * n + j] = subs[i].subset_of(subs[j]) ? 1 : 0;
  }
  FinLattice lat = build_lattice(n, leq, labels);

  // The order-derived join must be the product subgroup AB, and the meet
  // the intersection.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mask prod(g.n);
      for (int x : subs[i].members())
        for (int y : subs[j].members()) prod.set(g.op(x, y));
      auto it = index.find(prod);
      if (it == index.end() || it->second != lat.join(i, j))
        throw falsification_error("product subgroup is not the lattice join");
      auto mt = index.find(subs[i] & subs[j]);
      if (mt == index.end() || mt->second != lat.meet(i, j))
        throw falsification_error("intersection is not the lattice meet");
    }

  std::vector<int> mul(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      switch (mult) {
        case GroupMult::commutator: {
          Mask c = commutator_subgroup(g, subs[i], subs[j]);
          auto it = index.find(c);
          if (it == index.end())
            throw falsification_error("commutator left the invariant subgroup family");
          mul[i * n + j] = it->second;
          break;
        }
        case GroupMult::intersection: mul[i * n + j] = index.at(subs[i] & subs[j]); break;
        case GroupMult::zero: mul[i * n + j] = lat.bottom; break;
      }
    }

  std::string mult_name = mult == GroupMult::commutator ? "commutator"
                          : mult == GroupMult::intersection ? "intersection"
                                                            : "zero";
  NormalLattice out;
  out.lattice = attach_multiplication(lat, mul, "N(" + g.name + ")," + mult_name);
  out.subgroups = std::move(subs);
  return out;
}

GroupClassification classify_group(const FinGroup& g, int bound) {
  Mask whole = Mask::full(g.n);
  Mask trivial(g.n);
  trivial.set(g.e);

  GroupClassification r;
  r.abelian = true;
  for (int a = 0; a < g.n && r.abelian; ++a)
    for (int b = 0; b < g.n; ++b)
      if (g.op(a, b) != g.op(b, a)) {
        r.abelian = false;
        break;
      }

  Mask lc = whole;
  for (;;) {
    Mask next = commutator_subgroup(g, lc, whole);
    if (next == lc) break;
    lc = next;
  }
  r.nilpotent = lc == trivial;

  Mask dv = whole;
  for (;;) {
    Mask next = commutator_subgroup(g, dv, dv);
    if (next == dv) break;
    dv = next;
  }
  r.solvable = dv == trivial;
  r.perfect = commutator_subgroup(g, whole, whole) == whole;

  NormalLattice nl = normal_mult_lattice(g, GroupMult::commutator, nullptr, bound);
  ClassificationFlags lf = classify(nl.lattice, nl.lattice.top());
  r.lattice_agrees = lf.left_nilpotent == r.nilpotent && lf.solvable == r.solvable &&
                     lf.abelian == r.abelian && lf.idempotent == r.perfect;
  if (!r.lattice_agrees)
    throw falsification_error("lattice classification disagrees with the subgroup computation on " +
                              g.name);
  return r;
}

}  // namespace mlat
