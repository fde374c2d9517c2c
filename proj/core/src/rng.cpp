#include "mlat/rng.hpp"

#include <map>
#include <set>

#include "mlat/errors.hpp"
#include "mlat/group.hpp"

namespace mlat {

FinRng build_rng(int n, const std::vector<int>& add, const std::vector<int>& mul,
                 std::string name) {
  FinGroup additive = build_group(n, add, name + "+");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (additive.op(x, y) != additive.op(y, x))
        throw mlat_error(errc::validation_error, "addition is not commutative");
  if ((int)mul.size() != n * n)
    throw mlat_error(errc::size_mismatch, "multiplication table must be n*n");
  for (int v : mul)
    if (v < 0 || v >= n)
      throw mlat_error(errc::validation_error, "multiplication entry out of range");

  auto m = [&](int x, int y) { return mul[x * n + y]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (m(m(x, y), z) != m(x, m(y, z)))
          throw mlat_error(errc::validation_error, "multiplication is not associative");
        if (m(x, additive.op(y, z)) != additive.op(m(x, y), m(x, z)) ||
            m(additive.op(x, y), z) != additive.op(m(x, z), m(y, z)))
          throw mlat_error(errc::validation_error, "multiplication does not distribute");
      }

  FinRng r;
  r.n = n;
  r.add = add;
  r.mul = mul;
  r.zero = additive.e;
  r.neg = additive.inv;
  r.name = std::move(name);
  return r;
}

FinRng zmod(int k) {
  std::vector<int> add(k * k), mul(k * k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      add[x * k + y] = (x + y) % k;
      mul[x * k + y] = (x * y) % k;
    }
  return build_rng(k, add, mul, "Z/" + std::to_string(k));
}

FinRng two_z_mod8() {
  // Carrier {0,2,4,6}; index i holds the residue 2i mod 8.
  int k = 4;
  std::vector<int> add(16), mul(16);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      add[x * k + y] = (x + y) % 4;        // 2x + 2y = 2(x+y) mod 8
      mul[x * k + y] = (2 * x * y) % 4;    // 2x * 2y = 4xy = 2*(2xy) mod 8
    }
  return build_rng(k, add, mul, "2Z/8");
}

FinRng zero_mul_rng(int k) {
  std::vector<int> add(k * k), mul(k * k, 0);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) add[x * k + y] = (x + y) % k;
  return build_rng(k, add, mul, "zero-rng-" + std::to_string(k));
}

bool is_ideal(const FinRng& r, const Mask& s) {
  if (!s.test(r.zero)) return false;
  std::vector<int> mem = s.members();
  for (int x : mem) {
    if (!s.test(r.neg[x])) return false;
    for (int y : mem)
      if (!s.test(r.a(x, y))) return false;
    for (int t = 0; t < r.n; ++t)
      if (!s.test(r.m(t, x)) || !s.test(r.m(x, t))) return false;
  }
  return true;
}

Mask ideal_generated(const FinRng& r, const Mask& seed) {
  Mask s(r.n);
  s.set(r.zero);
  for (int x : seed.members()) s.set(x);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> mem = s.members();
    for (int x : mem) {
      auto put = [&](int v) {
        if (!s.test(v)) {
          s.set(v);
          grew = true;
        }
      };
      put(r.neg[x]);
      for (int y : mem) put(r.a(x, y));
      for (int t = 0; t < r.n; ++t) {
        put(r.m(t, x));
        put(r.m(x, t));
      }
    }
  }
  return s;
}

std::vector<Mask> ideals(const FinRng& r, int bound) {
  if (r.n > bound)
    throw mlat_error(errc::order_bound, "rng order " + std::to_string(r.n) +
                                            " exceeds the bound " + std::to_string(bound));
  std::set<Mask> found;
  found.insert(ideal_generated(r, Mask(r.n)));
  for (int x = 0; x < r.n; ++x) found.insert(ideal_generated(r, Mask::single(r.n, x)));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> cur(found.begin(), found.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j)
        if (found.insert(ideal_generated(r, cur[i] | cur[j])).second) grew = true;
  }
  return std::vector<Mask>(found.begin(), found.end());
}

Mask ideal_product(const FinRng& r, const Mask& i, const Mask& j) {
  if (!is_ideal(r, i) || !is_ideal(r, j))
    throw mlat_error(errc::not_an_ideal, "ideal product needs ideal inputs");
  Mask s(r.n);
  s.set(r.zero);
  for (int x : i.members())
    for (int y : j.members()) s.set(r.m(x, y));
  // Additive closure; multiplicative absorption then holds automatically,
  // which the ideal check below confirms.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> mem = s.members();
    for (int x : mem)
      for (int y : mem) {
        int v = r.a(x, y);
        if (!s.test(v)) {
          s.set(v);
          grew = true;
        }
      }
  }
  if (!is_ideal(r, s)) throw falsification_error("product of ideals is not an ideal");
  if (!s.subset_of(i & j)) throw falsification_error("product of ideals escapes the intersection");
  return s;
}

IdealLattice ideal_lattice(const FinRng& r, RngMult mult, int bound) {
  std::vector<Mask> ids = ideals(r, bound);
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

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // Ideal sum: elementwise sums already form an ideal.
      Mask sum(r.n);
      for (int x : ids[i].members())
        for (int y : ids[j].members()) sum.set(r.a(x, y));
      auto it = index.find(sum);
      if (it == index.end() || it->second != lat.join(i, j))
        throw falsification_error("ideal sum is not the lattice join");
      auto mt = index.find(ids[i] & ids[j]);
      if (mt == index.end() || mt->second != lat.meet(i, j))
        throw falsification_error("ideal intersection is not the lattice meet");
    }

  std::vector<int> mul(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      switch (mult) {
        case RngMult::product: mul[i * n + j] = index.at(ideal_product(r, ids[i], ids[j])); break;
        case RngMult::intersection: mul[i * n + j] = index.at(ids[i] & ids[j]); break;
        case RngMult::zero: mul[i * n + j] = lat.bottom; break;
        case RngMult::ring_commutator: {
          Mask seed(r.n);
          for (int x : ids[i].members())
            for (int y : ids[j].members()) seed.set(r.sub(r.m(x, y), r.m(y, x)));
          mul[i * n + j] = index.at(ideal_generated(r, seed));
          break;
        }
      }
    }

  std::string mult_name = mult == RngMult::product ? "product"
                          : mult == RngMult::intersection ? "intersection"
                          : mult == RngMult::zero ? "zero"
                                                  : "ring-commutator";
  IdealLattice out;
  out.lattice = attach_multiplication(lat, mul, "L(" + r.name + ")," + mult_name);
  out.ideal_masks = std::move(ids);
  return out;
}

CircleRadical circle_and_radical(const FinRng& r) {
  int n = r.n;
  CircleRadical out;
  out.circle.resize(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out.circle[x * n + y] = r.a(r.a(x, y), r.m(x, y));

  auto c = [&](int x, int y) { return out.circle[x * n + y]; };
  for (int x = 0; x < n; ++x)
    if (c(r.zero, x) != x || c(x, r.zero) != x)
      throw falsification_error("0 is not the circle identity");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (c(c(x, y), z) != c(x, c(y, z)))
          throw falsification_error("the circle operation is not associative");

  auto left_invertible = [&](int v) {
    for (int z = 0; z < n; ++z)
      if (c(z, v) == r.zero) return true;
    return false;
  };
  auto right_invertible = [&](int v) {
    for (int z = 0; z < n; ++z)
      if (c(v, z) == r.zero) return true;
    return false;
  };

  out.jacobson = Mask(n);
  for (int x = 0; x < n; ++x) {
    bool in_left = true, in_right = true;
    for (int y = 0; y < n; ++y) {
      if (!left_invertible(r.m(y, x))) in_left = false;
      if (!right_invertible(r.m(x, y))) in_right = false;
    }
    if (in_left != in_right)
      throw falsification_error("the two radical characterizations disagree at element " +
                                std::to_string(x));
    if (in_left) out.jacobson.set(x);
  }
  if (!is_ideal(r, out.jacobson))
    throw falsification_error("the radical is not a two-sided ideal");
  for (int x : out.jacobson.members())
    if (!left_invertible(x) || !right_invertible(x))
      throw falsification_error("a radical element is not a unit of the circle monoid");

  out.is_radical_ring = out.jacobson.is_full();
  bool circle_group = true;
  for (int x = 0; x < n && circle_group; ++x)
    circle_group = left_invertible(x) && right_invertible(x);
  if (out.is_radical_ring != circle_group)
    throw falsification_error("radical-ring test disagrees with the circle-group test");
  return out;
}

}  // namespace mlat
