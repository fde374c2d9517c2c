#include <algorithm>
#include <bit>

#include "doctest.h"
#include "mlat/catalog.hpp"
#include "mlat/errors.hpp"
#include "mlat/lattice.hpp"
#include "oracles.hpp"

using namespace mlat;

namespace {

std::vector<uint8_t> chain_leq(int n) {
  // index 0 on top, as in chain_mult_lattice
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x >= y) leq[static_cast<size_t>(x) * n + y] = 1;
  return leq;
}

}  // namespace

TEST_CASE("build_lattice rejects broken orders") {
  // not reflexive
  std::vector<uint8_t> leq = chain_leq(2);
  leq[0] = 0;
  CHECK_THROWS_WITH_AS(build_lattice(2, leq), doctest::Contains("NotAPartialOrder"),
                       mlat_error);
  // not antisymmetric
  leq = chain_leq(2);
  leq[0 * 2 + 1] = 1;
  CHECK_THROWS_AS(build_lattice(2, leq), mlat_error);
  // not transitive: 2 <= 1, 1 <= 0 but not 2 <= 0
  leq = chain_leq(3);
  leq[2 * 3 + 0] = 0;
  try {
    build_lattice(3, leq);
    FAIL("expected rejection");
  } catch (const mlat_error& e) {
    CHECK(e.code() == errc::not_a_partial_order);
  }
}

TEST_CASE("build_lattice rejects posets without bounds or joins") {
  // two incomparable points: no bottom/top at all
  std::vector<uint8_t> two = {1, 0, 0, 1};
  try {
    build_lattice(2, two);
    FAIL("expected rejection");
  } catch (const mlat_error& e) {
    CHECK(e.code() == errc::no_bounds);
  }

  // bounded 6-element poset where {a,b} has two minimal upper bounds:
  // 0 < a,b < c,d < 1 with a,b below both c and d.
  const int n = 6;  // 0:bot 1:a 2:b 3:c 4:d 5:top
  std::vector<uint8_t> leq(n * n, 0);
  auto set = [&](int x, int y) { leq[x * n + y] = 1; };
  for (int x = 0; x < n; ++x) { set(x, x); set(0, x); set(x, 5); }
  set(1, 3); set(1, 4); set(2, 3); set(2, 4);
  try {
    build_lattice(n, leq);
    FAIL("expected rejection");
  } catch (const mlat_error& e) {
    CHECK(e.code() == errc::not_a_lattice);
  }
}

TEST_CASE("bounded lattice basics: joins, meets, covers, empty conventions") {
  const MultLattice m = boolean_lattice(3, true);
  const FinLattice& lat = m.lat;
  CHECK(lat.n == 8);
  CHECK(lat.bottom == 0);
  CHECK(lat.top == 7);
  // subsets of {a,b,c} under inclusion: join is union, meet intersection
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      CHECK(lat.join(x, y) == (x | y));
      CHECK(lat.meet(x, y) == (x & y));
    }
  CHECK(lat.join_all({}) == lat.bottom);
  CHECK(lat.meet_all({}) == lat.top);
  CHECK(lat.join_all({1, 2, 4}) == 7);

  // each element covers exactly the subsets one atom smaller
  auto covers = lat.covers();
  CHECK(covers.size() == 12);  // 3 * 2^2 edges in the cube
  for (auto [upper, lower] : covers) {
    CHECK(lat.le(lower, upper));
    CHECK(std::popcount(static_cast<unsigned>(upper)) ==
          std::popcount(static_cast<unsigned>(lower)) + 1);
  }
}

TEST_CASE("multiplication must sit below the meet") {
  FinLattice lat = build_lattice(2, chain_leq(2));
  // chain_leq puts the top at index 0. mul(bottom, top) = top breaks
  // mul <= meet; everything else below is legal.
  std::vector<int> mul = {0, 1, 0, 1};
  try {
    attach_multiplication(lat, mul);
    FAIL("expected rejection");
  } catch (const mlat_error& e) {
    CHECK(e.code() == errc::axiom_violation);
  }
}

TEST_CASE("chain multiplications: dvr, meet, zero") {
  for (int k = 2; k <= 5; ++k) {
    const MultLattice dvr = chain_mult_lattice(k, ChainKind::dvr);
    const MultLattice met = chain_mult_lattice(k, ChainKind::meet);
    const MultLattice zer = chain_mult_lattice(k, ChainKind::zero);
    CHECK(dvr.n() == k);
    CHECK(dvr.top() == 0);
    CHECK(dvr.bottom() == k - 1);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        CHECK(dvr.mul(a, b) == std::min(a + b, k - 1));
        CHECK(met.mul(a, b) == std::max(a, b));
        CHECK(zer.mul(a, b) == k - 1);
      }
    CHECK(dvr.label(1) == "c1");
  }
  // the one-point chain is legal (top == bottom); only k < 1 is rejected
  const MultLattice point = chain_mult_lattice(1, ChainKind::dvr);
  CHECK(point.top() == point.bottom());
  CHECK_THROWS_AS(chain_mult_lattice(0, ChainKind::dvr), mlat_error);
}

TEST_CASE("law report matches the catalog's known algebra") {
  CHECK(law_report(chain_mult_lattice(4, ChainKind::dvr)).m_distributive);
  CHECK(law_report(chain_mult_lattice(4, ChainKind::dvr)).associative);
  CHECK(law_report(chain_mult_lattice(4, ChainKind::dvr)).commutative);
  CHECK(law_report(chain_mult_lattice(4, ChainKind::dvr)).monotone);
  CHECK(law_report(boolean_lattice(3, true)).m_distributive);
  CHECK(law_report(boolean_lattice(3, false)).m_distributive);
  CHECK_FALSE(law_report(m3_lattice()).m_distributive);
  CHECK_FALSE(law_report(n5_lattice()).m_distributive);
  CHECK(law_report(m3_lattice()).commutative);
  CHECK(law_report(m3_lattice()).monotone);
}

TEST_CASE("finite binary m-distributivity equals the all-subsets form") {
  for (const std::string& name : catalog_names()) {
    const MultLattice m = catalog_lattice(name);
    if (m.n() > 6) continue;
    INFO("catalog entry ", name);
    CHECK(law_report(m).m_distributive == oracles::m_distributive_all_subsets(m));
  }
}

TEST_CASE("symmetrized multiplication is commutative and idempotent as a construction") {
  const MultLattice m = normal_mult_lattice(catalog_group("s3"), GroupMult::commutator).lattice;
  const MultLattice s = square_lattice(m);
  CHECK(law_report(s).commutative);
  for (int x = 0; x < m.n(); ++x)
    for (int y = 0; y < m.n(); ++y)
      CHECK(s.mul(x, y) == m.join(m.mul(x, y), m.mul(y, x)));
  const MultLattice ss = square_lattice(s);
  CHECK(ss.mul_tab == s.mul_tab);
}

TEST_CASE("operation composition has the left projection as identity") {
  // star = addition mod 3, circ = max
  const int n = 3;
  BinOpTable add{n, {}}, mx{n, {}}, proj{n, {}};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      add.op.push_back((x + y) % n);
      mx.op.push_back(std::max(x, y));
      proj.op.push_back(x);
    }
  const BinOpTable c = compose_operations(add, mx);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      CHECK(c.apply(x, y) == std::max((x + y) % n, (y + x) % n));
  // composing with the left projection on either side returns the other op
  CHECK(compose_operations(proj, mx).op == mx.op);
  BinOpTable wrong{2, {0, 0, 0, 0}};
  CHECK_THROWS_AS(compose_operations(add, wrong), mlat_error);
}

TEST_CASE("interval sublattice keeps products and relabels indices") {
  const MultLattice m = chain_mult_lattice(5, ChainKind::dvr);
  const IntervalSublattice iv = interval_sublattice(m, 2);  // [bottom, c2]
  CHECK(iv.m.n() == 3);
  CHECK(iv.m.label(iv.m.top()) == "c2");
  for (int x = 0; x < iv.m.n(); ++x) {
    CHECK(iv.from_parent[iv.to_parent[x]] == x);
    for (int y = 0; y < iv.m.n(); ++y) {
      const int parent_product = m.mul(iv.to_parent[x], iv.to_parent[y]);
      CHECK(iv.to_parent[iv.m.mul(x, y)] == parent_product);
    }
  }
  // c2 * c2 = c4 = bottom of the interval
  CHECK(iv.m.mul(iv.m.top(), iv.m.top()) == iv.m.bottom());
}

TEST_CASE("boolean lattice labels read as letter sets") {
  const MultLattice m = boolean_lattice(2, true);
  CHECK(m.label(0) == "0");
  CHECK(m.label(1) == "a");
  CHECK(m.label(2) == "b");
  CHECK(m.label(3) == "ab");
}
