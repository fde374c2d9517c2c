#include "doctest.h"
#include "mlat/catalog.hpp"
#include "mlat/errors.hpp"
#include "mlat/morphism.hpp"
#include "mlat/spectrum.hpp"

using namespace mlat;

TEST_CASE("chain truncation is a morphism with the expected adjoint") {
  const MultLattice src = chain_mult_lattice(4, ChainKind::dvr);
  const MultLattice dst = chain_mult_lattice(3, ChainKind::dvr);
  const LatticeMorphism f = morphism_build(src, dst, {0, 1, 2, 2});

  // adjoint u(y) = join of everything mapping at or below y; both c2 and
  // c3 land at or below c2, and their join is c2. Adjunction is asserted
  // inside morphism_build, spot-check the closed forms here
  CHECK(f.adjoint(0) == 0);
  CHECK(f.adjoint(1) == 1);
  CHECK(f.adjoint(2) == 2);
  for (int x = 0; x < src.n(); ++x)
    for (int y = 0; y < dst.n(); ++y)
      CHECK(dst.le(f.apply(x), y) == src.le(x, f.adjoint(y)));
}

TEST_CASE("morphism_build rejects each broken axiom") {
  const MultLattice c3 = chain_mult_lattice(3, ChainKind::dvr);
  const MultLattice c2 = chain_mult_lattice(2, ChainKind::dvr);

  // size mismatch
  CHECK_THROWS_AS(morphism_build(c3, c2, {0, 1}), mlat_error);

  // top must go to top
  try {
    morphism_build(c3, c2, {1, 1, 1});
    FAIL("expected rejection");
  } catch (const mlat_error& e) {
    CHECK(e.code() == errc::top_not_preserved);
  }

  // bottom must go to bottom (the empty join)
  try {
    morphism_build(c3, c2, {0, 0, 0});
    FAIL("expected rejection");
  } catch (const mlat_error& e) {
    CHECK(e.code() == errc::not_join_preserving);
  }

  // binary joins: the diamond collapsed onto a 2-chain by sending the
  // atoms down and their join up cannot preserve a v b
  const MultLattice m3 = m3_lattice();
  try {
    morphism_build(m3, c2, {1, 1, 1, 1, 0});
    FAIL("expected rejection");
  } catch (const mlat_error& e) {
    CHECK(e.code() == errc::not_join_preserving);
  }

  // product of images must stay below image of product: map the dvr
  // 3-chain onto the meet 3-chain by identity; c1*c1 is c2 in the source
  // but c1 in the target, so f(c1)f(c1) = c1 > c2 = f(c1*c1)
  const MultLattice meet3 = chain_mult_lattice(3, ChainKind::meet);
  try {
    morphism_build(chain_mult_lattice(3, ChainKind::dvr), meet3, {0, 1, 2});
    FAIL("expected rejection");
  } catch (const mlat_error& e) {
    CHECK(e.code() == errc::not_submultiplicative);
  }
  // the reverse direction is fine: meet products only shrink
  CHECK_NOTHROW(morphism_build(meet3, chain_mult_lattice(3, ChainKind::dvr), {0, 1, 2}));
}

TEST_CASE("spectral map sends target primes to source primes continuously") {
  const MultLattice src = chain_mult_lattice(4, ChainKind::dvr);
  const MultLattice dst = chain_mult_lattice(3, ChainKind::dvr);
  const LatticeMorphism f = morphism_build(src, dst, {0, 1, 2, 2});
  const SpecMapReport sm = spec_map(f);
  REQUIRE(sm.dst_spec.size() == 1);
  CHECK(sm.dst_spec[0] == 1);   // the unique prime c1 downstairs
  CHECK(sm.point_map[0] == 1);  // pulls back to the unique prime c1 upstairs
  CHECK(sm.continuous);
}

TEST_CASE("identity morphism fixes the spectrum pointwise") {
  const MultLattice m = boolean_lattice(3, true);
  std::vector<int> id(m.n());
  for (int i = 0; i < m.n(); ++i) id[i] = i;
  const LatticeMorphism f = morphism_build(m, m, id);
  const SpecMapReport sm = spec_map(f);
  CHECK(sm.dst_spec == zariski(m).spec);
  CHECK(sm.point_map == sm.dst_spec);
  CHECK(sm.continuous);
}
