#include "doctest.h"
#include "mlat/catalog.hpp"
#include "mlat/errors.hpp"
#include "mlat/series.hpp"

using namespace mlat;

TEST_CASE("descending traces on the dvr chain, repetition included") {
  const MultLattice m = chain_mult_lattice(5, ChainKind::dvr);
  const SeriesBundle b = series(m, 1);
  // c1, c2, c3, c4, c4 — each step adds one, then the bottom repeats
  CHECK(b.lcs_left.terms == std::vector<int>{1, 2, 3, 4, 4});
  CHECK(b.lcs_left.stabilized);
  CHECK(b.lcs_left.reached == m.bottom());
  CHECK(b.lcs_right.terms == b.lcs_left.terms);  // dvr is commutative
  // derived squares: c1, c2, c4, c4
  CHECK(b.derived.terms == std::vector<int>{1, 2, 4, 4});

  const ClassificationFlags f = classify(m, 1);
  CHECK(f.left_nilpotent);
  CHECK(f.right_nilpotent);
  CHECK(f.solvable);
  CHECK_FALSE(f.abelian);
  CHECK_FALSE(f.idempotent);
  CHECK(f.derived_element == 2);
}

TEST_CASE("an idempotent top is neither nilpotent nor solvable") {
  const MultLattice m = chain_mult_lattice(5, ChainKind::dvr);
  const SeriesBundle b = series(m, 0);  // top: 0+0 = 0
  CHECK(b.lcs_left.terms == std::vector<int>{0, 0});
  CHECK(b.lcs_left.reached == 0);
  const ClassificationFlags f = classify(m, 0);
  CHECK(f.idempotent);
  CHECK_FALSE(f.left_nilpotent);
  CHECK_FALSE(f.solvable);
}

TEST_CASE("commutator series of the dihedral-style lattice of S3") {
  const MultLattice m = normal_mult_lattice(catalog_group("s3"), GroupMult::commutator).lattice;
  REQUIRE(m.n() == 3);  // 1 < A3 < S3 by subgroup size, indices 0,1,2
  const SeriesBundle top = series(m, 2);
  // derived: S3, A3, 1, 1
  CHECK(top.derived.terms == std::vector<int>{2, 1, 0, 0});
  // lower central stalls at A3: [A3, S3] = A3
  CHECK(top.lcs_left.terms == std::vector<int>{2, 1, 1});
  const ClassificationFlags f = classify(m, 2);
  CHECK(f.solvable);
  CHECK_FALSE(f.left_nilpotent);
  CHECK_FALSE(f.right_nilpotent);
}

TEST_CASE("annihilators exist on chains but can be undefined on the diamond") {
  const MultLattice dvr3 = chain_mult_lattice(3, ChainKind::dvr);
  const AnnihilatorReport a = annihilators(dvr3, 1);
  REQUIRE(a.r_ann.has_value());
  CHECK(*a.r_ann == 1);  // c1*c1 = c2 = bottom and c1*c0 = c1 != bottom
  CHECK(*a.r_center == 1);
  CHECK(*a.l_ann == 1);

  // diamond under meet: elements killing a are {0, b, c}, whose join is
  // the top, but a ^ 1 = a != 0 — the candidate join fails the zero test
  const MultLattice m3 = m3_lattice();
  const AnnihilatorReport am = annihilators(m3, 1);
  CHECK_FALSE(am.r_ann.has_value());
  CHECK_FALSE(am.r_center.has_value());
}

TEST_CASE("upper central series distinguishes Q8 from S3") {
  const MultLattice q8 = normal_mult_lattice(catalog_group("q8"), GroupMult::commutator).lattice;
  const UpperCentralReport uq = upper_central_series(q8);
  CHECK(uq.hypercentral);
  CHECK_FALSE(uq.undefined_step);
  CHECK(uq.hypercenter == q8.top());
  // z1 is the centre {1,-1}, the unique subgroup of order 2, then top:
  // trace is bottom, z1, top, top
  REQUIRE(uq.trace.terms.size() == 4);
  CHECK(uq.trace.terms[0] == q8.bottom());
  CHECK(uq.trace.terms[1] == 1);  // masks sort {1,-1} right after the trivial subgroup
  CHECK(uq.trace.terms[2] == q8.top());

  const MultLattice s3 = normal_mult_lattice(catalog_group("s3"), GroupMult::commutator).lattice;
  const UpperCentralReport us = upper_central_series(s3);
  CHECK_FALSE(us.hypercentral);
  CHECK(us.hypercenter == s3.bottom());  // trivial centre, series freezes
  CHECK(us.trace.terms == std::vector<int>{s3.bottom(), s3.bottom()});
}

TEST_CASE("hyperabelian: the six conditions on yes and no instances") {
  const MultLattice s3 = normal_mult_lattice(catalog_group("s3"), GroupMult::commutator).lattice;
  const HyperabelianReport h = hyperabelian_report(s3);
  CHECK(h.agree);
  CHECK(h.hyperabelian);
  CHECK(h.cond_a);
  CHECK(h.cond_f);
  CHECK_FALSE(h.cond_f_inferred);  // n = 3, well under the exhaustive cap
  CHECK(h.spec_size == 0);
  REQUIRE(h.chain_witness.has_value());
  CHECK(h.chain_witness->front() == s3.bottom());
  CHECK(h.chain_witness->back() == s3.top());

  const HyperabelianReport hd = hyperabelian_report(chain_mult_lattice(4, ChainKind::dvr));
  CHECK(hd.agree);
  CHECK_FALSE(hd.hyperabelian);
  CHECK(hd.spec_size == 1);

  // all-zero multiplication is the extreme hyperabelian case
  const HyperabelianReport hz = hyperabelian_report(boolean_lattice(2, false));
  CHECK(hz.hyperabelian);

  // precondition: the diamond is not m-distributive
  CHECK_THROWS_AS(hyperabelian_report(m3_lattice()), mlat_error);
}

TEST_CASE("annihilator of a prime-over-bottom interval is the unique complement prime") {
  // meet chain: below any element nothing multiplies to bottom except via
  // bottom itself, so bottom is prime in [0, c1] and the lemma applies
  const MultLattice meet4 = chain_mult_lattice(4, ChainKind::meet);
  const AnnihilatorPrimeCheck c = annihilator_prime_lemma_check(meet4, 0, 1);
  CHECK(c.holds);
  CHECK(c.p == 3);  // the bottom: the only prime meeting c1 at bottom

  // dvr chain: c2*c2 = bottom inside [0, c1], so bottom is not prime
  // there and the precondition fails
  const MultLattice dvr4 = chain_mult_lattice(4, ChainKind::dvr);
  try {
    annihilator_prime_lemma_check(dvr4, 0, 1);
    FAIL("expected precondition failure");
  } catch (const mlat_error& e) {
    CHECK(e.code() == errc::precondition_failed);
  }

  // n must sit below h
  CHECK_THROWS_AS(annihilator_prime_lemma_check(meet4, 1, 0), mlat_error);
}
