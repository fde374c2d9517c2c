#include <set>

#include "doctest.h"
#include "mlat/catalog.hpp"
#include "mlat/errors.hpp"
#include "mlat/lattice.hpp"
#include "mlat/spectrum.hpp"

using namespace mlat;

TEST_CASE("the catalog has all families and every entry builds") {
  const auto names = catalog_names();
  CHECK(names.size() == 34);
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == 34);
  for (const std::string& name : names) {
    INFO("entry ", name);
    const MultLattice m = catalog_lattice(name);
    CHECK(m.n() >= 2);
  }
  CHECK_THROWS_AS(catalog_lattice("nope"), mlat_error);
  CHECK_THROWS_AS(catalog_group("nope"), mlat_error);
  CHECK_THROWS_AS(catalog_rng("nope"), mlat_error);
  CHECK_THROWS_AS(catalog_brace("nope"), mlat_error);
}

TEST_CASE("which catalog entries are m-distributive is a fixed fact") {
  const std::set<std::string> exceptions = {"m3-meet", "n5-meet"};
  for (const std::string& name : catalog_names()) {
    INFO("entry ", name);
    const MultLattice m = catalog_lattice(name);
    CHECK(law_report(m).m_distributive == (exceptions.count(name) == 0));
  }
}

TEST_CASE("lattice sizes across the catalog") {
  auto n_of = [](const std::string& name) { return catalog_lattice(name).n(); };
  CHECK(n_of("chain-dvr-5") == 5);
  CHECK(n_of("bool3-meet") == 8);
  CHECK(n_of("m3-meet") == 5);
  CHECK(n_of("n5-meet") == 5);
  CHECK(n_of("ngrp-c2") == 2);
  CHECK(n_of("ngrp-c2xc2") == 5);
  CHECK(n_of("ngrp-d4") == 6);
  CHECK(n_of("ngrp-q8") == 6);
  CHECK(n_of("ngrp-a4") == 3);
  CHECK(n_of("ngrp-s4") == 4);
  CHECK(n_of("ngrp-a5") == 2);
  CHECK(n_of("ideals-z4") == 3);
  CHECK(n_of("ideals-z6") == 4);
  CHECK(n_of("ideals-z8") == 4);
  CHECK(n_of("ideals-2z8") == 3);
  CHECK(n_of("brace-triv-s3") == 3);
  CHECK(n_of("brace-triv-q8") == 6);
  CHECK(n_of("brace-rad-2z8") == 3);
}

TEST_CASE("spectrum sizes of the group-derived lattices") {
  // solvable groups have empty commutator spectra; A5 keeps its bottom
  auto spec_n = [](const std::string& name) {
    return zariski(catalog_lattice(name)).spec.size();
  };
  CHECK(spec_n("ngrp-s3") == 0);
  CHECK(spec_n("ngrp-s4") == 0);
  CHECK(spec_n("ngrp-q8") == 0);
  CHECK(spec_n("ngrp-a5") == 1);
}
