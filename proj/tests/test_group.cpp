#include <set>

#include "doctest.h"
#include "mlat/catalog.hpp"
#include "mlat/errors.hpp"
#include "mlat/group.hpp"
#include "oracles.hpp"

using namespace mlat;

TEST_CASE("constructors produce the right orders and valid tables") {
  CHECK(cyclic_group(6).n == 6);
  CHECK(symmetric_group(3).n == 6);
  CHECK(symmetric_group(4).n == 24);
  CHECK(alternating_group(4).n == 12);
  CHECK(alternating_group(5).n == 60);
  CHECK(dihedral_group(4).n == 8);
  CHECK(quaternion_group().n == 8);
  CHECK(direct_product(cyclic_group(2), cyclic_group(3)).n == 6);
}

TEST_CASE("build_group rejects non-groups") {
  // constant table: no identity
  CHECK_THROWS_AS(build_group(2, {0, 0, 0, 0}), mlat_error);
  // identity present but one element lacks an inverse (not a latin square)
  CHECK_THROWS_AS(build_group(3, {0, 1, 2, 1, 1, 1, 2, 2, 2}), mlat_error);
}

TEST_CASE("quaternion group relations") {
  const FinGroup q = quaternion_group();
  // indices: 1,i,j,k then their negatives
  const int i = 1, j = 2, k = 3, minus1 = 4;
  CHECK(q.op(i, i) == minus1);
  CHECK(q.op(j, j) == minus1);
  CHECK(q.op(i, j) == k);
  CHECK(q.op(j, i) == k + 4);  // -k
  CHECK(q.op(minus1, minus1) == q.e);
  CHECK(q.inv[i] == i + 4);
}

TEST_CASE("normal subgroup counts across the catalog") {
  auto count = [](const std::string& name) {
    return normal_subgroups(catalog_group(name)).size();
  };
  CHECK(count("c2") == 2);
  CHECK(count("c4") == 3);
  CHECK(count("c2xc2") == 5);  // trivial, three lines, full
  CHECK(count("s3") == 3);
  CHECK(count("d4") == 6);
  CHECK(count("q8") == 6);
  CHECK(count("a4") == 3);
  CHECK(count("s4") == 4);
  CHECK(count("a5") == 2);
}

TEST_CASE("normal subgroups agree with the all-subsets oracle up to order 16") {
  for (const char* name : {"c2", "c4", "c2xc2", "s3", "d4", "q8", "a4"}) {
    const FinGroup g = catalog_group(name);
    REQUIRE(g.n <= 16);
    const auto fast = normal_subgroups(g);
    const auto slow = oracles::normal_subgroups_bruteforce(g);
    INFO("group ", name);
    CHECK(fast == slow);
  }
}

TEST_CASE("generated subgroups and commutators") {
  const FinGroup s4 = catalog_group("s4");
  const auto ns = normal_subgroups(s4);
  REQUIRE(ns.size() == 4);
  const Mask all = ns.back();  // masks sort ascending, the full group last
  REQUIRE(all.count() == 24);
  // [S4, S4] = A4, [A4, A4] = V4, [V4, V4] = 1
  const Mask a4 = commutator_subgroup(s4, all, all);
  CHECK(a4.count() == 12);
  const Mask v4 = commutator_subgroup(s4, a4, a4);
  CHECK(v4.count() == 4);
  CHECK(commutator_subgroup(s4, v4, v4).count() == 1);
  // commutator of a normal subgroup with the trivial one is trivial
  const Mask triv = generated_subgroup(s4, Mask(24));
  CHECK(triv.count() == 1);
  CHECK(commutator_subgroup(s4, all, triv) == triv);

  // non-normal input is refused: a 2-element subgroup of S4 generated by
  // a transposition is not normal
  Mask two(24);
  two.set(s4.e);
  int transposition = -1;
  for (int x = 0; x < 24 && transposition < 0; ++x)
    if (x != s4.e && s4.op(x, x) == s4.e) transposition = x;
  two.set(transposition);
  if (is_subgroup(s4, two) && !is_normal_subgroup(s4, two)) {
    CHECK_THROWS_AS(commutator_subgroup(s4, two, all), mlat_error);
  }
}

TEST_CASE("classification table for the catalog groups") {
  auto cls = [](const std::string& name) { return classify_group(catalog_group(name)); };
  CHECK(cls("c4").nilpotent);
  CHECK(cls("c4").abelian);
  CHECK(cls("s3").solvable);
  CHECK_FALSE(cls("s3").nilpotent);
  CHECK(cls("d4").nilpotent);
  CHECK_FALSE(cls("d4").abelian);
  CHECK(cls("q8").nilpotent);
  CHECK(cls("a4").solvable);
  CHECK_FALSE(cls("a4").nilpotent);
  CHECK(cls("s4").solvable);
  CHECK_FALSE(cls("s4").nilpotent);
  CHECK(cls("a5").perfect);
  CHECK_FALSE(cls("a5").solvable);
  for (const char* name : {"c4", "s3", "d4", "q8", "a4", "s4", "a5"})
    CHECK(classify_group(catalog_group(name)).lattice_agrees);
}

TEST_CASE("normal-subgroup lattice: join is the product subgroup, multiplication variants") {
  const NormalLattice nl = normal_mult_lattice(catalog_group("d4"), GroupMult::commutator);
  CHECK(nl.lattice.n() == 6);
  // the three order-4 normal subgroups pairwise join to D4 and meet in
  // the centre (their pairwise intersections all equal {1, r^2})
  std::vector<int> order4;
  for (int x = 0; x < 6; ++x)
    if (nl.subgroups[x].count() == 4) order4.push_back(x);
  REQUIRE(order4.size() == 3);
  for (int a : order4)
    for (int b : order4)
      if (a != b) {
        CHECK(nl.subgroups[nl.lattice.join(a, b)].count() == 8);
        CHECK(nl.subgroups[nl.lattice.meet(a, b)].count() == 2);
      }

  // intersection multiplication coincides with meet; zero is constant bottom
  const MultLattice mi =
      normal_mult_lattice(catalog_group("d4"), GroupMult::intersection).lattice;
  CHECK(mi.mul_tab == mi.lat.meet_tab);
  const MultLattice mz = normal_mult_lattice(catalog_group("d4"), GroupMult::zero).lattice;
  for (int v : mz.mul_tab) CHECK(v == mz.bottom());
}

TEST_CASE("automorphism action filters down to characteristic subgroups") {
  const FinGroup v = catalog_group("c2xc2");
  const GroupAction aut = automorphism_action(v);
  CHECK(aut.gens.size() == 6);  // Aut(C2 x C2) is S3 on the three lines
  const NormalLattice plain = normal_mult_lattice(v, GroupMult::commutator);
  CHECK(plain.lattice.n() == 5);
  const NormalLattice invariant = normal_mult_lattice(v, GroupMult::commutator, &aut);
  CHECK(invariant.lattice.n() == 2);  // only 1 and the whole group survive
}

TEST_CASE("enumeration bound is enforced") {
  try {
    normal_subgroups(catalog_group("d4"), 3);
    FAIL("expected order_bound");
  } catch (const mlat_error& e) {
    CHECK(e.code() == errc::order_bound);
  }
}
