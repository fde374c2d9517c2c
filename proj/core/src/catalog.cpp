#include "mlat/catalog.hpp"

#include <cstdlib>

#include "mlat/errors.hpp"

namespace mlat {

namespace {

MultLattice with_meet_mult(FinLattice lat, const std::string& name) {
  std::vector<int> mul = lat.meet_tab;
  return attach_multiplication(std::move(lat), std::move(mul), name);
}

MultLattice with_zero_mult(FinLattice lat, const std::string& name) {
  std::vector<int> mul(static_cast<size_t>(lat.n) * lat.n, lat.bottom);
  return attach_multiplication(std::move(lat), std::move(mul), name);
}

std::string subset_label(int mask) {
  if (mask == 0) return "0";
  std::string s;
  for (int i = 0; i < 8; ++i)
    if (mask & (1 << i)) s.push_back(static_cast<char>('a' + i));
  return s;
}

}  // namespace

MultLattice boolean_lattice(int atoms, bool meet_mult) {
  if (atoms < 1 || atoms > 8)
    throw mlat_error(errc::validation_error, "boolean_lattice: atoms must be in 1..8");
  const int n = 1 << atoms;
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) {
    labels[x] = subset_label(x);
    for (int y = 0; y < n; ++y)
      leq[static_cast<size_t>(x) * n + y] = ((x & ~y) == 0) ? 1 : 0;
  }
  FinLattice lat = build_lattice(n, leq, labels);
  const std::string stem = "bool" + std::to_string(atoms);
  return meet_mult ? with_meet_mult(std::move(lat), stem + "-meet")
                   : with_zero_mult(std::move(lat), stem + "-zero");
}

MultLattice m3_lattice() {
  // 0, a, b, c, 1 with a, b, c pairwise incomparable.
  const int n = 5;
  std::vector<uint8_t> leq(n * n, 0);
  auto set = [&](int x, int y) { leq[static_cast<size_t>(x) * n + y] = 1; };
  for (int x = 0; x < n; ++x) { set(x, x); set(0, x); set(x, 4); }
  FinLattice lat = build_lattice(n, leq, {"0", "a", "b", "c", "1"});
  return with_meet_mult(std::move(lat), "m3-meet");
}

MultLattice n5_lattice() {
  // 0 < a < b < 1 alongside 0 < c < 1.
  const int n = 5;
  std::vector<uint8_t> leq(n * n, 0);
  auto set = [&](int x, int y) { leq[static_cast<size_t>(x) * n + y] = 1; };
  for (int x = 0; x < n; ++x) { set(x, x); set(0, x); set(x, 4); }
  set(1, 2);  // a <= b
  FinLattice lat = build_lattice(n, leq, {"0", "a", "b", "c", "1"});
  return with_meet_mult(std::move(lat), "n5-meet");
}

FinGroup catalog_group(const std::string& name) {
  if (name == "c2") return cyclic_group(2);
  if (name == "c4") return cyclic_group(4);
  if (name == "c2xc2") return direct_product(cyclic_group(2), cyclic_group(2));
  if (name == "s3") return symmetric_group(3);
  if (name == "d4") return dihedral_group(4);
  if (name == "q8") return quaternion_group();
  if (name == "a4") return alternating_group(4);
  if (name == "s4") return symmetric_group(4);
  if (name == "a5") return alternating_group(5);
  throw mlat_error(errc::validation_error, "unknown catalog group: " + name);
}

FinRng catalog_rng(const std::string& name) {
  if (name == "z4") return zmod(4);
  if (name == "z6") return zmod(6);
  if (name == "z8") return zmod(8);
  if (name == "2z8") return two_z_mod8();
  throw mlat_error(errc::validation_error, "unknown catalog rng: " + name);
}

SkewBrace catalog_brace(const std::string& name) {
  if (name == "triv-c2") return trivial_brace(cyclic_group(2));
  if (name == "triv-c4") return trivial_brace(cyclic_group(4));
  if (name == "triv-s3") return trivial_brace(symmetric_group(3));
  if (name == "triv-q8") return trivial_brace(quaternion_group());
  if (name == "rad-2z8") return brace_from_radical_rng(two_z_mod8());
  throw mlat_error(errc::validation_error, "unknown catalog brace: " + name);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const char* kind : {"dvr", "meet", "zero"})
    for (int k = 2; k <= 5; ++k)
      out.push_back("chain-" + std::string(kind) + "-" + std::to_string(k));
  out.insert(out.end(), {"bool2-meet", "bool2-zero", "bool3-meet", "bool3-zero",
                         "m3-meet", "n5-meet"});
  for (const char* g : {"c2", "c4", "c2xc2", "s3", "d4", "q8", "a4", "s4", "a5"})
    out.push_back("ngrp-" + std::string(g));
  for (const char* r : {"z4", "z6", "z8", "2z8"})
    out.push_back("ideals-" + std::string(r));
  out.insert(out.end(), {"brace-triv-s3", "brace-triv-q8", "brace-rad-2z8"});
  return out;
}

MultLattice catalog_lattice(const std::string& name) {
  auto starts = [&](const std::string& prefix) {
    return name.rfind(prefix, 0) == 0;
  };
  if (starts("chain-")) {
    const std::string rest = name.substr(6);
    auto dash = rest.find('-');
    if (dash != std::string::npos) {
      const std::string kind = rest.substr(0, dash);
      const int k = std::atoi(rest.c_str() + dash + 1);
      if (kind == "dvr") return chain_mult_lattice(k, ChainKind::dvr);
      if (kind == "meet") return chain_mult_lattice(k, ChainKind::meet);
      if (kind == "zero") return chain_mult_lattice(k, ChainKind::zero);
    }
  }
  if (name == "bool2-meet") return boolean_lattice(2, true);
  if (name == "bool2-zero") return boolean_lattice(2, false);
  if (name == "bool3-meet") return boolean_lattice(3, true);
  if (name == "bool3-zero") return boolean_lattice(3, false);
  if (name == "m3-meet") return m3_lattice();
  if (name == "n5-meet") return n5_lattice();
  if (starts("ngrp-"))
    return normal_mult_lattice(catalog_group(name.substr(5)), GroupMult::commutator).lattice;
  if (starts("ideals-"))
    return ideal_lattice(catalog_rng(name.substr(7)), RngMult::product).lattice;
  if (starts("brace-"))
    return brace_lattice(catalog_brace(name.substr(6))).lattice;
  throw mlat_error(errc::validation_error, "unknown catalog entry: " + name);
}

}  // namespace mlat
