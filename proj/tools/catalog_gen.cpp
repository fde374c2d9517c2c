// Writes the fixture corpus: every catalog algebra as a structure
// document, plus a manifest listing the files. The committed data/
// directory is the output of this tool; regenerate after changing any
// constructor.
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "mlat/catalog.hpp"
#include "mlat/structure.hpp"

namespace fs = std::filesystem;
using namespace mlat;

namespace {

std::vector<std::string> range_labels(int n, int step) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = std::to_string(i * step);
  return out;
}

const std::vector<std::string> q8_labels = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};

void emit(const fs::path& dir, std::vector<std::string>& names,
          const std::string& fname, const StructureDoc& doc) {
  std::ofstream out(dir / fname, std::ios::binary);
  out << structure_to_json(doc);
  if (!out) {
    std::cerr << "cannot write " << (dir / fname) << "\n";
    std::exit(1);
  }
  names.push_back(fname);
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path dir = argc > 1 ? argv[1] : "data";
  fs::create_directories(dir);
  std::vector<std::string> names;

  for (const char* g : {"c2", "c4", "c2xc2", "s3", "d4", "q8", "a4", "s4", "a5"}) {
    StructureDoc doc = doc_from_group(catalog_group(g));
    if (std::string(g) == "q8") doc.labels = q8_labels;
    emit(dir, names, std::string(g) + ".json", doc);
  }

  for (const char* r : {"z4", "z6", "z8", "2z8"}) {
    const FinRng rng = catalog_rng(r);
    StructureDoc doc = doc_from_rng(rng);
    doc.labels = range_labels(rng.n, std::string(r) == "2z8" ? 2 : 1);
    emit(dir, names, std::string(r) + ".json", doc);
  }

  for (const char* b : {"triv-c2", "triv-c4", "triv-s3", "triv-q8", "rad-2z8"}) {
    StructureDoc doc = doc_from_brace(catalog_brace(b));
    if (std::string(b) == "triv-q8") doc.labels = q8_labels;
    if (std::string(b) == "rad-2z8") doc.labels = range_labels(4, 2);
    emit(dir, names, "brace-" + std::string(b) + ".json", doc);
  }

  for (const std::string& name : catalog_names()) {
    const bool plain = name.rfind("chain-", 0) == 0 || name.rfind("bool", 0) == 0 ||
                       name.rfind("m3", 0) == 0 || name.rfind("n5", 0) == 0;
    if (!plain) continue;
    emit(dir, names, name + ".json", doc_from_lattice(catalog_lattice(name)));
  }

  // Convenience alias: the length-3 dvr chain is the ideal picture of a
  // ring like Z/p^2, worth having under that name.
  StructureDoc zp2 = doc_from_lattice(chain_mult_lattice(3, ChainKind::dvr));
  zp2.name = "zp2";
  emit(dir, names, "zp2.json", zp2);

  std::sort(names.begin(), names.end());
  std::ofstream manifest(dir / "manifest.txt", std::ios::binary);
  for (const std::string& f : names) manifest << f << "\n";
  std::cout << "wrote " << names.size() << " fixtures to " << dir << "\n";
  return 0;
}
