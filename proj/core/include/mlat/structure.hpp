#ifndef MLAT_STRUCTURE_HPP
#define MLAT_STRUCTURE_HPP

#include <map>
#include <string>
#include <vector>

#include "mlat/brace.hpp"
#include "mlat/group.hpp"
#include "mlat/lattice.hpp"
#include "mlat/rng.hpp"

namespace mlat {

enum class StructureKind { group, rng, brace, lattice };

const char* structure_kind_name(StructureKind k);

/// Parsed structure file: a JSON object with keys kind, n, name,
/// optional labels, and the kind-specific n-by-n integer matrices
/// (group: cayley; rng: add, mul; brace: circ, star; lattice: leq, mul).
struct StructureDoc {
  StructureKind kind = StructureKind::lattice;
  int n = 0;
  std::string name;
  std::vector<std::string> labels;  // empty means "use e0, e1, ..."
  std::map<std::string, std::vector<int>> tables;  // row-major n*n

  const std::vector<int>& table(const std::string& key) const;
  std::vector<std::string> effective_labels() const;
};

/// Parse and validate a structure document. Shape problems (bad JSON,
/// wrong matrix sizes, entries out of range) are reported as parse
/// errors with a line number; algebraic problems surface later when the
/// document is instantiated.
StructureDoc load_structure_text(const std::string& text);
StructureDoc load_structure_file(const std::string& path);

std::string structure_to_json(const StructureDoc& doc);

/// Instantiate the algebra a document describes. Each builder revalidates
/// the axioms of its kind and throws ValidationError on failure.
FinGroup structure_group(const StructureDoc& doc);
FinRng structure_rng(const StructureDoc& doc);
SkewBrace structure_brace(const StructureDoc& doc);
MultLattice structure_lattice(const StructureDoc& doc);

/// Render an algebra back into a document (used by the catalog writer
/// and by the `lattice` command, whose output reloads as kind=lattice).
StructureDoc doc_from_group(const FinGroup& g);
StructureDoc doc_from_rng(const FinRng& r);
StructureDoc doc_from_brace(const SkewBrace& a);
StructureDoc doc_from_lattice(const MultLattice& m);

}  // namespace mlat

#endif
