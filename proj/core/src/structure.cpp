#include "mlat/structure.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mlat/errors.hpp"

namespace mlat {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(int line, const std::string& reason) {
  throw mlat_error(errc::parse_error,
                   "line " + std::to_string(line) + ": " + reason);
}

// Best-effort line attribution for semantic problems: locate the first
// occurrence of the offending key in the source text.
int line_of_key(const std::string& text, const std::string& key) {
  auto pos = text.find("\"" + key + "\"");
  if (pos == std::string::npos) return 1;
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + pos, '\n'));
}

int line_of_offset(const std::string& text, size_t byte) {
  if (byte > text.size()) byte = text.size();
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + byte, '\n'));
}

const std::map<StructureKind, std::vector<std::string>>& required_tables() {
  static const std::map<StructureKind, std::vector<std::string>> req = {
      {StructureKind::group, {"cayley"}},
      {StructureKind::rng, {"add", "mul"}},
      {StructureKind::brace, {"circ", "star"}},
      {StructureKind::lattice, {"leq", "mul"}},
  };
  return req;
}

std::vector<int> read_matrix(const json& j, const std::string& key, int n,
                             bool zero_one, const std::string& text) {
  const int at = line_of_key(text, key);
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    parse_fail(at, "matrix \"" + key + "\" must have " + std::to_string(n) + " rows");
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      parse_fail(at, "matrix \"" + key + "\" row " + std::to_string(r) +
                         " must have " + std::to_string(n) + " entries");
    for (int c = 0; c < n; ++c) {
      const json& cell = row[c];
      if (!cell.is_number_integer())
        parse_fail(at, "matrix \"" + key + "\" entry (" + std::to_string(r) +
                           "," + std::to_string(c) + ") is not an integer");
      const long long v = cell.get<long long>();
      const long long hi = zero_one ? 2 : n;
      if (v < 0 || v >= hi)
        parse_fail(at, "matrix \"" + key + "\" entry (" + std::to_string(r) +
                           "," + std::to_string(c) + ") = " + std::to_string(v) +
                           " is out of range [0," + std::to_string(hi) + ")");
      out.push_back(static_cast<int>(v));
    }
  }
  return out;
}

json matrix_to_json(const std::vector<int>& tab, int n) {
  json rows = json::array();
  for (int r = 0; r < n; ++r) {
    json row = json::array();
    for (int c = 0; c < n; ++c) row.push_back(tab[static_cast<size_t>(r) * n + c]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

const char* structure_kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::group: return "group";
    case StructureKind::rng: return "rng";
    case StructureKind::brace: return "brace";
    case StructureKind::lattice: return "lattice";
  }
  return "?";
}

const std::vector<int>& StructureDoc::table(const std::string& key) const {
  auto it = tables.find(key);
  if (it == tables.end())
    throw mlat_error(errc::validation_error, "document has no table \"" + key + "\"");
  return it->second;
}

std::vector<std::string> StructureDoc::effective_labels() const {
  if (!labels.empty()) return labels;
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = "e" + std::to_string(i);
  return out;
}

StructureDoc load_structure_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(line_of_offset(text, e.byte), e.what());
  }
  if (!j.is_object()) parse_fail(1, "top level must be an object");

  StructureDoc doc;
  if (!j.contains("kind") || !j["kind"].is_string())
    parse_fail(1, "missing string field \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "group") doc.kind = StructureKind::group;
  else if (kind == "rng") doc.kind = StructureKind::rng;
  else if (kind == "brace") doc.kind = StructureKind::brace;
  else if (kind == "lattice") doc.kind = StructureKind::lattice;
  else parse_fail(line_of_key(text, "kind"), "unknown kind \"" + kind + "\"");

  if (!j.contains("n") || !j["n"].is_number_integer())
    parse_fail(1, "missing integer field \"n\"");
  const long long n = j["n"].get<long long>();
  if (n < 1 || n > 1024)
    parse_fail(line_of_key(text, "n"), "n = " + std::to_string(n) + " is outside 1..1024");
  doc.n = static_cast<int>(n);

  if (j.contains("name")) {
    if (!j["name"].is_string()) parse_fail(line_of_key(text, "name"), "\"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("labels")) {
    const json& ls = j["labels"];
    if (!ls.is_array() || static_cast<int>(ls.size()) != doc.n)
      parse_fail(line_of_key(text, "labels"),
                 "\"labels\" must be an array of " + std::to_string(doc.n) + " strings");
    std::set<std::string> seen;
    for (const auto& l : ls) {
      if (!l.is_string()) parse_fail(line_of_key(text, "labels"), "labels must be strings");
      const std::string s = l.get<std::string>();
      if (!seen.insert(s).second)
        parse_fail(line_of_key(text, "labels"), "duplicate label \"" + s + "\"");
      doc.labels.push_back(s);
    }
  }

  const auto& need = required_tables().at(doc.kind);
  for (const std::string& key : need) {
    if (!j.contains(key))
      parse_fail(1, "kind \"" + kind + "\" requires matrix \"" + key + "\"");
    const bool zero_one = (key == "leq");
    doc.tables[key] = read_matrix(j[key], key, doc.n, zero_one, text);
  }
  for (const auto& [key, val] : j.items()) {
    (void)val;
    if (key == "kind" || key == "n" || key == "name" || key == "labels") continue;
    if (std::find(need.begin(), need.end(), key) == need.end())
      parse_fail(line_of_key(text, key), "unexpected field \"" + key + "\"");
  }
  return doc;
}

StructureDoc load_structure_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mlat_error(errc::parse_error, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_structure_text(buf.str());
}

std::string structure_to_json(const StructureDoc& doc) {
  json j;
  j["kind"] = structure_kind_name(doc.kind);
  j["n"] = doc.n;
  j["name"] = doc.name;
  if (!doc.labels.empty()) j["labels"] = doc.labels;
  for (const auto& [key, tab] : doc.tables) j[key] = matrix_to_json(tab, doc.n);
  return j.dump(2) + "\n";
}

FinGroup structure_group(const StructureDoc& doc) {
  if (doc.kind != StructureKind::group)
    throw mlat_error(errc::validation_error, "document is not a group");
  return build_group(doc.n, doc.table("cayley"), doc.name);
}

FinRng structure_rng(const StructureDoc& doc) {
  if (doc.kind != StructureKind::rng)
    throw mlat_error(errc::validation_error, "document is not a rng");
  return build_rng(doc.n, doc.table("add"), doc.table("mul"), doc.name);
}

SkewBrace structure_brace(const StructureDoc& doc) {
  if (doc.kind != StructureKind::brace)
    throw mlat_error(errc::validation_error, "document is not a brace");
  return build_brace(doc.n, doc.table("circ"), doc.table("star"), doc.name);
}

MultLattice structure_lattice(const StructureDoc& doc) {
  if (doc.kind != StructureKind::lattice)
    throw mlat_error(errc::validation_error, "document is not a lattice");
  const std::vector<int>& leq_int = doc.table("leq");
  std::vector<uint8_t> leq(leq_int.begin(), leq_int.end());
  FinLattice lat = build_lattice(doc.n, leq, doc.effective_labels());
  return attach_multiplication(std::move(lat), doc.table("mul"), doc.name);
}

StructureDoc doc_from_group(const FinGroup& g) {
  StructureDoc doc;
  doc.kind = StructureKind::group;
  doc.n = g.n;
  doc.name = g.name;
  doc.tables["cayley"] = g.tab;
  return doc;
}

StructureDoc doc_from_rng(const FinRng& r) {
  StructureDoc doc;
  doc.kind = StructureKind::rng;
  doc.n = r.n;
  doc.name = r.name;
  doc.tables["add"] = r.add;
  doc.tables["mul"] = r.mul;
  return doc;
}

StructureDoc doc_from_brace(const SkewBrace& a) {
  StructureDoc doc;
  doc.kind = StructureKind::brace;
  doc.n = a.n;
  doc.name = a.name;
  doc.tables["circ"] = a.circ;
  doc.tables["star"] = a.star;
  return doc;
}

StructureDoc doc_from_lattice(const MultLattice& m) {
  StructureDoc doc;
  doc.kind = StructureKind::lattice;
  doc.n = m.n();
  doc.name = m.name;
  doc.labels = m.lat.labels;
  doc.tables["leq"].assign(m.lat.leq.begin(), m.lat.leq.end());
  doc.tables["mul"] = m.mul_tab;
  return doc;
}

}  // namespace mlat
