#include "mlat/dot.hpp"

#include <algorithm>
#include <sstream>

#include "mlat/spectrum.hpp"

namespace mlat {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string hasse_dot(const MultLattice& m) {
  const ElementClassification cls = classify_elements(m);
  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  graph [label=" << quote(m.name) << "];\n";
  os << "  node [shape=ellipse];\n";
  for (int x = 0; x < m.n(); ++x) {
    os << "  v" << x << " [label=" << quote(m.label(x));
    if (cls.prime[x]) os << ", peripheries=2";
    os << "];\n";
  }
  std::vector<std::pair<int, int>> edges = m.lat.covers();
  std::sort(edges.begin(), edges.end());
  for (const auto& [upper, lower] : edges)
    os << "  v" << upper << " -> v" << lower << ";\n";
  os << "}\n";
  return os.str();
}

std::string spec_dot(const MultLattice& m) {
  const ZariskiTopology t = zariski(m);
  std::ostringstream os;
  os << "digraph spec {\n";
  os << "  graph [label=" << quote("Spec " + m.name) << "];\n";
  os << "  node [shape=ellipse, peripheries=2];\n";
  for (int p : t.spec) os << "  v" << p << " [label=" << quote(m.label(p)) << "];\n";
  // Covering pairs of the order induced on the primes.
  for (int p : t.spec) {
    for (int q : t.spec) {
      if (p == q || !m.le(q, p)) continue;
      bool covering = true;
      for (int r : t.spec)
        if (r != p && r != q && m.le(q, r) && m.le(r, p)) { covering = false; break; }
      if (covering) os << "  v" << p << " -> v" << q << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace mlat
