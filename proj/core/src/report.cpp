#include "mlat/report.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "mlat/dot.hpp"
#include "mlat/errors.hpp"
#include "mlat/series.hpp"
#include "mlat/spectrum.hpp"

namespace mlat {

namespace {

using nlohmann::json;

[[noreturn]] void conflict(const std::string& what) {
  throw mlat_error(errc::flag_conflict, what);
}

GroupMult parse_group_mult(const std::string& s) {
  if (s.empty() || s == "commutator") return GroupMult::commutator;
  if (s == "intersection") return GroupMult::intersection;
  if (s == "zero") return GroupMult::zero;
  conflict("--mult=" + s + " does not apply to a group document");
}

RngMult parse_rng_mult(const std::string& s) {
  if (s.empty() || s == "product") return RngMult::product;
  if (s == "intersection") return RngMult::intersection;
  if (s == "zero") return RngMult::zero;
  if (s == "ring-commutator") return RngMult::ring_commutator;
  conflict("--mult=" + s + " does not apply to a rng document");
}

/// The document's derived multiplicative lattice, plus the source algebra
/// when there is one (for the kind-specific report sections).
struct Realized {
  MultLattice m;
  std::optional<FinGroup> group;
  std::optional<FinRng> rng;
  std::optional<SkewBrace> brace;
};

Realized realize(const StructureDoc& doc, const CommandOptions& opt) {
  Realized r;
  switch (doc.kind) {
    case StructureKind::group: {
      FinGroup g = structure_group(doc);
      NormalLattice nl = normal_mult_lattice(g, parse_group_mult(opt.mult), nullptr,
                                             opt.bound > 0 ? opt.bound : 128);
      r.m = std::move(nl.lattice);
      r.group = std::move(g);
      return r;
    }
    case StructureKind::rng: {
      FinRng rng = structure_rng(doc);
      IdealLattice il =
          ideal_lattice(rng, parse_rng_mult(opt.mult), opt.bound > 0 ? opt.bound : 64);
      r.m = std::move(il.lattice);
      r.rng = std::move(rng);
      return r;
    }
    case StructureKind::brace: {
      if (!opt.mult.empty())
        conflict("--mult does not apply to a brace document (the ideal multiplication is fixed)");
      SkewBrace a = structure_brace(doc);
      BraceLattice bl = brace_lattice(a, opt.bound > 0 ? opt.bound : 16);
      r.m = std::move(bl.lattice);
      r.brace = std::move(a);
      return r;
    }
    case StructureKind::lattice: {
      if (!opt.mult.empty()) conflict("--mult does not apply to a lattice document");
      if (opt.bound > 0) conflict("--bound does not apply to a lattice document");
      r.m = structure_lattice(doc);
      return r;
    }
  }
  throw mlat_error(errc::validation_error, "unhandled document kind");
}

int element_by_label(const MultLattice& m, const std::string& label) {
  for (int x = 0; x < m.n(); ++x)
    if (m.label(x) == label) return x;
  throw mlat_error(errc::validation_error,
                   "no element labeled \"" + label + "\" in " + m.name);
}

json labels_json(const MultLattice& m, const std::vector<int>& xs) {
  json a = json::array();
  for (int x : xs) a.push_back(m.label(x));
  return a;
}

json opt_label(const MultLattice& m, const std::optional<int>& x) {
  return x ? json(m.label(*x)) : json(nullptr);
}

json laws_json(const LawReport& lr) {
  json j;
  j["associative"] = lr.associative;
  j["commutative"] = lr.commutative;
  j["m_distributive"] = lr.m_distributive;
  j["monotone"] = lr.monotone;
  return j;
}

json trace_json(const MultLattice& m, const SeriesTrace& t) {
  json j;
  j["terms"] = labels_json(m, t.terms);
  j["stabilized"] = t.stabilized;
  j["reached"] = t.reached >= 0 ? json(m.label(t.reached)) : json(nullptr);
  return j;
}

json series_json(const MultLattice& m, int x) {
  const SeriesBundle b = series(m, x);
  const ClassificationFlags f = classify(m, x);
  json j;
  j["element"] = m.label(x);
  j["lower_central_left"] = trace_json(m, b.lcs_left);
  j["lower_central_right"] = trace_json(m, b.lcs_right);
  j["derived"] = trace_json(m, b.derived);
  json flags;
  flags["abelian"] = f.abelian;
  flags["idempotent"] = f.idempotent;
  flags["left_nilpotent"] = f.left_nilpotent;
  flags["right_nilpotent"] = f.right_nilpotent;
  flags["solvable"] = f.solvable;
  j["flags"] = flags;
  return j;
}

json elements_json(const MultLattice& m) {
  const ElementClassification cls = classify_elements(m);
  json rows = json::array();
  for (int x = 0; x < m.n(); ++x) {
    const ClassificationFlags f = classify(m, x);
    json row;
    row["label"] = m.label(x);
    row["prime"] = cls.prime[x] != 0;
    row["semiprime"] = cls.semiprime[x] != 0;
    row["meet_irreducible"] = cls.meet_irreducible[x] != 0;
    row["idempotent"] = cls.idempotent[x] != 0;
    row["abelian"] = cls.abelian[x] != 0;
    row["left_nilpotent"] = f.left_nilpotent;
    row["right_nilpotent"] = f.right_nilpotent;
    row["solvable"] = f.solvable;
    rows.push_back(std::move(row));
  }
  return rows;
}

json spectrum_json(const MultLattice& m) {
  const ZariskiTopology t = zariski(m);
  json j;
  j["primes"] = labels_json(m, t.spec);
  json cs = json::array();
  for (const Mask& c : t.closed_sets) {
    json one = json::array();
    for (int pos : c.members()) one.push_back(m.label(t.spec[pos]));
    cs.push_back(std::move(one));
  }
  j["closed_sets"] = cs;
  j["sober"] = check_sober(t).sober;
  return j;
}

json galois_json(const MultLattice& m) {
  const GaloisReport g = galois(m);
  json j;
  j["radical_fixed"] = labels_json(m, g.iv_fixed);
  j["semiprime_match"] = g.semiprime_match;
  j["radical_distributive"] = g.rad_distributive;
  return j;
}

json upper_central_json(const MultLattice& m) {
  const UpperCentralReport u = upper_central_series(m);
  json j;
  j["trace"] = trace_json(m, u.trace);
  j["undefined_step"] = u.undefined_step;
  j["hypercenter"] = u.hypercenter >= 0 ? json(m.label(u.hypercenter)) : json(nullptr);
  j["hypercentral"] = u.hypercentral;
  return j;
}

json annihilators_json(const MultLattice& m, int x) {
  const AnnihilatorReport a = annihilators(m, x);
  json j;
  j["element"] = m.label(x);
  j["right_annihilator"] = opt_label(m, a.r_ann);
  j["left_annihilator"] = opt_label(m, a.l_ann);
  j["right_center"] = opt_label(m, a.r_center);
  j["left_center"] = opt_label(m, a.l_center);
  return j;
}

json hyper_json(const MultLattice& m) {
  const HyperabelianReport h = hyperabelian_report(m);
  json j;
  j["applicable"] = true;
  json cond;
  cond["a_top_only_semiprime"] = h.cond_a;
  cond["b_square_step_everywhere"] = h.cond_b;
  cond["c_chain_to_top"] = h.cond_c;
  cond["d_empty_spectrum"] = h.cond_d;
  cond["e_radical_is_top"] = h.cond_e;
  cond["f_msystems_hit_bottom"] = h.cond_f;
  j["conditions"] = cond;
  j["cond_f_inferred"] = h.cond_f_inferred;
  j["agree"] = h.agree;
  j["hyperabelian"] = h.hyperabelian;
  j["spec_size"] = h.spec_size;
  j["chain_witness"] =
      h.chain_witness ? labels_json(m, *h.chain_witness) : json(nullptr);
  return j;
}

json group_json(const FinGroup& g, int bound) {
  const GroupClassification c = classify_group(g, bound);
  json j;
  j["abelian"] = c.abelian;
  j["nilpotent"] = c.nilpotent;
  j["perfect"] = c.perfect;
  j["solvable"] = c.solvable;
  j["lattice_agrees"] = c.lattice_agrees;
  return j;
}

json rng_json(const FinRng& r, const std::vector<std::string>& labels) {
  const CircleRadical cr = circle_and_radical(r);
  json j;
  json jac = json::array();
  for (int x : cr.jacobson.members()) jac.push_back(labels[x]);
  j["jacobson"] = jac;
  j["is_radical_ring"] = cr.is_radical_ring;
  return j;
}

json brace_json(const SkewBrace& a, const std::vector<std::string>& labels, int bound) {
  json j;
  const YbeReport y = ybe_solution(a);
  json ybe;
  ybe["bijective"] = y.bijective;
  ybe["braid_holds"] = y.braid_holds;
  ybe["involutive"] = y.involutive;
  j["ybe"] = ybe;
  try {
    json soc = json::array();
    for (int x : socle(a, bound).members()) soc.push_back(labels[x]);
    j["socle"] = soc;
  } catch (const mlat_error& e) {
    if (e.code() != errc::undefined_annihilator) throw;
    j["socle"] = nullptr;
  }
  return j;
}

bool is_scalar(const json& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_str(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void render_text(const json& v, const std::string& path, std::ostream& os) {
  if (v.is_object()) {
    for (const auto& [k, val] : v.items())
      render_text(val, path.empty() ? k : path + "." + k, os);
    return;
  }
  if (v.is_array()) {
    const bool flat = std::all_of(v.begin(), v.end(), is_scalar);
    if (flat) {
      os << path << ": [";
      for (size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << scalar_str(v[i]);
      os << "]\n";
      return;
    }
    for (size_t i = 0; i < v.size(); ++i)
      render_text(v[i], path + "." + std::to_string(i), os);
    return;
  }
  os << path << ": " << scalar_str(v) << "\n";
}

CommandResult finish(const json& j, const CommandOptions& opt, int code) {
  if (opt.out == "dot") conflict("--out=dot applies only to the dot command");
  if (!opt.out.empty() && opt.out != "json" && opt.out != "text")
    conflict("unknown output format: " + opt.out);
  CommandResult res;
  res.exit_code = code;
  if (opt.out == "text") {
    std::ostringstream os;
    render_text(j, "", os);
    res.output = os.str();
  } else {
    res.output = j.dump(2) + "\n";
  }
  return res;
}

}  // namespace

CommandResult run_command(const StructureDoc& doc, const std::string& cmd,
                          const CommandOptions& opt) {
  static const std::vector<std::string> known = {
      "validate", "lattice", "spec",      "classify", "series",
      "hyperabelian", "brace-ybe", "report", "dot"};
  if (std::find(known.begin(), known.end(), cmd) == known.end())
    throw mlat_error(errc::unknown_command, "unknown command: " + cmd);
  if (opt.spec_order && cmd != "dot") conflict("--spec applies only to the dot command");
  if (!opt.element.empty() && cmd != "classify" && cmd != "series")
    conflict("--element applies only to classify and series");

  if (cmd == "validate") {
    if (!opt.mult.empty()) conflict("--mult does not apply to validate");
    if (opt.bound > 0) conflict("--bound does not apply to validate");
    json j;
    j["command"] = "validate";
    j["kind"] = structure_kind_name(doc.kind);
    j["n"] = doc.n;
    j["name"] = doc.name;
    switch (doc.kind) {
      case StructureKind::group: structure_group(doc); break;
      case StructureKind::rng: structure_rng(doc); break;
      case StructureKind::brace: structure_brace(doc); break;
      case StructureKind::lattice:
        j["laws"] = laws_json(law_report(structure_lattice(doc)));
        break;
    }
    j["ok"] = true;
    return finish(j, opt, 0);
  }

  if (cmd == "brace-ybe") {
    if (doc.kind != StructureKind::brace) conflict("brace-ybe requires a brace document");
    if (!opt.mult.empty()) conflict("--mult does not apply to brace-ybe");
    if (opt.bound > 0) conflict("--bound does not apply to brace-ybe");
    const SkewBrace a = structure_brace(doc);
    const YbeReport y = ybe_solution(a);
    json j;
    j["command"] = "brace-ybe";
    j["name"] = doc.name;
    j["bijective"] = y.bijective;
    j["braid_holds"] = y.braid_holds;
    j["involutive"] = y.involutive;
    const std::vector<std::string> labels = doc.effective_labels();
    if (doc.n <= 16) {
      json rt = json::array();
      for (int x = 0; x < doc.n; ++x)
        for (int yy = 0; yy < doc.n; ++yy) {
          const auto& [u, v] = y.r[static_cast<size_t>(x) * doc.n + yy];
          rt.push_back(json::array({labels[x], labels[yy], labels[u], labels[v]}));
        }
      j["r"] = rt;
    } else {
      j["r_omitted"] = true;
    }
    return finish(j, opt, 0);
  }

  // Everything else operates on the derived multiplicative lattice.
  const Realized r = realize(doc, opt);
  const MultLattice& m = r.m;
  const int bound = opt.bound > 0 ? opt.bound : 128;

  if (cmd == "lattice") {
    if (!(opt.out.empty() || opt.out == "json"))
      conflict("lattice emits a structure document; only --out=json applies");
    return {structure_to_json(doc_from_lattice(m)), 0};
  }
  if (cmd == "dot") {
    if (!(opt.out.empty() || opt.out == "dot"))
      conflict("dot emits DOT text; --out=" + opt.out + " conflicts");
    return {opt.spec_order ? spec_dot(m) : hasse_dot(m), 0};
  }

  json j;
  j["command"] = cmd;
  j["name"] = doc.name;
  json lat;
  lat["n"] = m.n();
  lat["name"] = m.name;
  lat["labels"] = labels_json(m, [&] {
    std::vector<int> idx(m.n());
    for (int i = 0; i < m.n(); ++i) idx[i] = i;
    return idx;
  }());
  j["lattice"] = lat;

  if (cmd == "spec") {
    j["spectrum"] = spectrum_json(m);
    return finish(j, opt, 0);
  }

  if (cmd == "classify") {
    if (!opt.element.empty()) {
      j["detail"] = series_json(m, element_by_label(m, opt.element));
    } else {
      j["elements"] = elements_json(m);
      if (r.group) j["group"] = group_json(*r.group, bound);
    }
    return finish(j, opt, 0);
  }

  if (cmd == "series") {
    const int x = opt.element.empty() ? m.top() : element_by_label(m, opt.element);
    j["series"] = series_json(m, x);
    j["upper_central"] = upper_central_json(m);
    return finish(j, opt, 0);
  }

  if (cmd == "hyperabelian") {
    j["hyperabelian"] = hyper_json(m);
    return finish(j, opt, 0);
  }

  // report: run every section, recording falsification events instead of
  // aborting, so one bad theorem still leaves a full document to inspect.
  json events = json::array();
  auto guard = [&](const char* section, auto fn) {
    try {
      fn();
    } catch (const falsification_error& e) {
      json ev;
      ev["section"] = section;
      ev["what"] = e.what();
      events.push_back(std::move(ev));
    }
  };
  guard("laws", [&] { j["laws"] = laws_json(law_report(m)); });
  guard("elements", [&] { j["elements"] = elements_json(m); });
  guard("spectrum", [&] { j["spectrum"] = spectrum_json(m); });
  guard("galois", [&] { j["galois"] = galois_json(m); });
  guard("series_top", [&] { j["series_top"] = series_json(m, m.top()); });
  guard("upper_central", [&] { j["upper_central"] = upper_central_json(m); });
  guard("annihilators_top", [&] { j["annihilators_top"] = annihilators_json(m, m.top()); });
  guard("hyperabelian", [&] {
    try {
      j["hyperabelian"] = hyper_json(m);
    } catch (const mlat_error& e) {
      if (e.code() != errc::not_m_distributive) throw;
      json h;
      h["applicable"] = false;
      h["reason"] = e.what();
      j["hyperabelian"] = h;
    }
  });
  if (r.group) guard("group", [&] { j["group"] = group_json(*r.group, bound); });
  if (r.rng) guard("rng", [&] { j["rng"] = rng_json(*r.rng, doc.effective_labels()); });
  if (r.brace) guard("brace", [&] {
    j["brace"] = brace_json(*r.brace, doc.effective_labels(), opt.bound > 0 ? opt.bound : 16);
  });
  j["falsifications"] = events;
  return finish(j, opt, events.empty() ? 0 : 2);
}

}  // namespace mlat
