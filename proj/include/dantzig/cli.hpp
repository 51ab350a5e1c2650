#pragma once

// Command implementations behind the dantzig tool. Each command writes its
// output to a stream and returns the process exit code; argument parsing
// lives in the tool itself.

#include <json.hpp>

#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dantzig/exactmath.hpp"
#include "dantzig/graph.hpp"
#include "dantzig/grevlex.hpp"
#include "dantzig/grlex.hpp"
#include "dantzig/io.hpp"
#include "dantzig/oracle.hpp"
#include "dantzig/polytope.hpp"

namespace dantzig::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2, kBudgetExceeded = 3 };

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { GrLex, GrevLex };

inline std::string family_name(Family f) { return f == Family::GrLex ? "grlex" : "grevlex"; }

inline Family parse_family(const std::string& s) {
  if (s == "grlex") return Family::GrLex;
  if (s == "grevlex") return Family::GrevLex;
  throw InputError("unknown family '" + s + "' (expected grlex or grevlex)");
}

/// Comma-separated positive integers, at least three of them.
inline IntVector parse_theta(const std::string& s) {
  IntVector out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw InputError("theta entry '" + tok + "' is not an integer");
    }
    if (used != tok.size()) throw InputError("theta entry '" + tok + "' is not an integer");
    if (v < 1) throw InputError("theta entries must be positive, got " + tok);
    if (v > 1'000'000) throw InputError("theta entry " + tok + " is too large");
    out.push_back(v);
  }
  if (!s.empty() && s.back() == ',') throw InputError("trailing comma in theta");
  if (out.size() < 3) throw InputError("theta needs at least 3 entries, got " + std::to_string(out.size()));
  return out;
}

/// Everything the commands need about one instance.
struct Built {
  Family family = Family::GrLex;
  IntVector theta;
  int d = 0;
  std::optional<GrlexInstance> p;
  std::optional<GrevlexInstance> q;
  HRep h;
  VRep v;
  IncidenceMatrix symbolic;
  std::vector<Edge> edges;
  PolytopeGraph graph;

  VertexLabel theta_label() const { return family == Family::GrLex ? VertexLabel::theta() : VertexLabel::ubar(2); }
  bool strict() const { return std::all_of(theta.begin(), theta.end(), [](auto t) { return t >= 2; }); }
};

inline Built build(Family f, const IntVector& theta) {
  Built b;
  b.family = f;
  b.theta = theta;
  b.d = static_cast<int>(theta.size());
  try {
    if (f == Family::GrLex) {
      b.p.emplace(theta);
      b.h = grlex_hrep(*b.p);
      b.v = grlex_vertices(*b.p);
      b.symbolic = grlex_incidence(*b.p);
      b.edges = grlex_edges(*b.p);
    } else {
      b.q.emplace(theta);
      b.h = grevlex_hrep(*b.q);
      b.v = grevlex_vertices(*b.q);
      b.symbolic = grevlex_incidence(*b.q);
      b.edges = grevlex_edges(*b.q);
    }
  } catch (const InvalidInstance& e) {
    throw InputError(e.what());
  }
  b.graph = PolytopeGraph(b.v.labels(), b.edges);
  return b;
}

inline Json labels_json(const std::vector<VertexLabel>& ls) {
  Json a = Json::array();
  for (const auto& l : ls) a.push_back(to_string(l));
  return a;
}

inline Json edges_json(const std::vector<Edge>& es) {
  Json a = Json::array();
  for (const auto& [x, y] : es) a.push_back({to_string(x), to_string(y)});
  return a;
}

inline Json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

inline Json instance_json(const Built& b) {
  Json j;
  j["family"] = family_name(b.family);
  j["d"] = b.d;
  j["theta"] = b.theta;
  return j;
}

inline Json hrep_json(const HRep& h) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < h.size(); ++i) {
    Json r;
    r["facet"] = to_string(h.ids()[i]);
    Json n = Json::array();
    for (std::size_t j = 0; j < h.dim(); ++j) n.push_back(rational_json(h.normals()(i, j)));
    r["normal"] = n;
    r["rhs"] = rational_json(h.rhs()[i]);
    rows.push_back(r);
  }
  return rows;
}

inline Json vrep_json(const VRep& v) {
  Json a = Json::array();
  for (const auto& lv : v.vertices) a.push_back({{"label", to_string(lv.label)}, {"coords", lv.x}});
  return a;
}

// ---------------------------------------------------------------- construct

struct ConstructOptions {
  Family family = Family::GrLex;
  IntVector theta;
  std::string format = "json";
};

inline int cmd_construct(const ConstructOptions& o, std::ostream& out) {
  const Built b = build(o.family, o.theta);
  std::string title = family_name(b.family) + " theta=";
  for (std::size_t i = 0; i < b.theta.size(); ++i) title += (i ? "," : "") + std::to_string(b.theta[i]);
  if (o.format == "ine") {
    out << write_ine(b.h, title);
  } else if (o.format == "ext") {
    out << write_ext(b.v, title);
  } else if (o.format == "dot") {
    out << write_dot(b.graph, family_name(b.family));
  } else if (o.format == "json") {
    Json j;
    j["schema"] = 1;
    j["command"] = "construct";
    j["instance"] = instance_json(b);
    j["vertices"] = vrep_json(b.v);
    Json merged = Json::array();
    for (const auto& [kept, dropped] : b.v.merged) merged.push_back({to_string(kept), to_string(dropped)});
    j["merged"] = merged;
    j["inequalities"] = hrep_json(b.h);
    j["edges"] = edges_json(b.edges);
    out << j.dump(2) << '\n';
  } else {
    throw InputError("unknown format '" + o.format + "' (expected ine, ext, dot or json)");
  }
  return kPass;
}

// ------------------------------------------------------------------- verify

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::string status;  // pass, fail, skipped, budget_exceeded
  std::vector<Check> checks;
  std::vector<std::string> notes;
  Json metrics = Json::object();
  double millis = 0;

  void check(std::string n, bool ok, std::string detail = {}) { checks.push_back({std::move(n), ok, std::move(detail)}); }
  void note(std::string n) { notes.push_back(std::move(n)); }
};

inline const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> s{"vertices", "facets", "incidence", "dantzig", "graph", "expansion", "oracle"};
  return s;
}

struct VerifyOptions {
  Family family = Family::GrLex;
  IntVector theta;
  std::vector<std::string> suites{"all"};
  std::size_t expansion_max_n = 0;  // 0: vertex count of a 6-dimensional instance
  std::uint64_t point_cap = default_point_cap;
  bool timings = false;
};

inline std::size_t vertex_formula(int d) { return static_cast<std::size_t>(d * d + d + 2) / 2; }
inline std::size_t edge_formula(int d) { return static_cast<std::size_t>(d * d * d + 2 * d) / 3; }

namespace suites {

inline void vertices(const Built& b, SuiteResult& r) {
  const std::size_t expected = vertex_formula(b.d) - b.v.merged.size();
  r.check("vertex_count", b.v.size() == expected,
          "have " + std::to_string(b.v.size()) + ", expected " + std::to_string(expected));
  if (!b.v.merged.empty()) r.note("theta has entries equal to 1 at positions >= 3; merged vertices are counted once");
  r.check("distinct_coordinates", b.v.coordinate_set().size() == b.v.size());
  const OrderKind kind = b.family == Family::GrLex ? OrderKind::GrLex : OrderKind::GrevLex;
  std::string outside;
  for (const auto& lv : b.v.vertices)
    if (!is_initial_segment_member(kind, lv.x, b.theta)) outside = to_string(lv.label);
  r.check("vertices_in_segment", outside.empty(), outside.empty() ? "" : outside + " lies above theta");
  const auto inc = incidence(b.h, b.v);
  std::string weak;
  for (std::size_t i = 0; i < b.v.size(); ++i)
    if (!vertex_certificate(b.h, inc, i)) weak = to_string(b.v.vertices[i].label);
  r.check("vertex_certificates", weak.empty(), weak);
  r.metrics["vertex_count"] = b.v.size();
  Json merged = Json::array();
  for (const auto& [kept, dropped] : b.v.merged) merged.push_back({to_string(kept), to_string(dropped)});
  r.metrics["merged"] = merged;
}

inline void facets(const Built& b, SuiteResult& r) {
  const RationalMatrix m = b.p ? grlex_facet_matrix(*b.p) : grevlex_facet_matrix(*b.q);
  const RationalMatrix n = b.p ? grlex_facet_matrix_inverse(*b.p) : grevlex_facet_matrix_inverse(*b.q);
  r.check("closed_form_inverse", invert(m) == n);
  r.check("facet_count", b.h.size() == static_cast<std::size_t>(2 * b.d));
  const auto g = b.h.index_of(FacetId::grading());
  bool grading_ok = g.has_value() && b.h.rhs()[*g] == Rational(to_integer(degree(b.theta)));
  if (grading_ok)
    for (std::size_t j = 0; j < b.h.dim(); ++j) grading_ok = grading_ok && b.h.normals()(*g, j) == 1;
  r.check("grading_row", grading_ok);

  std::string bad;
  for (std::size_t i = 0; i < b.h.size(); ++i) {
    if (b.h.ids()[i].kind == FacetId::Kind::Coord) continue;
    const auto c = b.h.normal(i);
    for (std::size_t j = 0; j < c.size(); ++j) {
      const bool ok = b.p ? (sgn(c[j]) >= 0 && (j + 1 == c.size() || c[j] <= c[j + 1]))
                          : (sgn(c[j]) >= 0 && (j + 1 == c.size() || c[j] >= c[j + 1]));
      if (!ok) bad = to_string(b.h.ids()[i]);
    }
  }
  r.check(b.p ? "coefficients_nondecreasing" : "coefficients_nonincreasing", bad.empty(), bad);

  if (b.q) {
    // Row t-1 of -N: equal on columns 1..t-1, a strict drop at t, then nonincreasing.
    bool ok = true;
    for (int t = 2; t <= b.d; ++t) {
      const auto row = n.row(static_cast<std::size_t>(t) - 2);
      for (int c = 2; c <= t - 1; ++c) ok = ok && row[static_cast<std::size_t>(c) - 1] == row[0];
      ok = ok && -row[static_cast<std::size_t>(t) - 2] > -row[static_cast<std::size_t>(t) - 1];
      for (int c = t; c < b.d; ++c) ok = ok && -row[static_cast<std::size_t>(c) - 1] >= -row[static_cast<std::size_t>(c)];
    }
    r.check("inverse_row_profile", ok);
  }

  const auto inc = incidence(b.h, b.v);
  std::string flat;
  for (std::size_t f = 0; f < b.h.size(); ++f)
    if (!facet_certificate(b.h, b.v, inc, f)) flat = to_string(b.h.ids()[f]);
  r.check("facet_certificates", flat.empty(), flat);
  r.metrics["facet_count"] = b.h.size();
  r.metrics["facet_sizes"] = inc.facet_sizes();
}

inline void incidence_suite(const Built& b, SuiteResult& r) {
  const auto numeric = incidence(b.h, b.v);
  r.check("symbolic_equals_numeric", numeric == b.symbolic);
  if (b.q) {
    const int d = b.d;
    const auto& m = b.symbolic;
    bool prefix = true, tail = true;
    for (std::size_t f = 0; f < m.facet_count(); ++f) {
      if (m.facets()[f].kind == FacetId::Kind::Coord) continue;
      for (int k = 3; k <= d + 1; ++k)
        for (int j = 1; j <= k - 2; ++j)
          if (m.test(m.vertex_index(VertexLabel::vbar(j, k)), f))
            for (int jj = 1; jj < j; ++jj) prefix = prefix && m.test(m.vertex_index(VertexLabel::vbar(jj, k)), f);
      for (int k = 2; k <= d + 1; ++k)
        if (!m.test(m.vertex_index(VertexLabel::ubar(k)), f))
          for (int kk = k + 1; kk <= d + 1; ++kk) tail = tail && !m.test(m.vertex_index(VertexLabel::ubar(kk)), f);
    }
    r.check("vbar_rows_prefix_closed", prefix);
    r.check("ubar_leaves_facets_for_good", tail);
  }
}

inline void dantzig(const Built& b, SuiteResult& r) {
  const auto inc = incidence(b.h, b.v);
  const VertexLabel th = b.theta_label();
  r.check("cones_at_0_and_theta_cover", cone_cover_test(inc, {VertexLabel::zero(), th}));
  r.check("cone_at_0_alone_insufficient", !cone_cover_test(inc, {VertexLabel::zero()}));
  const auto pairs = list_antipodal_pairs(inc);
  std::vector<Edge> expected{ordered_edge(VertexLabel::zero(), th)};
  if (b.q && b.d == 3) expected.push_back(ordered_edge(VertexLabel::vbar(1, 3), VertexLabel::vbar(2, 4)));
  std::sort(expected.begin(), expected.end());
  r.check("antipodal_pairs", pairs == expected);
  r.metrics["antipodal_pairs"] = edges_json(pairs);
  try {
    const auto c0 = tangent_cone(b.h, b.v, inc, VertexLabel::zero());
    const auto ct = tangent_cone(b.h, b.v, inc, th);
    r.check("two_cone_system_matches", equivalent_systems(dantzig_hrep(c0, ct), b.h));
  } catch (const NonSimplicialCone& e) {
    r.check("two_cone_system_matches", false, e.what());
  }
}

inline void graph(const Built& b, SuiteResult& r) {
  const int d = b.d;
  const auto& g = b.graph;
  const bool generic = b.q || b.strict();
  r.check("edges_match_adjacency", adjacency_edges(b.h, b.v) == b.edges);
  if (generic) {
    r.check("edge_count", g.edge_count() == edge_formula(d),
            "have " + std::to_string(g.edge_count()) + ", expected " + std::to_string(edge_formula(d)));
    Rational avg(static_cast<unsigned long>(2 * g.edge_count()), static_cast<unsigned long>(g.size()));
    avg.canonicalize();
    // The closed form (2/3)(d-1 + (d+2)/(d^2+d+2)) is |E|/|V|; the mean degree is twice that.
    const Rational half = Rational(2, 3) * (Rational(d - 1) + Rational(d + 2, d * d + d + 2));
    r.check("average_degree", avg == 2 * half, avg.get_str());
    r.metrics["average_degree"] = avg.get_str();
  } else {
    r.note("theta has entries equal to 1: count, degree, radius and colouring formulas for theta > 1 are reported, not asserted");
  }

  // Degree formulas.
  if (b.p && generic) {
    bool ok = g.degree(VertexLabel::theta()) == static_cast<std::size_t>(d) &&
              g.degree(VertexLabel::zero()) == static_cast<std::size_t>(d) &&
              g.degree(VertexLabel::w()) == static_cast<std::size_t>((d * d - d + 2) / 2);
    for (int k = 3; k <= d; ++k) ok = ok && g.degree(VertexLabel::u(k)) == static_cast<std::size_t>(d + (k - 2) * (k - 3) / 2);
    for (int k = 2; k <= d; ++k)
      for (int j = 1; j < k; ++j) ok = ok && g.degree(VertexLabel::v(j, k)) == static_cast<std::size_t>(d);
    r.check("degrees", ok);
  } else if (b.q) {
    bool ok = g.degree(VertexLabel::zero()) == static_cast<std::size_t>(d);
    for (int k = 2; k <= d + 1; ++k) ok = ok && g.degree(VertexLabel::ubar(k)) == static_cast<std::size_t>(d);
    for (int k = 3; k <= d + 1; ++k)
      for (int j = 1; j <= k - 2; ++j) ok = ok && g.degree(VertexLabel::vbar(j, k)) == static_cast<std::size_t>(d + k - j - 2);
    r.check("degrees", ok);
  }

  // Neighbours of theta and 0.
  const auto neighbour_set = [&](const VertexLabel& l) {
    std::set<VertexLabel> s;
    const auto& nb = g.neighbours(g.index_of(l));
    for (auto i = nb.find_first(); i != Bitset::npos; i = nb.find_next(i)) s.insert(g.label(i));
    return s;
  };
  std::set<VertexLabel> nt, n0;
  if (b.p) {
    nt = {VertexLabel::w(), VertexLabel::v(1, 2)};
    for (int k = 3; k <= d; ++k) nt.insert(b.p->canonical(VertexLabel::u(k)));
    n0 = {VertexLabel::w()};
    for (int j = 1; j < d; ++j) n0.insert(VertexLabel::v(j, d));
  } else {
    nt = {VertexLabel::ubar(3)};
    for (int k = 3; k <= d + 1; ++k) nt.insert(VertexLabel::vbar(1, k));
    n0 = {VertexLabel::ubar(d + 1)};
    for (int j = 1; j < d; ++j) n0.insert(VertexLabel::vbar(j, d + 1));
  }
  r.check("neighbours_of_theta", neighbour_set(b.theta_label()) == nt);
  r.check("neighbours_of_0", neighbour_set(VertexLabel::zero()) == n0);

  const auto ecc = eccentricities(g);
  r.metrics["radius"] = ecc.radius;
  r.metrics["diameter"] = ecc.diameter;
  if (generic) {
    const std::size_t diam = (b.p && d >= 4) ? 3 : 2;
    r.check("radius", ecc.radius == 2, std::to_string(ecc.radius));
    r.check("diameter", ecc.diameter == diam, std::to_string(ecc.diameter));
  }

  const auto cycle = b.p ? grlex_hamiltonian_cycle(*b.p) : grevlex_hamiltonian_cycle(*b.q);
  r.check("hamiltonian_cycle", verify_hamiltonian(g, cycle));
  r.metrics["hamiltonian_cycle"] = labels_json(cycle);

  const auto clique = b.p ? grlex_clique(*b.p) : grevlex_clique(*b.q);
  r.check("clique", is_clique(g, clique) && clique.size() == static_cast<std::size_t>(d));
  if (generic) {
    const Coloring c = b.p ? grlex_coloring(*b.p) : grevlex_coloring(*b.q);
    const auto vc = verify_coloring(g, c);
    r.check("proper_d_colouring", vc.proper && vc.colors_used == static_cast<std::size_t>(d));
    r.metrics["chromatic_number"] = d;
    Json cj = Json::object();
    for (const auto& [l, col] : c) cj[to_string(l)] = col;
    r.metrics["colouring"] = cj;
  } else {
    r.metrics["chromatic_number"] = chromatic_number(g);
  }

  if (b.p && generic) {
    const auto w = grlex_expansion_witness(*b.p);
    r.check("expansion_witness_ratio_1", w.boundary == w.set.size());
    r.metrics["expansion_witness"] = labels_json(w.set);
  }
  r.metrics["vertex_count"] = g.size();
  r.metrics["edge_count"] = g.edge_count();
  r.metrics["degree_multiset"] = degree_multiset(g);
}

inline void expansion(const Built& b, SuiteResult& r, std::size_t limit, bool explicit_request) {
  const std::size_t n = b.graph.size();
  if (n > limit) {
    r.status = explicit_request ? "budget_exceeded" : "skipped";
    r.note("graph has " + std::to_string(n) + " vertices; exhaustive expansion limit is " + std::to_string(limit) +
           " (raise with --expansion-max-n)");
    return;
  }
  const auto e = edge_expansion_exact(b.graph, limit);
  r.metrics["value"] = e.value.get_str();
  r.metrics["boundary"] = e.boundary;
  r.metrics["witness"] = labels_json(e.witness);
  if (b.p && b.strict())
    r.check("expansion_equals_1", e.value == 1, e.value.get_str());
  else
    r.note("no reference value for this family and theta; value reported only");
}

inline void oracle(const Built& b, SuiteResult& r, std::uint64_t cap, bool explicit_request) {
  const OrderKind kind = b.family == Family::GrLex ? OrderKind::GrLex : OrderKind::GrevLex;
  try {
    const auto seg = enumerate_segment(kind, b.theta, cap);
    const auto alt = enumerate_segment_by_slices(kind, b.theta, cap);
    r.check("segment_routes_agree", seg.points == alt.points);
    const auto rep = verify_hull_equivalence(seg, b.h, b.v);
    r.check("segment_satisfies_system", rep.segment_in_hrep.passed, rep.segment_in_hrep.detail);
    r.check("basis_vertices_match", rep.basis_matches_vrep.passed, rep.basis_matches_vrep.detail);
    r.check("vertices_in_segment", rep.vrep_in_segment.passed, rep.vrep_in_segment.detail);
    r.check("vertex_certificates", rep.vertex_certificates.passed, rep.vertex_certificates.detail);
    const auto irr = irredundant_rows(b.h);
    r.check("rows_irredundant", std::all_of(irr.begin(), irr.end(), [](bool x) { return x; }));
    r.metrics["segment_points"] = seg.points.size();
  } catch (const BudgetExceeded& e) {
    r.checks.clear();
    r.status = explicit_request ? "budget_exceeded" : "skipped";
    r.note(e.what());
  }
}

}  // namespace suites

inline std::vector<std::string> expand_suites(const std::vector<std::string>& requested, bool& all) {
  all = false;
  std::vector<std::string> out;
  for (const auto& s : requested) {
    if (s == "all") {
      all = true;
      continue;
    }
    if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
      throw InputError("unknown suite '" + s + "'");
  }
  for (const auto& s : all_suites())
    if (all || std::find(requested.begin(), requested.end(), s) != requested.end()) out.push_back(s);
  return out;
}

inline Json suite_json(const SuiteResult& r, bool timings) {
  Json j;
  j["name"] = r.name;
  j["status"] = r.status;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed && !c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  if (!r.notes.empty()) j["notes"] = r.notes;
  j["metrics"] = r.metrics;
  if (timings) j["millis"] = r.millis;
  return j;
}

inline int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  bool all = false;
  const auto names = expand_suites(o.suites, all);
  const Built b = build(o.family, o.theta);
  const std::size_t limit = o.expansion_max_n ? o.expansion_max_n : vertex_formula(6);

  Json report;
  report["schema"] = 1;
  report["command"] = "verify";
  report["instance"] = instance_json(b);
  Json suites_json = Json::array();
  bool failed = false, over_budget = false;
  for (const auto& name : names) {
    SuiteResult r;
    r.name = name;
    const bool explicit_request = !all;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      if (name == "vertices") suites::vertices(b, r);
      else if (name == "facets") suites::facets(b, r);
      else if (name == "incidence") suites::incidence_suite(b, r);
      else if (name == "dantzig") suites::dantzig(b, r);
      else if (name == "graph") suites::graph(b, r);
      else if (name == "expansion") suites::expansion(b, r, limit, explicit_request);
      else if (name == "oracle") suites::oracle(b, r, o.point_cap, explicit_request);
    } catch (const std::exception& e) {
      r.check("completed", false, e.what());
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (r.status.empty())
      r.status = std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.passed; }) ? "pass" : "fail";
    failed = failed || r.status == "fail";
    over_budget = over_budget || r.status == "budget_exceeded";
    suites_json.push_back(suite_json(r, o.timings));
  }
  report["suites"] = suites_json;
  report["result"] = failed ? "fail" : over_budget ? "budget_exceeded" : "pass";
  out << report.dump(2) << '\n';
  return failed ? kFail : over_budget ? kBudgetExceeded : kPass;
}

// ------------------------------------------------------------------ compare

struct CompareOptions {
  Family family_a = Family::GrLex;
  IntVector theta_a;
  Family family_b = Family::GrLex;
  IntVector theta_b;
};

inline int cmd_compare(const CompareOptions& o, std::ostream& out) {
  if (o.theta_a.size() != o.theta_b.size())
    throw InputError("dimensions differ: " + std::to_string(o.theta_a.size()) + " vs " + std::to_string(o.theta_b.size()));
  const Built a = build(o.family_a, o.theta_a);
  const Built b = build(o.family_b, o.theta_b);
  Json j;
  j["schema"] = 1;
  j["command"] = "compare";
  j["a"] = instance_json(a);
  j["b"] = instance_json(b);
  if (a.family == b.family) {
    j["method"] = "incidence";
    try {
      j["equal"] = combinatorially_equal(a.symbolic, b.symbolic);
    } catch (const LabelMismatch& e) {
      j["equal"] = false;
      j["reason"] = e.what();
    }
  } else {
    j["method"] = "invariants";
    const auto da = degree_multiset(a.graph), db = degree_multiset(b.graph);
    const auto fa = incidence(a.h, a.v).facet_sizes(), fb = incidence(b.h, b.v).facet_sizes();
    Json inv;
    inv["vertex_count"] = {a.graph.size(), b.graph.size()};
    inv["edge_count"] = {a.graph.edge_count(), b.graph.edge_count()};
    inv["degree_multiset"] = {da, db};
    inv["facet_sizes"] = {fa, fb};
    j["invariants"] = inv;
    Json differ = Json::array();
    if (a.graph.size() != b.graph.size()) differ.push_back("vertex_count");
    if (a.graph.edge_count() != b.graph.edge_count()) differ.push_back("edge_count");
    if (da != db) differ.push_back("degree_multiset");
    if (fa != fb) differ.push_back("facet_sizes");
    j["distinguished_by"] = differ;
    if (differ.empty()) j["equal"] = nullptr;
    else j["equal"] = false;
  }
  out << j.dump(2) << '\n';
  return kPass;
}

// -------------------------------------------------------------------- graph

struct GraphOptions {
  Family family = Family::GrLex;
  IntVector theta;
  std::string format = "json";
  std::size_t expansion_max_n = 0;
};

inline int cmd_graph(const GraphOptions& o, std::ostream& out) {
  const Built b = build(o.family, o.theta);
  if (o.format == "dot") {
    out << write_dot(b.graph, family_name(b.family));
    return kPass;
  }
  if (o.format != "json") throw InputError("graph supports formats dot and json, not '" + o.format + "'");
  const auto& g = b.graph;
  Json j;
  j["schema"] = 1;
  j["command"] = "graph";
  j["instance"] = instance_json(b);
  j["vertex_count"] = g.size();
  j["edge_count"] = g.edge_count();
  j["degree_multiset"] = degree_multiset(g);
  const auto ecc = eccentricities(g);
  j["radius"] = ecc.radius;
  j["diameter"] = ecc.diameter;
  const auto cycle = b.p ? grlex_hamiltonian_cycle(*b.p) : grevlex_hamiltonian_cycle(*b.q);
  j["hamiltonian_cycle"] = labels_json(cycle);
  j["max_clique"] = labels_json(max_clique(g));
  j["chromatic_number"] = chromatic_number(g);
  const std::size_t limit = o.expansion_max_n ? o.expansion_max_n : vertex_formula(6);
  if (g.size() <= limit) {
    const auto e = edge_expansion_exact(g, limit);
    j["expansion"] = {{"value", e.value.get_str()}, {"boundary", e.boundary}, {"witness", labels_json(e.witness)}};
  } else {
    j["expansion"] = nullptr;
  }
  j["edges"] = edges_json(g.edges());
  out << j.dump(2) << '\n';
  return kPass;
}

}  // namespace dantzig::cli
