#pragma once

// The polytope Q spanned by the grevlex initial segment {x >= 0 : x <= theta}.
//
// Vertex names: ubar(k), 2 <= k <= d+1, with ubar(2) = theta; vbar(j,k),
// 1 <= j < k-1 <= d. No two names ever share a point.

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dantzig/exactmath.hpp"
#include "dantzig/graph.hpp"
#include "dantzig/grlex.hpp"
#include "dantzig/labels.hpp"
#include "dantzig/polytope.hpp"

namespace dantzig {

struct GrevlexInstance : ThetaInstance {
  using ThetaInstance::ThetaInstance;

  /// theta is named ubar(2).
  static VertexLabel canonical(VertexLabel l) {
    return l.kind == VertexLabel::Kind::Theta ? VertexLabel::ubar(2) : l;
  }

  IntVector point_ubar(int k) const {
    IntVector x = zero_vector();
    x[static_cast<std::size_t>(k) - 2] = bt(k - 1);
    for (int i = k; i <= d; ++i) x[static_cast<std::size_t>(i) - 1] = th(i);
    return x;
  }
  IntVector point_vbar(int j, int k) const {
    IntVector x = zero_vector();
    if (k == d + 1) {
      x[static_cast<std::size_t>(j) - 1] = b - 1;
      return x;
    }
    x[static_cast<std::size_t>(j) - 1] = bt(k - 1) - 1;
    x[static_cast<std::size_t>(k) - 1] = th(k) + 1;
    for (int i = k + 1; i <= d; ++i) x[static_cast<std::size_t>(i) - 1] = th(i);
    return x;
  }

  FacetId facet_missing(VertexLabel neighbour) const {
    if (neighbour == VertexLabel::vbar(1, d + 1)) return FacetId::grading();
    return FacetId::nontrivial(neighbour);
  }
};

inline VRep grevlex_vertices(const GrevlexInstance& in) {
  VRep r;
  r.vertices.push_back({VertexLabel::zero(), in.zero_vector()});
  for (int k = 2; k <= in.d + 1; ++k) r.vertices.push_back({VertexLabel::ubar(k), in.point_ubar(k)});
  for (int k = 3; k <= in.d + 1; ++k)
    for (int j = 1; j <= k - 2; ++j) r.vertices.push_back({VertexLabel::vbar(j, k), in.point_vbar(j, k)});
  return r;
}

/// Columns ubar(3)-theta, vbar(1,3)-theta, ..., vbar(1,d+1)-theta.
inline RationalMatrix grevlex_facet_matrix(const GrevlexInstance& in) {
  const auto minus_theta = [&](IntVector x) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= in.theta[i];
    return x;
  };
  std::vector<IntVector> cols{minus_theta(in.point_ubar(3))};
  for (int k = 3; k <= in.d + 1; ++k) cols.push_back(minus_theta(in.point_vbar(1, k)));
  return RationalMatrix::from_columns(cols);
}

/// Inverse of the facet matrix from its closed-form recursion.
inline RationalMatrix grevlex_facet_matrix_inverse(const GrevlexInstance& in) {
  const int d = in.d;
  // q(i,j) = theta_i theta_j prod_{k=i+1..j-1} (theta_k + 1) for j > i, theta_i for j = i, 1 for j < i.
  const auto q = [&](int i, int j) -> Integer {
    if (j < i) return 1;
    if (j == i) return to_integer(in.th(i));
    Integer r = to_integer(in.th(i)) * to_integer(in.th(j));
    for (int k = i + 1; k <= j - 1; ++k) r *= to_integer(in.th(k) + 1);
    return r;
  };
  RationalMatrix n(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  const auto at = [&](int i, int j) -> Rational& {
    return n(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(j) - 1);
  };
  const Rational th1 = to_rational(in.th(1));

  // Last column.
  at(d, d) = -1;
  at(d - 1, d) = to_rational(1 - in.th(d));
  for (int i = 2; i <= d - 2; ++i) at(i, d) = -Rational(q(i + 1, d));
  at(1, d) = -Rational(q(2, d)) / th1;

  // Walk each row leftwards adding the column increments.
  for (int j = d - 1; j >= 1; --j) {
    Rational step;
    if (j == 1) step = -1 / th1;
    else if (j == 2) step = -to_rational(in.th(2) - 1) / th1;
    else step = -Rational(q(2, j)) / th1;
    at(1, j) = at(1, j + 1) + step;
    for (int i = 2; i <= d; ++i) {
      if (j < i) step = 0;
      else if (j == i) step = -1;
      else if (j == i + 1) step = to_rational(1 - in.th(j));
      else step = -Rational(q(i + 1, j));
      at(i, j) = at(i, j + 1) + step;
    }
  }
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) at(i, j).canonicalize();
  detail::check_inverse(n, grevlex_facet_matrix(in), "grevlex_facet_matrix_inverse");
  return n;
}

inline std::vector<FacetId> grevlex_nontrivial_ids(const GrevlexInstance& in) {
  std::vector<FacetId> ids{in.facet_missing(VertexLabel::ubar(3))};
  for (int k = 3; k <= in.d + 1; ++k) ids.push_back(in.facet_missing(VertexLabel::vbar(1, k)));
  return ids;
}

inline HRep grevlex_hrep(const GrevlexInstance& in) {
  return detail::hrep_from_inverse(in, grevlex_facet_matrix_inverse(in), grevlex_nontrivial_ids(in));
}

/// Vertex-facet incidence from the closed formulas.
inline IncidenceMatrix grevlex_incidence(const GrevlexInstance& in) {
  const int d = in.d;
  const VRep vr = grevlex_vertices(in);
  std::vector<FacetId> facets;
  for (int i = 1; i <= d; ++i) facets.push_back(FacetId::coord(i));
  const auto nontrivial = grevlex_nontrivial_ids(in);
  facets.insert(facets.end(), nontrivial.begin(), nontrivial.end());
  IncidenceMatrix m(vr.labels(), facets);

  const auto miss = [&](VertexLabel l) { return in.facet_missing(l); };
  const auto all_but = [&](const VertexLabel& v, const std::set<FacetId>& skip) {
    for (const auto& f : nontrivial)
      if (!skip.count(f)) m.set(v, f);
  };
  const auto coords = [&](const VertexLabel& v, int upto, int except = 0) {
    for (int i = 1; i <= upto; ++i)
      if (i != except) m.set(v, FacetId::coord(i));
  };

  coords(VertexLabel::zero(), d);
  all_but(VertexLabel::ubar(2), {});
  for (int k = 3; k <= d + 1; ++k) {
    std::set<FacetId> skip{miss(VertexLabel::ubar(3))};
    for (int t = 3; t <= k - 1; ++t) skip.insert(miss(VertexLabel::vbar(1, t)));
    all_but(VertexLabel::ubar(k), skip);
    coords(VertexLabel::ubar(k), k - 2);
  }
  for (int k = 3; k <= d + 1; ++k)
    for (int j = 1; j <= k - 2; ++j) {
      const auto v = VertexLabel::vbar(j, k);
      std::set<FacetId> skip{miss(VertexLabel::vbar(1, k))};
      if (j >= 2) {
        skip.insert(miss(VertexLabel::ubar(3)));
        for (int t = 3; t <= j; ++t) skip.insert(miss(VertexLabel::vbar(1, t)));
      }
      all_but(v, skip);
      coords(v, k - 1, j);
    }
  return m;
}

inline std::vector<Edge> grevlex_edges(const GrevlexInstance& in) {
  const int d = in.d;
  using L = VertexLabel;
  std::vector<Edge> e;
  const auto add = [&](L a, L b) { e.push_back(ordered_edge(a, b)); };
  add(L::zero(), L::ubar(d + 1));
  for (int j = 1; j <= d - 1; ++j) add(L::zero(), L::vbar(j, d + 1));
  for (int k = 2; k <= d; ++k) add(L::ubar(k), L::ubar(k + 1));
  for (int k = 4; k <= d + 1; ++k)
    for (int j = 1; j <= k - 3; ++j) add(L::ubar(k), L::vbar(j, k - 1));
  for (int j = 2; j <= d; ++j)
    for (int k = j + 1; k <= d + 1; ++k) add(L::ubar(j), L::vbar(j - 1, k));
  for (int j = 1; j + 2 <= d + 1; ++j)
    for (int k1 = j + 2; k1 <= d + 1; ++k1)
      for (int k2 = k1 + 1; k2 <= d + 1; ++k2) add(L::vbar(j, k1), L::vbar(j, k2));
  for (int k = 3; k <= d + 1; ++k)
    for (int j1 = 1; j1 <= k - 2; ++j1)
      for (int j2 = j1 + 1; j2 <= k - 2; ++j2) add(L::vbar(j1, k), L::vbar(j2, k));
  return canonical_edges(std::move(e));
}

inline PolytopeGraph grevlex_graph(const GrevlexInstance& in) {
  return PolytopeGraph(grevlex_vertices(in).labels(), grevlex_edges(in));
}

/// 0, ubar(d+1), ..., ubar(2), then the cliques vbar(.,k) for k = 3..d+1,
/// each entered on the row where the previous one was left.
inline std::vector<VertexLabel> grevlex_hamiltonian_cycle(const GrevlexInstance& in) {
  const int d = in.d;
  std::vector<VertexLabel> c{VertexLabel::zero()};
  for (int k = d + 1; k >= 2; --k) c.push_back(VertexLabel::ubar(k));
  for (int k = 3; k <= d + 1; ++k) {
    for (int j = k - 3; j >= 1; --j) c.push_back(VertexLabel::vbar(j, k));
    c.push_back(VertexLabel::vbar(k - 2, k));
  }
  const PolytopeGraph g = grevlex_graph(in);
  if (verify_hamiltonian(g, c)) return c;
  if (auto found = find_hamiltonian_cycle(g)) return *found;
  throw std::logic_error("grevlex graph has no Hamiltonian cycle");
}

/// Colours in 0..d-1 by residues mod d.
inline Coloring grevlex_coloring(const GrevlexInstance& in) {
  const int d = in.d;
  Coloring c;
  c[VertexLabel::zero()] = 1;
  for (int k = 3; k <= d + 1; ++k)
    for (int j = 1; j <= k - 2; ++j) c[VertexLabel::vbar(j, k)] = (k + j) % d;
  for (int k = 2; k <= d; ++k) c[VertexLabel::ubar(k)] = (2 * k - 1) % d;
  c[VertexLabel::ubar(d + 1)] = 0;
  if (!verify_coloring(grevlex_graph(in), c).proper) throw ImproperColoring("grevlex colouring is not proper");
  return c;
}

/// The clique {0} + {vbar(j,d+1)}.
inline std::vector<VertexLabel> grevlex_clique(const GrevlexInstance& in) {
  std::vector<VertexLabel> s{VertexLabel::zero()};
  for (int j = 1; j < in.d; ++j) s.push_back(VertexLabel::vbar(j, in.d + 1));
  return s;
}

/// Antipodal pairs; (0, theta) alone for d >= 4, plus (vbar(1,3), vbar(2,4)) at d = 3.
inline std::vector<Edge> grevlex_antipodal(const GrevlexInstance& in) {
  auto pairs = list_antipodal_pairs(grevlex_hrep(in), grevlex_vertices(in));
  std::vector<Edge> expected{ordered_edge(VertexLabel::zero(), VertexLabel::ubar(2))};
  if (in.d == 3) expected.push_back(ordered_edge(VertexLabel::vbar(1, 3), VertexLabel::vbar(2, 4)));
  std::sort(expected.begin(), expected.end());
  if (pairs != expected) throw std::logic_error("grevlex antipodal pairs differ from the expected list");
  return pairs;
}

}  // namespace dantzig
