#pragma once

// The polytope P spanned by the grlex initial segment {x >= 0 : x <= theta}.
//
// Vertex names: w = (b-1) e_d; u(k), 3 <= k <= d; v(j,k), 1 <= j < k <= d.
// When theta_k = 1 the points u(k) and v(k-1,k) coincide; the vertex keeps
// the name v(k-1,k) and the graph is the contraction of the generic one.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dantzig/exactmath.hpp"
#include "dantzig/graph.hpp"
#include "dantzig/labels.hpp"
#include "dantzig/polytope.hpp"

namespace dantzig {

class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class RequiresStrictTheta : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
class ImproperColoring : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Shared instance data: dimension, bound vector and its prefix sums.
/// Indices in the accessors are 1-based.
struct ThetaInstance {
  int d = 0;
  IntVector theta;
  std::int64_t b = 0;
  IntVector btilde;  // btilde[k] = theta_1 + ... + theta_k, btilde[0] = 0

  explicit ThetaInstance(IntVector t) : d(static_cast<int>(t.size())), theta(std::move(t)) {
    if (d < 3) throw InvalidInstance("dimension must be at least 3, got " + std::to_string(d));
    btilde.assign(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 1; i <= d; ++i) {
      if (th(i) < 1) throw InvalidInstance("theta entries must be positive");
      btilde[static_cast<std::size_t>(i)] = btilde[static_cast<std::size_t>(i) - 1] + th(i);
    }
    b = btilde.back();
  }

  std::int64_t th(int i) const { return theta[static_cast<std::size_t>(i) - 1]; }
  std::int64_t bt(int k) const { return btilde[static_cast<std::size_t>(k)]; }
  bool strict() const {
    return std::all_of(theta.begin(), theta.end(), [](auto t) { return t >= 2; });
  }
  IntVector zero_vector() const { return IntVector(static_cast<std::size_t>(d), 0); }
};

struct GrlexInstance : ThetaInstance {
  using ThetaInstance::ThetaInstance;

  /// u(k) and v(k-1,k) coincide.
  bool merged(int k) const { return k >= 3 && k <= d && th(k) == 1; }

  /// Name under which a generic label appears in this instance.
  VertexLabel canonical(VertexLabel l) const {
    if (l.kind == VertexLabel::Kind::U && merged(l.k)) return VertexLabel::v(l.k - 1, l.k);
    return l;
  }

  IntVector point_w() const {
    IntVector x = zero_vector();
    x[static_cast<std::size_t>(d) - 1] = b - 1;
    return x;
  }
  IntVector point_u(int k) const {
    IntVector x = zero_vector();
    x[static_cast<std::size_t>(k) - 2] = bt(k - 1) + 1;
    x[static_cast<std::size_t>(k) - 1] = th(k) - 1;
    for (int i = k + 1; i <= d; ++i) x[static_cast<std::size_t>(i) - 1] = th(i);
    return x;
  }
  IntVector point_v(int j, int k) const {
    IntVector x = zero_vector();
    x[static_cast<std::size_t>(j) - 1] = bt(k);
    for (int i = k + 1; i <= d; ++i) x[static_cast<std::size_t>(i) - 1] = th(i);
    return x;
  }

  /// Generic label set (before merging), in construction order.
  std::vector<VertexLabel> generic_labels() const {
    std::vector<VertexLabel> out{VertexLabel::zero(), VertexLabel::theta(), VertexLabel::w()};
    for (int k = 3; k <= d; ++k) out.push_back(VertexLabel::u(k));
    for (int k = 2; k <= d; ++k)
      for (int j = 1; j < k; ++j) out.push_back(VertexLabel::v(j, k));
    return out;
  }

  /// Facet through theta that misses the given neighbour.
  FacetId facet_missing(VertexLabel neighbour) const {
    if (neighbour == VertexLabel::w()) return FacetId::grading();
    return FacetId::nontrivial(canonical(neighbour));
  }
};

inline VRep grlex_vertices(const GrlexInstance& in) {
  VRep r;
  r.vertices.push_back({VertexLabel::zero(), in.zero_vector()});
  r.vertices.push_back({VertexLabel::theta(), in.theta});
  r.vertices.push_back({VertexLabel::w(), in.point_w()});
  for (int k = 3; k <= in.d; ++k) {
    if (in.merged(k))
      r.merged.emplace_back(VertexLabel::v(k - 1, k), VertexLabel::u(k));
    else
      r.vertices.push_back({VertexLabel::u(k), in.point_u(k)});
  }
  for (int k = 2; k <= in.d; ++k)
    for (int j = 1; j < k; ++j) r.vertices.push_back({VertexLabel::v(j, k), in.point_v(j, k)});
  return r;
}

/// Columns v(1,2)-theta, u(3)-theta, ..., u(d)-theta, w-theta.
inline RationalMatrix grlex_facet_matrix(const GrlexInstance& in) {
  std::vector<IntVector> cols;
  const auto minus_theta = [&](IntVector x) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= in.theta[i];
    return x;
  };
  cols.push_back(minus_theta(in.point_v(1, 2)));
  for (int k = 3; k <= in.d; ++k) cols.push_back(minus_theta(in.point_u(k)));
  cols.push_back(minus_theta(in.point_w()));
  return RationalMatrix::from_columns(cols);
}

namespace detail {

inline void check_inverse(const RationalMatrix& n, const RationalMatrix& m, const char* what) {
  const std::size_t d = m.rows();
  if (d <= 12) {
    if (!(n * m == RationalMatrix::identity(d))) throw std::logic_error(std::string(what) + ": N*M != I");
    return;
  }
  // Larger sizes: check the first and last columns only.
  for (std::size_t c : {std::size_t{0}, d - 1}) {
    const RationalVector col = n * m.column(c);
    for (std::size_t i = 0; i < d; ++i)
      if (col[i] != (i == c ? 1 : 0)) throw std::logic_error(std::string(what) + ": N*M != I");
  }
}

}  // namespace detail

/// Inverse of the facet matrix from its closed-form recursion.
inline RationalMatrix grlex_facet_matrix_inverse(const GrlexInstance& in) {
  const int d = in.d;
  // p(i,j) = btilde_i * prod_{k=i+1..j} (btilde_k + 1) for j > i, btilde_i for j = i, 1 for j < i.
  const auto p = [&](int i, int j) -> Integer {
    if (j < i) return 1;
    Integer r = to_integer(in.bt(i));
    for (int k = i + 1; k <= j; ++k) r *= to_integer(in.bt(k) + 1);
    return r;
  };
  RationalMatrix n(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  const auto at = [&](int i, int j) -> Rational& {
    return n(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(j) - 1);
  };
  const Rational th2 = to_rational(in.th(2));
  for (int j = 1; j <= d; ++j) at(d, j) = -1;
  at(1, d) = -Rational(p(1, d - 1)) / th2;
  for (int j = d - 1; j >= 1; --j) at(1, j) = at(1, j + 1) + Rational(p(1, j - 1)) / th2;
  for (int i = 2; i <= d - 1; ++i) {
    at(i, d) = -Rational(p(i, d - 1));
    for (int j = d - 1; j >= 1; --j) at(i, j) = j >= i ? at(i, j + 1) + Rational(p(i, j - 1)) : at(i, j + 1);
  }
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) at(i, j).canonicalize();
  detail::check_inverse(n, grlex_facet_matrix(in), "grlex_facet_matrix_inverse");
  return n;
}

/// Facet ids of the nontrivial rows, in row order of the inverse.
inline std::vector<FacetId> grlex_nontrivial_ids(const GrlexInstance& in) {
  std::vector<FacetId> ids{in.facet_missing(VertexLabel::v(1, 2))};
  for (int k = 3; k <= in.d; ++k) ids.push_back(in.facet_missing(VertexLabel::u(k)));
  ids.push_back(FacetId::grading());
  return ids;
}

namespace detail {

/// x >= 0 followed by -N x <= -N theta.
inline HRep hrep_from_inverse(const ThetaInstance& in, const RationalMatrix& n, std::vector<FacetId> nontrivial) {
  const auto d = static_cast<std::size_t>(in.d);
  std::vector<RationalVector> rows;
  RationalVector beta;
  std::vector<FacetId> ids;
  for (std::size_t i = 0; i < d; ++i) {
    RationalVector r(d, 0);
    r[i] = -1;
    rows.push_back(std::move(r));
    beta.push_back(0);
    ids.push_back(FacetId::coord(static_cast<int>(i) + 1));
  }
  for (std::size_t i = 0; i < d; ++i) {
    RationalVector r = n.row(i);
    for (auto& q : r) q = -q;
    beta.push_back(dot(r, in.theta));
    rows.push_back(std::move(r));
    ids.push_back(nontrivial[i]);
  }
  return HRep(std::move(rows), std::move(beta), std::move(ids));
}

}  // namespace detail

inline HRep grlex_hrep(const GrlexInstance& in) {
  return detail::hrep_from_inverse(in, grlex_facet_matrix_inverse(in), grlex_nontrivial_ids(in));
}

/// Vertex-facet incidence from the closed formulas, without arithmetic on
/// coordinates.
inline IncidenceMatrix grlex_incidence(const GrlexInstance& in) {
  const int d = in.d;
  const VRep vr = grlex_vertices(in);
  std::vector<FacetId> facets;
  for (int i = 1; i <= d; ++i) facets.push_back(FacetId::coord(i));
  for (const auto& f : grlex_nontrivial_ids(in)) facets.push_back(f);
  IncidenceMatrix m(vr.labels(), facets);

  const auto nontrivial = grlex_nontrivial_ids(in);
  const auto all_but = [&](const VertexLabel& v, const std::set<FacetId>& skip) {
    for (const auto& f : nontrivial)
      if (!skip.count(f)) m.set(v, f);
  };
  const auto coords = [&](const VertexLabel& v, int upto, int except = 0) {
    for (int i = 1; i <= upto; ++i)
      if (i != except) m.set(v, FacetId::coord(i));
  };
  const auto u_pattern = [&](const VertexLabel& v, int k) {
    all_but(v, {in.facet_missing(VertexLabel::u(k))});
    coords(v, k - 2);
    if (in.th(k) == 1) m.set(v, FacetId::coord(k));
  };

  coords(VertexLabel::zero(), d);
  all_but(VertexLabel::theta(), {});
  all_but(VertexLabel::w(), {FacetId::grading()});
  coords(VertexLabel::w(), d - 1);
  for (int k = 3; k <= d; ++k)
    if (!in.merged(k)) u_pattern(VertexLabel::u(k), k);
  for (int k = 2; k <= d; ++k)
    for (int j = 1; j < k; ++j) {
      const auto v = VertexLabel::v(j, k);
      if (j == k - 1 && in.merged(k)) {
        u_pattern(v, k);
        continue;
      }
      std::set<FacetId> skip{in.facet_missing(VertexLabel::v(1, 2))};
      for (int t = 3; t <= k; ++t) skip.insert(in.facet_missing(VertexLabel::u(t)));
      all_but(v, skip);
      coords(v, k, j);
    }
  return m;
}

/// Edge list: the generic list for theta > 1, contracted at merged pairs.
inline std::vector<Edge> grlex_edges(const GrlexInstance& in) {
  const int d = in.d;
  using L = VertexLabel;
  std::vector<Edge> e;
  const auto add = [&](L a, L b) {
    a = in.canonical(a);
    b = in.canonical(b);
    if (a != b) e.push_back(ordered_edge(a, b));
  };
  add(L::theta(), L::w());
  add(L::theta(), L::v(1, 2));
  for (int k = 3; k <= d; ++k) add(L::theta(), L::u(k));
  add(L::zero(), L::w());
  for (int j = 1; j < d; ++j) add(L::zero(), L::v(j, d));
  // w meets every u and every v(j,k) with k < d; v(2,3) only from d = 4 on.
  for (int k = 3; k <= d; ++k) add(L::w(), L::u(k));
  for (int k = 2; k < d; ++k)
    for (int j = 1; j < k; ++j)
      if (!(j == 2 && k == 3) || d >= 4) add(L::w(), L::v(j, k));
  for (int k1 = 3; k1 <= d; ++k1)
    for (int k2 = k1 + 1; k2 <= d; ++k2) add(L::u(k1), L::u(k2));
  for (int k = 3; k <= d; ++k) add(L::v(k - 1, k), L::u(k));
  for (int k2 = 4; k2 <= d; ++k2)
    for (int k1 = 2; k1 <= k2 - 2; ++k1)
      for (int j = 1; j < k1; ++j) add(L::v(j, k1), L::u(k2));
  for (int k = 2; k <= d; ++k)
    for (int j1 = 1; j1 < k; ++j1)
      for (int j2 = j1 + 1; j2 < k; ++j2) add(L::v(j1, k), L::v(j2, k));
  for (int k = 2; k <= d - 1; ++k)
    for (int j = 1; j < k; ++j) add(L::v(j, k), L::v(j, k + 1));
  return canonical_edges(std::move(e));
}

inline PolytopeGraph grlex_graph(const GrlexInstance& in) {
  return PolytopeGraph(grlex_vertices(in).labels(), grlex_edges(in));
}

/// 0, v(1..d-1,d), u(d..3), theta, v(1,2), then the v(.,k) cliques for
/// k = 3..d-1, then w. A merged vertex is visited in the u chain.
inline std::vector<VertexLabel> grlex_hamiltonian_cycle(const GrlexInstance& in) {
  const int d = in.d;
  using L = VertexLabel;
  std::vector<L> c{L::zero()};
  for (int j = 1; j < d; ++j)
    if (!(j == d - 1 && in.merged(d))) c.push_back(L::v(j, d));
  for (int k = d; k >= 3; --k) c.push_back(in.canonical(L::u(k)));
  c.push_back(L::theta());
  c.push_back(L::v(1, 2));
  int s = 1;  // row index where the previous clique path ended
  for (int k = 3; k <= d - 1; ++k) {
    const auto keep = [&](int j) { return !(j == k - 1 && in.merged(k)); };
    int last = s;
    for (int j = s; j >= 1; --j)
      if (keep(j)) c.push_back(L::v(j, k)), last = j;
    for (int j = k - 1; j > s; --j)
      if (keep(j)) c.push_back(L::v(j, k)), last = j;
    s = last;
  }
  c.push_back(L::w());
  const PolytopeGraph g = grlex_graph(in);
  if (verify_hamiltonian(g, c)) return c;
  if (auto found = find_hamiltonian_cycle(g)) return *found;
  throw std::logic_error("grlex graph has no Hamiltonian cycle");
}

/// Colouring 0, theta -> 1, w -> 2, u(k) -> k, v(j,k) -> k-j+1. It is not
/// proper: w and each v(k-1,k) with k < d share colour 2.
inline Coloring grlex_formula_coloring(const GrlexInstance& in) {
  Coloring c;
  c[VertexLabel::zero()] = 1;
  c[VertexLabel::theta()] = 1;
  c[VertexLabel::w()] = 2;
  for (int k = 3; k <= in.d; ++k) c[in.canonical(VertexLabel::u(k))] = k;
  for (int k = 2; k <= in.d; ++k)
    for (int j = 1; j < k; ++j)
      if (!(j == k - 1 && in.merged(k))) c[VertexLabel::v(j, k)] = k - j + 1;
  return c;
}

/// Proper d-colouring for theta > 1: a backtracking search that tries the
/// formula colour of each vertex first.
inline Coloring grlex_coloring(const GrlexInstance& in) {
  if (!in.strict()) throw RequiresStrictTheta("grlex colouring needs every theta_i >= 2");
  const PolytopeGraph g = grlex_graph(in);
  auto c = find_coloring(g, in.d, grlex_formula_coloring(in));
  if (!c || !verify_coloring(g, *c).proper) throw ImproperColoring("no proper grlex colouring with d colours");
  return *c;
}

/// The clique {0} + {v(j,d)}.
inline std::vector<VertexLabel> grlex_clique(const GrlexInstance& in) {
  std::vector<VertexLabel> s{VertexLabel::zero()};
  for (int j = 1; j < in.d; ++j) s.push_back(in.canonical(VertexLabel::v(j, in.d)));
  return s;
}

struct ExpansionWitness {
  std::vector<VertexLabel> set;
  std::size_t boundary = 0;
};

/// A vertex set with boundary equal to its size.
inline ExpansionWitness grlex_expansion_witness(const GrlexInstance& in) {
  if (!in.strict()) throw RequiresStrictTheta("grlex expansion witness needs every theta_i >= 2");
  ExpansionWitness w;
  for (int j = 1; j < in.d; ++j) w.set.push_back(VertexLabel::v(j, in.d));
  w.set.push_back(VertexLabel::zero());
  w.boundary = boundary_size(grlex_graph(in), w.set);
  return w;
}

}  // namespace dantzig
