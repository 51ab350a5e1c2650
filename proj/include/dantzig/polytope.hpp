#pragma once

// H- and V-representations, vertex-facet incidence, tangent cones and the
// two-cone description of a polytope with an antipodal vertex pair.

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dantzig/exactmath.hpp"
#include "dantzig/labels.hpp"

namespace dantzig {

using Bitset = boost::dynamic_bitset<>;
using Edge = std::pair<VertexLabel, VertexLabel>;

class InfeasibleVertex : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class UnknownLabel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class EmptySet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NonSimplicialCone : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scale a row a.x <= rhs by a positive factor so that a is a primitive
/// integer vector. Throws on a zero normal.
inline void make_primitive(RationalVector& a, Rational& rhs) {
  Integer l = 1;
  for (const auto& q : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  Integer g = 0;
  for (const auto& q : a) {
    Rational s = q * Rational(l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  if (sgn(g) == 0) throw std::invalid_argument("inequality with zero normal");
  const Rational factor(l, g);
  for (auto& q : a) q *= factor;
  rhs *= factor;
}

/// {x : a x <= beta}, one FacetId per row. Rows are kept primitive.
class HRep {
 public:
  HRep() = default;

  HRep(std::vector<RationalVector> normals, RationalVector beta, std::vector<FacetId> ids = {}) {
    if (normals.size() != beta.size()) throw std::invalid_argument("HRep: row and rhs counts differ");
    if (ids.empty())
      for (std::size_t i = 0; i < normals.size(); ++i) ids.push_back(FacetId::row(static_cast<int>(i + 1)));
    if (ids.size() != normals.size()) throw std::invalid_argument("HRep: id count differs from row count");
    for (std::size_t i = 0; i < normals.size(); ++i) make_primitive(normals[i], beta[i]);
    a_ = RationalMatrix::from_rows(normals);
    beta_ = std::move(beta);
    ids_ = std::move(ids);
    cache_integers();
  }

  /// Integer convenience constructor.
  static HRep from_integers(const std::vector<IntVector>& normals, const IntVector& rhs,
                            std::vector<FacetId> ids = {}) {
    std::vector<RationalVector> rows;
    RationalVector beta;
    for (const auto& n : normals) {
      RationalVector r;
      for (auto x : n) r.push_back(to_rational(x));
      rows.push_back(std::move(r));
    }
    for (auto x : rhs) beta.push_back(to_rational(x));
    return HRep(std::move(rows), std::move(beta), std::move(ids));
  }

  std::size_t dim() const { return a_.cols(); }
  std::size_t size() const { return a_.rows(); }
  const RationalMatrix& normals() const { return a_; }
  const RationalVector& rhs() const { return beta_; }
  const std::vector<FacetId>& ids() const { return ids_; }
  RationalVector normal(std::size_t i) const { return a_.row(i); }

  std::optional<std::size_t> index_of(const FacetId& f) const {
    auto it = std::find(ids_.begin(), ids_.end(), f);
    if (it == ids_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
  }

  /// Sign of a_i x - beta_i.
  int slack_sign(std::size_t i, const IntVector& x) const {
    Integer s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += int_normals_[i][j] * to_integer(x[j]);
    // a x <= p/q  <=>  q (a x) <= p
    s *= beta_[i].get_den();
    return sgn(Integer(s - beta_[i].get_num()));
  }

  /// Sign of a_i x - beta_i for a rational point.
  int slack_sign(std::size_t i, const RationalVector& x) const {
    Rational s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += a_(i, j) * x[j];
    return sgn(Rational(s - beta_[i]));
  }

  bool contains(const IntVector& x) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (slack_sign(i, x) > 0) return false;
    return true;
  }

  const std::vector<std::vector<Integer>>& integer_normals() const { return int_normals_; }

  /// The same system without row i.
  HRep without_row(std::size_t i) const {
    std::vector<RationalVector> rows;
    RationalVector beta;
    std::vector<FacetId> ids;
    for (std::size_t r = 0; r < size(); ++r) {
      if (r == i) continue;
      rows.push_back(a_.row(r));
      beta.push_back(beta_[r]);
      ids.push_back(ids_[r]);
    }
    return HRep(std::move(rows), std::move(beta), std::move(ids));
  }

  /// Rows as (normal, rhs) pairs in sorted order, ignoring ids.
  std::vector<std::pair<RationalVector, Rational>> canonical_rows() const {
    std::vector<std::pair<RationalVector, Rational>> out;
    for (std::size_t i = 0; i < size(); ++i) out.emplace_back(a_.row(i), beta_[i]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  void cache_integers() {
    int_normals_.assign(size(), std::vector<Integer>(dim()));
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) int_normals_[i][j] = a_(i, j).get_num();
  }

  RationalMatrix a_;
  RationalVector beta_;
  std::vector<FacetId> ids_;
  std::vector<std::vector<Integer>> int_normals_;
};

/// Same inequalities up to row order (rows are primitive, so scaling is fixed).
inline bool equivalent_systems(const HRep& a, const HRep& b) {
  return a.dim() == b.dim() && a.canonical_rows() == b.canonical_rows();
}

struct LabeledVertex {
  VertexLabel label;
  IntVector x;
  friend bool operator==(const LabeledVertex&, const LabeledVertex&) = default;
};

struct VRep {
  std::vector<LabeledVertex> vertices;
  // (kept, dropped) for labels that named the same point.
  std::vector<std::pair<VertexLabel, VertexLabel>> merged;

  std::size_t size() const { return vertices.size(); }
  std::size_t dim() const { return vertices.empty() ? 0 : vertices.front().x.size(); }

  std::optional<std::size_t> index_of(const VertexLabel& l) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i].label == l) return i;
    return std::nullopt;
  }

  const IntVector& at(const VertexLabel& l) const {
    auto i = index_of(l);
    if (!i) throw UnknownLabel("no vertex " + to_string(l));
    return vertices[*i].x;
  }

  std::vector<VertexLabel> labels() const {
    std::vector<VertexLabel> out;
    for (const auto& v : vertices) out.push_back(v.label);
    return out;
  }

  std::set<IntVector> coordinate_set() const {
    std::set<IntVector> out;
    for (const auto& v : vertices) out.insert(v.x);
    return out;
  }

  /// Adds the vertex unless its point is already present; a collision is
  /// recorded as a merge that keeps the earlier label.
  void add(VertexLabel l, IntVector x) {
    for (const auto& v : vertices)
      if (v.x == x) {
        merged.emplace_back(v.label, l);
        return;
      }
    vertices.push_back({l, std::move(x)});
  }
};

/// Vertex-by-facet boolean matrix.
class IncidenceMatrix {
 public:
  IncidenceMatrix() = default;
  IncidenceMatrix(std::vector<VertexLabel> vertices, std::vector<FacetId> facets)
      : vertices_(std::move(vertices)), facets_(std::move(facets)),
        rows_(vertices_.size(), Bitset(facets_.size())) {}

  const std::vector<VertexLabel>& vertices() const { return vertices_; }
  const std::vector<FacetId>& facets() const { return facets_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t facet_count() const { return facets_.size(); }

  std::size_t vertex_index(const VertexLabel& l) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (vertices_[i] == l) return i;
    throw UnknownLabel("no vertex " + to_string(l));
  }
  std::size_t facet_index(const FacetId& f) const {
    for (std::size_t i = 0; i < facets_.size(); ++i)
      if (facets_[i] == f) return i;
    throw std::invalid_argument("no facet " + to_string(f));
  }

  const Bitset& row(std::size_t v) const { return rows_[v]; }
  Bitset& row(std::size_t v) { return rows_[v]; }
  bool test(std::size_t v, std::size_t f) const { return rows_[v].test(f); }
  void set(std::size_t v, std::size_t f, bool value = true) { rows_[v].set(f, value); }
  void set(const VertexLabel& v, const FacetId& f) { set(vertex_index(v), facet_index(f)); }

  /// Facets through a vertex, as ids.
  std::set<FacetId> facets_of(const VertexLabel& l) const {
    std::set<FacetId> out;
    const auto& r = rows_[vertex_index(l)];
    for (std::size_t f = 0; f < facets_.size(); ++f)
      if (r.test(f)) out.insert(facets_[f]);
    return out;
  }

  Bitset column(std::size_t f) const {
    Bitset c(vertices_.size());
    for (std::size_t v = 0; v < vertices_.size(); ++v) c.set(v, rows_[v].test(f));
    return c;
  }

  /// Vertex counts per facet, sorted descending.
  std::vector<std::size_t> facet_sizes() const {
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < facets_.size(); ++f) out.push_back(column(f).count());
    std::sort(out.rbegin(), out.rend());
    return out;
  }

  friend bool operator==(const IncidenceMatrix& a, const IncidenceMatrix& b) {
    return a.vertices_ == b.vertices_ && a.facets_ == b.facets_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<VertexLabel> vertices_;
  std::vector<FacetId> facets_;
  std::vector<Bitset> rows_;
};

/// Bit (v, F) is set iff vertex v lies on the hyperplane of row F.
inline IncidenceMatrix incidence(const HRep& h, const VRep& v) {
  IncidenceMatrix m(v.labels(), h.ids());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.vertices[i].x.size() != h.dim()) throw std::invalid_argument("incidence: dimension mismatch");
    for (std::size_t f = 0; f < h.size(); ++f) {
      const int s = h.slack_sign(f, v.vertices[i].x);
      if (s > 0)
        throw InfeasibleVertex("vertex " + to_string(v.vertices[i].label) + " violates " + to_string(h.ids()[f]));
      if (s == 0) m.set(i, f);
    }
  }
  return m;
}

/// Rank of the normals of the rows selected by mask.
inline std::size_t rank_of_mask(const HRep& h, const Bitset& mask) {
  std::vector<std::size_t> rows;
  for (auto f = mask.find_first(); f != Bitset::npos; f = mask.find_next(f)) rows.push_back(f);
  if (rows.empty()) return 0;
  return rank_of_rows(h.normals(), rows);
}

/// Two vertices span an edge iff their common tight rows have rank >= d-1
/// and no third vertex is tight on all of them.
inline bool adjacent(const HRep& h, const IncidenceMatrix& inc, std::size_t a, std::size_t b) {
  if (a == b) return false;
  const Bitset common = inc.row(a) & inc.row(b);
  if (common.count() + 1 < h.dim()) return false;
  for (std::size_t c = 0; c < inc.vertex_count(); ++c) {
    if (c == a || c == b) continue;
    if (common.is_subset_of(inc.row(c))) return false;
  }
  return rank_of_mask(h, common) + 1 >= h.dim();
}

inline Edge ordered_edge(VertexLabel a, VertexLabel b) { return a < b ? Edge{a, b} : Edge{b, a}; }

inline std::vector<Edge> canonical_edges(std::vector<Edge> edges) {
  for (auto& e : edges) e = ordered_edge(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

/// Edge list derived from incidence, in canonical order.
inline std::vector<Edge> adjacency_edges(const HRep& h, const IncidenceMatrix& inc) {
  std::vector<Edge> out;
  for (std::size_t a = 0; a < inc.vertex_count(); ++a)
    for (std::size_t b = a + 1; b < inc.vertex_count(); ++b)
      if (adjacent(h, inc, a, b)) out.push_back(ordered_edge(inc.vertices()[a], inc.vertices()[b]));
  return canonical_edges(std::move(out));
}

inline std::vector<Edge> adjacency_edges(const HRep& h, const VRep& v) { return adjacency_edges(h, incidence(h, v)); }

/// Tight rows at each vertex have rank d.
inline bool vertex_certificate(const HRep& h, const IncidenceMatrix& inc, std::size_t v) {
  return rank_of_mask(h, inc.row(v)) == h.dim();
}

/// Affine dimension of a point set (-1 when empty).
inline long affine_dimension(const std::vector<IntVector>& pts) {
  if (pts.empty()) return -1;
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RationalVector r;
    for (std::size_t j = 0; j < pts[i].size(); ++j) r.push_back(to_rational(pts[i][j] - pts[0][j]));
    diffs.push_back(std::move(r));
  }
  if (diffs.empty()) return 0;
  return static_cast<long>(rank(RationalMatrix::from_rows(diffs)));
}

/// Vertices on row f affinely span a hyperplane.
inline bool facet_certificate(const HRep& h, const VRep& v, const IncidenceMatrix& inc, std::size_t f) {
  std::vector<IntVector> pts;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (inc.test(i, f)) pts.push_back(v.vertices[i].x);
  return affine_dimension(pts) == static_cast<long>(h.dim()) - 1;
}

struct TangentCone {
  VertexLabel label;
  IntVector apex;
  std::vector<VertexLabel> neighbours;
  std::vector<IntVector> generators;  // neighbour minus apex
  std::optional<HRep> hrep;           // rows of the system tight at the apex
};

inline TangentCone tangent_cone(const HRep& h, const VRep& v, const IncidenceMatrix& inc, const VertexLabel& label) {
  const auto idx = v.index_of(label);
  if (!idx) throw UnknownLabel("no vertex " + to_string(label));
  TangentCone c;
  c.label = label;
  c.apex = v.vertices[*idx].x;
  for (std::size_t o = 0; o < v.size(); ++o) {
    if (!adjacent(h, inc, *idx, o)) continue;
    c.neighbours.push_back(v.vertices[o].label);
    IntVector g(c.apex.size());
    for (std::size_t j = 0; j < g.size(); ++j) g[j] = v.vertices[o].x[j] - c.apex[j];
    c.generators.push_back(std::move(g));
  }
  std::vector<RationalVector> rows;
  RationalVector beta;
  std::vector<FacetId> ids;
  for (std::size_t f = 0; f < h.size(); ++f) {
    if (!inc.test(*idx, f)) continue;
    rows.push_back(h.normal(f));
    beta.push_back(h.rhs()[f]);
    ids.push_back(h.ids()[f]);
  }
  c.hrep = HRep(std::move(rows), std::move(beta), std::move(ids));
  return c;
}

inline TangentCone tangent_cone(const HRep& h, const VRep& v, const VertexLabel& label) {
  return tangent_cone(h, v, incidence(h, v), label);
}

/// The cones at the vertices of s cut out the polytope iff every facet
/// contains a vertex of s.
inline bool cone_cover_test(const IncidenceMatrix& inc, const std::vector<VertexLabel>& s) {
  if (s.empty()) throw EmptySet("cone_cover_test: empty vertex set");
  Bitset covered(inc.facet_count());
  for (const auto& l : s) covered |= inc.row(inc.vertex_index(l));
  return covered.all();
}

inline bool cone_cover_test(const HRep& h, const VRep& v, const std::vector<VertexLabel>& s) {
  if (s.empty()) throw EmptySet("cone_cover_test: empty vertex set");
  return cone_cover_test(incidence(h, v), s);
}

/// Intersection of the inequality forms of several cones.
inline HRep cone_intersection(const std::vector<TangentCone>& cones) {
  std::vector<RationalVector> rows;
  RationalVector beta;
  std::vector<FacetId> ids;
  std::set<std::pair<RationalVector, Rational>> seen;
  for (const auto& c : cones) {
    if (!c.hrep) throw std::invalid_argument("cone_intersection: cone without inequality form");
    for (std::size_t i = 0; i < c.hrep->size(); ++i) {
      auto key = std::make_pair(c.hrep->normal(i), c.hrep->rhs()[i]);
      if (!seen.insert(key).second) continue;
      rows.push_back(key.first);
      beta.push_back(key.second);
      ids.push_back(c.hrep->ids()[i]);
    }
  }
  return HRep(std::move(rows), std::move(beta), std::move(ids));
}

/// Inequality form of a simplicial cone: x = apex + G y with y >= 0 becomes
/// -G^{-1} x <= -G^{-1} apex.
inline void append_simplicial_rows(const TangentCone& c, std::vector<RationalVector>& rows, RationalVector& beta) {
  const std::size_t d = c.apex.size();
  if (c.generators.size() != d)
    throw NonSimplicialCone("cone at " + to_string(c.label) + " has " + std::to_string(c.generators.size()) +
                            " generators in dimension " + std::to_string(d));
  RationalMatrix g = RationalMatrix::from_columns(c.generators);
  RationalMatrix inv;
  try {
    inv = invert(g);
  } catch (const SingularError&) {
    throw NonSimplicialCone("cone at " + to_string(c.label) + " has dependent generators");
  }
  RationalVector apex;
  for (auto x : c.apex) apex.push_back(to_rational(x));
  const RationalVector shift = inv * apex;
  for (std::size_t i = 0; i < d; ++i) {
    RationalVector r = inv.row(i);
    for (auto& q : r) q = -q;
    rows.push_back(std::move(r));
    beta.push_back(-shift[i]);
  }
}

/// The 2d-row system cut out by two simplicial vertex cones.
inline HRep dantzig_hrep(const TangentCone& cu, const TangentCone& cv) {
  std::vector<RationalVector> rows;
  RationalVector beta;
  append_simplicial_rows(cu, rows, beta);
  append_simplicial_rows(cv, rows, beta);
  return HRep(std::move(rows), std::move(beta));
}

/// Pairs of vertices such that every facet contains exactly one of them.
inline std::vector<Edge> list_antipodal_pairs(const IncidenceMatrix& inc) {
  std::vector<Edge> out;
  for (std::size_t a = 0; a < inc.vertex_count(); ++a)
    for (std::size_t b = a + 1; b < inc.vertex_count(); ++b) {
      if ((inc.row(a) & inc.row(b)).any()) continue;
      if (!(inc.row(a) | inc.row(b)).all()) continue;
      out.push_back(ordered_edge(inc.vertices()[a], inc.vertices()[b]));
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Edge> list_antipodal_pairs(const HRep& h, const VRep& v) {
  return list_antipodal_pairs(incidence(h, v));
}

}  // namespace dantzig
