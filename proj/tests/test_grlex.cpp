#include <gtest/gtest.h>

#include <random>

#include "dantzig/dantzig.hpp"

using namespace dantzig;
using L = VertexLabel;

namespace {

std::size_t vertex_count(int d) { return static_cast<std::size_t>(d * d + d + 2) / 2; }
std::size_t edge_count(int d) { return static_cast<std::size_t>(d * d * d + 2 * d) / 3; }

// A deterministic spread of theta vectors, including ones at every position.
std::vector<IntVector> thetas(int d, int count, int lo, int hi, unsigned seed) {
  std::mt19937 rng(seed + static_cast<unsigned>(d));
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<IntVector> out{IntVector(static_cast<std::size_t>(d), lo), IntVector(static_cast<std::size_t>(d), hi)};
  while (static_cast<int>(out.size()) < count) {
    IntVector t(static_cast<std::size_t>(d));
    for (auto& x : t) x = dist(rng);
    out.push_back(t);
  }
  return out;
}

std::set<L> neighbour_labels(const PolytopeGraph& g, const L& l) {
  std::set<L> s;
  const auto& nb = g.neighbours(g.index_of(l));
  for (auto i = nb.find_first(); i != Bitset::npos; i = nb.find_next(i)) s.insert(g.label(i));
  return s;
}

}  // namespace

TEST(GrlexInstance, RejectsBadInput) {
  EXPECT_THROW(GrlexInstance({2, 2}), InvalidInstance);
  EXPECT_THROW(GrlexInstance({2, 0, 2}), InvalidInstance);
  const GrlexInstance p({2, 3, 4});
  EXPECT_EQ(p.b, 9);
  EXPECT_EQ(p.btilde, (IntVector{0, 2, 5, 9}));
  EXPECT_TRUE(p.strict());
  EXPECT_FALSE(GrlexInstance({2, 1, 2}).strict());
}

TEST(GrlexVertices, D3) {
  const auto v = grlex_vertices(GrlexInstance({2, 2, 2}));
  ASSERT_EQ(v.size(), 7u);
  EXPECT_EQ(v.at(L::zero()), (IntVector{0, 0, 0}));
  EXPECT_EQ(v.at(L::theta()), (IntVector{2, 2, 2}));
  EXPECT_EQ(v.at(L::w()), (IntVector{0, 0, 5}));
  EXPECT_EQ(v.at(L::u(3)), (IntVector{0, 5, 1}));
  EXPECT_EQ(v.at(L::v(1, 2)), (IntVector{4, 0, 2}));
  EXPECT_EQ(v.at(L::v(1, 3)), (IntVector{6, 0, 0}));
  EXPECT_EQ(v.at(L::v(2, 3)), (IntVector{0, 6, 0}));
}

TEST(GrlexVertices, CountFormula) {
  for (int d = 3; d <= 8; ++d)
    for (const auto& t : thetas(d, 4, 2, 5, 1)) EXPECT_EQ(grlex_vertices(GrlexInstance(t)).size(), vertex_count(d));
}

TEST(GrlexVertices, OnesMergeUAndV) {
  const auto v = grlex_vertices(GrlexInstance({1, 1, 1}));
  EXPECT_EQ(v.size(), 6u);
  EXPECT_EQ(v.at(L::v(2, 3)), (IntVector{0, 3, 0}));
  EXPECT_FALSE(v.index_of(L::u(3)).has_value());
  EXPECT_EQ(v.merged, (std::vector<std::pair<L, L>>{{L::v(2, 3), L::u(3)}}));
  // theta_1 = 1 merges nothing.
  EXPECT_EQ(grlex_vertices(GrlexInstance({1, 2, 2})).size(), 7u);
  EXPECT_EQ(grlex_vertices(GrlexInstance({2, 1, 1, 1, 2})).size(), vertex_count(5) - 2);
}

TEST(GrlexFacetMatrix, D3) {
  const GrlexInstance p({2, 2, 2});
  const RationalMatrix m{{2, -2, -2}, {-2, 3, -2}, {0, -1, 3}};
  const RationalMatrix n{{make_rational(-7, 2), -4, -5}, {-3, -3, -4}, {-1, -1, -1}};
  EXPECT_EQ(grlex_facet_matrix(p), m);
  EXPECT_EQ(grlex_facet_matrix_inverse(p), n);
}

TEST(GrlexFacetMatrix, InverseOnRandomTheta) {
  for (int d = 3; d <= 10; ++d)
    for (const auto& t : thetas(d, 5, 1, 4, 2)) {
      const GrlexInstance p(t);
      EXPECT_EQ(grlex_facet_matrix_inverse(p) * grlex_facet_matrix(p), RationalMatrix::identity(static_cast<std::size_t>(d)));
    }
}

TEST(GrlexHRep, D3RowsAndIds) {
  const auto h = grlex_hrep(GrlexInstance({2, 2, 2}));
  ASSERT_EQ(h.size(), 6u);
  const auto row = [&](const FacetId& f) {
    const auto i = *h.index_of(f);
    return std::pair{h.normal(i), h.rhs()[i]};
  };
  EXPECT_EQ(row(FacetId::nontrivial(L::v(1, 2))), (std::pair{RationalVector{7, 8, 10}, Rational(50)}));
  EXPECT_EQ(row(FacetId::nontrivial(L::u(3))), (std::pair{RationalVector{3, 3, 4}, Rational(20)}));
  EXPECT_EQ(row(FacetId::grading()), (std::pair{RationalVector{1, 1, 1}, Rational(6)}));
  EXPECT_EQ(row(FacetId::coord(2)), (std::pair{RationalVector{0, -1, 0}, Rational(0)}));
}

TEST(GrlexHRep, CoefficientsNondecreasing) {
  for (int d = 3; d <= 8; ++d)
    for (const auto& t : thetas(d, 4, 1, 4, 3)) {
      const auto h = grlex_hrep(GrlexInstance(t));
      for (std::size_t i = 0; i < h.size(); ++i) {
        if (h.ids()[i].kind == FacetId::Kind::Coord) continue;
        const auto c = h.normal(i);
        EXPECT_GE(c[0], 0);
        for (std::size_t j = 0; j + 1 < c.size(); ++j) EXPECT_LE(c[j], c[j + 1]);
      }
    }
}

TEST(GrlexIncidence, Examples) {
  const GrlexInstance p5({2, 2, 2, 2, 2});
  const auto inc5 = grlex_incidence(p5);
  std::set<FacetId> nontrivial;
  for (const auto& f : grlex_nontrivial_ids(p5)) nontrivial.insert(f);
  EXPECT_EQ(inc5.facets_of(L::theta()), nontrivial);
  auto u4 = nontrivial;
  u4.erase(FacetId::nontrivial(L::u(4)));
  u4.insert(FacetId::coord(1));
  u4.insert(FacetId::coord(2));
  EXPECT_EQ(inc5.facets_of(L::u(4)), u4);
  EXPECT_EQ(u4.size(), 6u);

  const auto inc3 = grlex_incidence(GrlexInstance({2, 2, 2}));
  EXPECT_EQ(inc3.facets_of(L::v(2, 3)), (std::set<FacetId>{FacetId::coord(1), FacetId::coord(3), FacetId::grading()}));
}

TEST(GrlexIncidence, SymbolicMatchesNumeric) {
  for (int d = 3; d <= 7; ++d)
    for (const auto& t : thetas(d, 6, 1, 3, 4)) {
      const GrlexInstance p(t);
      EXPECT_EQ(grlex_incidence(p), incidence(grlex_hrep(p), grlex_vertices(p)));
    }
}

TEST(GrlexEdges, D3) {
  const std::vector<Edge> expected = canonical_edges({
      {L::theta(), L::w()}, {L::theta(), L::v(1, 2)}, {L::theta(), L::u(3)}, {L::zero(), L::w()},
      {L::zero(), L::v(1, 3)}, {L::zero(), L::v(2, 3)}, {L::w(), L::v(1, 2)}, {L::w(), L::u(3)},
      {L::v(2, 3), L::u(3)}, {L::v(1, 3), L::v(2, 3)}, {L::v(1, 2), L::v(1, 3)}});
  EXPECT_EQ(grlex_edges(GrlexInstance({2, 2, 2})), expected);
}

TEST(GrlexEdges, MatchAdjacencyAndCounts) {
  for (int d = 3; d <= 7; ++d)
    for (const auto& t : thetas(d, 6, 1, 3, 5)) {
      const GrlexInstance p(t);
      const auto e = grlex_edges(p);
      EXPECT_EQ(e, adjacency_edges(grlex_hrep(p), grlex_vertices(p)));
      if (p.strict()) {
        EXPECT_EQ(e.size(), edge_count(d));
      }
    }
}

TEST(GrlexGraph, DegreesAndNeighbours) {
  for (int d = 3; d <= 8; ++d) {
    const GrlexInstance p(thetas(d, 3, 2, 5, 6).back());
    const auto g = grlex_graph(p);
    EXPECT_EQ(g.degree(L::w()), static_cast<std::size_t>(d * d - d + 2) / 2);
    EXPECT_EQ(g.degree(L::theta()), static_cast<std::size_t>(d));
    EXPECT_EQ(g.degree(L::zero()), static_cast<std::size_t>(d));
    for (int k = 3; k <= d; ++k) EXPECT_EQ(g.degree(L::u(k)), static_cast<std::size_t>(d + (k - 2) * (k - 3) / 2));
    std::size_t total = 0;
    for (std::size_t i = 0; i < g.size(); ++i) total += g.degree(i);
    EXPECT_EQ(total, 2 * edge_count(d));

    std::set<L> nt{L::w(), L::v(1, 2)}, n0{L::w()};
    for (int k = 3; k <= d; ++k) nt.insert(L::u(k));
    for (int j = 1; j < d; ++j) n0.insert(L::v(j, d));
    EXPECT_EQ(neighbour_labels(g, L::theta()), nt);
    EXPECT_EQ(neighbour_labels(g, L::zero()), n0);
  }
}

TEST(GrlexGraph, Eccentricities) {
  EXPECT_EQ(eccentricities(grlex_graph(GrlexInstance({2, 2, 2}))).diameter, 2u);
  for (int d = 4; d <= 8; ++d) {
    const auto e = eccentricities(grlex_graph(GrlexInstance(IntVector(static_cast<std::size_t>(d), 3))));
    EXPECT_EQ(e.radius, 2u);
    EXPECT_EQ(e.diameter, 3u);
  }
}

TEST(GrlexHamiltonian, D3) {
  const GrlexInstance p({2, 2, 2});
  const std::vector<L> expected{L::zero(), L::v(1, 3), L::v(2, 3), L::u(3), L::theta(), L::v(1, 2), L::w()};
  EXPECT_EQ(grlex_hamiltonian_cycle(p), expected);
  EXPECT_TRUE(verify_hamiltonian(grlex_graph(p), expected));
}

TEST(GrlexHamiltonian, AllSizes) {
  EXPECT_EQ(grlex_hamiltonian_cycle(GrlexInstance({2, 2, 2, 2})).size(), 11u);
  for (int d = 3; d <= 8; ++d)
    for (const auto& t : thetas(d, 4, 1, 3, 7)) {
      const GrlexInstance p(t);
      EXPECT_TRUE(verify_hamiltonian(grlex_graph(p), grlex_hamiltonian_cycle(p)));
    }
}

TEST(GrlexColoring, FormulaValuesD3) {
  const Coloring expected{{L::zero(), 1}, {L::theta(), 1}, {L::w(), 2},      {L::u(3), 3},
                          {L::v(1, 2), 2}, {L::v(1, 3), 3}, {L::v(2, 3), 2}};
  EXPECT_EQ(grlex_formula_coloring(GrlexInstance({2, 2, 2})), expected);
}

// The closed-form colouring gives w and v(k-1,k) colour 2, and these are
// adjacent for every k < d, so it is improper at every d.
TEST(GrlexColoring, FormulaConflictsAreFrozen) {
  for (int d = 3; d <= 8; ++d) {
    const GrlexInstance p(IntVector(static_cast<std::size_t>(d), 2));
    const auto g = grlex_graph(p);
    const auto c = grlex_formula_coloring(p);
    std::set<Edge> conflicts;
    for (const auto& [a, b] : g.edges())
      if (c.at(a) == c.at(b)) conflicts.insert(ordered_edge(a, b));
    std::set<Edge> expected;
    for (int k = 2; k <= d - 1; ++k) expected.insert(ordered_edge(L::w(), L::v(k - 1, k)));
    EXPECT_EQ(conflicts, expected) << "d=" << d;
    EXPECT_FALSE(verify_coloring(g, c).proper);
  }
}

TEST(GrlexColoring, ProperWithDColours) {
  for (int d = 3; d <= 8; ++d) {
    const GrlexInstance p(thetas(d, 3, 2, 4, 8).back());
    const auto g = grlex_graph(p);
    const auto check = verify_coloring(g, grlex_coloring(p));
    EXPECT_TRUE(check.proper);
    EXPECT_EQ(check.colors_used, static_cast<std::size_t>(d));
    const auto clique = grlex_clique(p);
    EXPECT_EQ(clique.size(), static_cast<std::size_t>(d));
    EXPECT_TRUE(is_clique(g, clique));
  }
  EXPECT_THROW(grlex_coloring(GrlexInstance({2, 1, 2})), RequiresStrictTheta);
}

TEST(GrlexExpansionWitness, Sizes) {
  const auto w3 = grlex_expansion_witness(GrlexInstance({2, 2, 2}));
  EXPECT_EQ(std::set<L>(w3.set.begin(), w3.set.end()), (std::set<L>{L::v(1, 3), L::v(2, 3), L::zero()}));
  EXPECT_EQ(w3.boundary, 3u);
  for (int d = 4; d <= 8; ++d) {
    const auto w = grlex_expansion_witness(GrlexInstance(IntVector(static_cast<std::size_t>(d), 2)));
    EXPECT_EQ(w.set.size(), static_cast<std::size_t>(d));
    EXPECT_EQ(w.boundary, static_cast<std::size_t>(d));
  }
  EXPECT_THROW(grlex_expansion_witness(GrlexInstance({1, 2, 2})), RequiresStrictTheta);
}

TEST(GrlexAntipodal, OnlyZeroAndTheta) {
  for (int d = 3; d <= 7; ++d)
    for (const auto& t : thetas(d, 4, 1, 3, 9)) {
      const GrlexInstance p(t);
      EXPECT_EQ(list_antipodal_pairs(grlex_incidence(p)), (std::vector<Edge>{{L::zero(), L::theta()}}));
    }
}
