#pragma once

// Small hand-built polytopes shared by the unit tests.

#include "dantzig/dantzig.hpp"

namespace fixtures {

using dantzig::FacetId;
using dantzig::HRep;
using dantzig::IntVector;
using dantzig::VertexLabel;
using dantzig::VRep;

inline VRep points(const std::vector<IntVector>& xs) {
  VRep v;
  for (std::size_t i = 0; i < xs.size(); ++i) v.add(VertexLabel::point(static_cast<int>(i)), xs[i]);
  return v;
}

inline HRep box(std::size_t d) {
  std::vector<IntVector> rows;
  IntVector rhs;
  for (std::size_t i = 0; i < d; ++i) {
    IntVector lo(d, 0), hi(d, 0);
    lo[i] = -1;
    hi[i] = 1;
    rows.push_back(lo);
    rhs.push_back(0);
    rows.push_back(hi);
    rhs.push_back(1);
  }
  return HRep::from_integers(rows, rhs);
}

inline VRep box_vertices(std::size_t d) {
  std::vector<IntVector> xs;
  for (std::size_t m = 0; m < (std::size_t{1} << d); ++m) {
    IntVector x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = (m >> i) & 1u;
    xs.push_back(x);
  }
  return points(xs);
}

inline HRep simplex(std::size_t d) {
  std::vector<IntVector> rows;
  IntVector rhs;
  for (std::size_t i = 0; i < d; ++i) {
    IntVector r(d, 0);
    r[i] = -1;
    rows.push_back(r);
    rhs.push_back(0);
  }
  rows.push_back(IntVector(d, 1));
  rhs.push_back(1);
  return HRep::from_integers(rows, rhs);
}

inline VRep simplex_vertices(std::size_t d) {
  std::vector<IntVector> xs{IntVector(d, 0)};
  for (std::size_t i = 0; i < d; ++i) {
    IntVector e(d, 0);
    e[i] = 1;
    xs.push_back(e);
  }
  return points(xs);
}

// Pyramid over the pentagon (1,0,0) (3,0,0) (4,2,0) (2,3,0) (0,2,0) with apex (2,1,2).
// Not a Dantzig figure: it has 6 facets in dimension 3, and no vertex pair
// splits them.
inline HRep pentagonal_pyramid() {
  return HRep::from_integers({{0, 0, -1}, {0, -2, 1}, {4, -2, 3}, {1, 2, 2}, {-1, 2, 2}, {-4, -2, 3}},
                             {0, 0, 12, 8, 4, -4});
}

inline VRep pentagonal_pyramid_vertices() {
  return points({{1, 0, 0}, {3, 0, 0}, {4, 2, 0}, {2, 3, 0}, {0, 2, 0}, {2, 1, 2}});
}

}  // namespace fixtures
