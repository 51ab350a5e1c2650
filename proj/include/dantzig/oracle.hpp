#pragma once

// Brute-force checks that do not use any closed form: the lattice initial
// segment of a graded order, vertex enumeration of an inequality system by
// solving every square subsystem, and the hull-equivalence report tying the
// two together.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "dantzig/exactmath.hpp"
#include "dantzig/graph.hpp"
#include "dantzig/orders.hpp"
#include "dantzig/polytope.hpp"

namespace dantzig {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class UnboundedSuspected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t default_point_cap = 2'000'000;

struct LatticeSegment {
  OrderKind kind = OrderKind::GrLex;
  IntVector theta;
  std::vector<IntVector> points;  // colex order

  bool contains(const IntVector& x) const {
    return std::binary_search(points.begin(), points.end(), x,
                              [](const IntVector& a, const IntVector& b) { return compare_lex(a, b) < 0; });
  }
};

/// Number of nonnegative integer points with coordinate sum <= b in
/// dimension d, saturating at the uint64 maximum.
inline std::uint64_t simplex_point_count(std::int64_t b, std::size_t d) {
  // C(b+d, d) built incrementally; every partial product is itself binomial.
  unsigned __int128 c = 1;
  for (std::size_t i = 1; i <= d; ++i) {
    c = c * static_cast<unsigned __int128>(static_cast<std::uint64_t>(b) + i) / i;
    if (c > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c);
}

namespace detail {

/// Calls f(x) for every x >= 0 with sum x <= bound, in colex order.
template <class F>
void for_each_simplex_point(std::size_t d, std::int64_t bound, F&& f) {
  IntVector x(d, 0);
  std::int64_t sum = 0;
  while (true) {
    f(x, sum);
    std::size_t i = 0;
    // Odometer: bump x_1; on overflow of the sum, carry to the next coordinate.
    while (i < d) {
      if (sum < bound) {
        ++x[i];
        ++sum;
        break;
      }
      sum -= x[i];
      x[i] = 0;
      ++i;
    }
    if (i == d) return;
  }
}

inline void check_segment_input(OrderKind kind, const IntVector& theta, std::uint64_t point_cap) {
  if (kind == OrderKind::Lex) throw std::invalid_argument("lex initial segments are infinite");
  if (theta.empty()) throw std::invalid_argument("empty theta");
  for (auto t : theta)
    if (t < 1) throw std::invalid_argument("theta entries must be positive");
  const auto count = simplex_point_count(degree(theta), theta.size());
  if (count > point_cap)
    throw BudgetExceeded("segment enumeration would visit " + std::to_string(count) + " points; cap is " +
                         std::to_string(point_cap));
}

}  // namespace detail

/// {x in Z^d : x >= 0, x <= theta} by filtering the simplex sum x <= b with
/// the order itself.
inline LatticeSegment enumerate_segment(OrderKind kind, const IntVector& theta,
                                        std::uint64_t point_cap = default_point_cap) {
  detail::check_segment_input(kind, theta, point_cap);
  LatticeSegment s{kind, theta, {}};
  detail::for_each_simplex_point(theta.size(), degree(theta), [&](const IntVector& x, std::int64_t) {
    if (is_initial_segment_member(kind, x, theta)) s.points.push_back(x);
  });
  return s;
}

/// Same set, built as {sum x <= b-1} plus the degree-b slice on the correct
/// side of theta in lex order.
inline LatticeSegment enumerate_segment_by_slices(OrderKind kind, const IntVector& theta,
                                                  std::uint64_t point_cap = default_point_cap) {
  detail::check_segment_input(kind, theta, point_cap);
  const std::int64_t b = degree(theta);
  LatticeSegment s{kind, theta, {}};
  detail::for_each_simplex_point(theta.size(), b, [&](const IntVector& x, std::int64_t sum) {
    if (sum < b) {
      s.points.push_back(x);
      return;
    }
    const auto c = compare_lex(x, theta);
    if (kind == OrderKind::GrLex ? c <= 0 : c >= 0) s.points.push_back(x);
  });
  return s;
}

/// x >= 0 rows present and the rows with nonnegative normals bound every
/// coordinate from above.
inline bool structurally_bounded(const HRep& h) {
  const std::size_t d = h.dim();
  std::vector<bool> lower(d, false), upper(d, false);
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& a = h.integer_normals()[i];
    std::size_t nonzero = 0, neg = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(a[j]) != 0) ++nonzero;
      if (sgn(a[j]) < 0) ++neg;
    }
    if (nonzero == 1 && neg == 1 && sgn(h.rhs()[i]) == 0)
      for (std::size_t j = 0; j < d; ++j)
        if (sgn(a[j]) < 0) lower[j] = true;
    if (neg == 0)
      for (std::size_t j = 0; j < d; ++j)
        if (sgn(a[j]) > 0) upper[j] = true;
  }
  return std::all_of(lower.begin(), lower.end(), [](bool v) { return v; }) &&
         std::all_of(upper.begin(), upper.end(), [](bool v) { return v; });
}

struct BasisVertexSet {
  std::vector<RationalVector> vertices;           // sorted
  std::vector<std::vector<std::size_t>> tight;    // tight row indices per vertex

  std::set<RationalVector> coordinate_set() const { return {vertices.begin(), vertices.end()}; }
};

inline RationalVector to_rational_vector(const IntVector& x) {
  RationalVector r;
  for (auto v : x) r.push_back(to_rational(v));
  return r;
}

/// All vertices of {x : h} from its square subsystems.
inline BasisVertexSet hull_vertices_by_basis(const HRep& h) {
  if (!structurally_bounded(h)) throw UnboundedSuspected("system is not certified bounded");
  const std::size_t m = h.size();
  const std::size_t d = h.dim();
  if (m < d) return {};

  // Row i scaled to integers: [den_i * a_i | num_i].
  std::vector<std::vector<Integer>> rows(m, std::vector<Integer>(d + 1));
  for (std::size_t i = 0; i < m; ++i) {
    const Integer den = h.rhs()[i].get_den();
    for (std::size_t j = 0; j < d; ++j) rows[i][j] = h.integer_normals()[i][j] * den;
    rows[i][d] = h.rhs()[i].get_num();
  }

  const auto solve_subset = [&](const std::vector<std::size_t>& subset, std::set<RationalVector>& found) {
    detail::IntegerTableau t(d, d + 1);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c <= d; ++c) t.at(r, c) = rows[subset[r]][c];
    const Integer det = detail::bareiss_jordan(t);
    if (sgn(det) == 0) return;
    // x = t(.,d) / det; feasibility a_i x <= beta_i checked over the integers.
    const int s = sgn(det);
    for (std::size_t i = 0; i < m; ++i) {
      Integer lhs = 0;
      for (std::size_t j = 0; j < d; ++j) lhs += rows[i][j] * t.at(j, d);
      Integer rhs = rows[i][d] * det;
      if (s > 0 ? lhs > rhs : lhs < rhs) return;
    }
    RationalVector x(d);
    for (std::size_t j = 0; j < d; ++j) {
      x[j] = Rational(t.at(j, d), det);
      x[j].canonicalize();
    }
    found.insert(std::move(x));
  };

  // Worker w takes every combination whose running index is w mod W.
  const unsigned workers = detail::worker_count();
  std::vector<std::set<RationalVector>> partial(workers);
  const auto run = [&](unsigned w) {
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    std::uint64_t counter = 0;
    while (true) {
      if (counter++ % workers == w) solve_subset(idx, partial[w]);
      std::size_t i = d;
      while (i > 0 && idx[i - 1] == m - d + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::set<RationalVector> all;
  for (auto& p : partial) all.merge(p);

  BasisVertexSet out;
  for (const auto& x : all) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < m; ++i)
      if (h.slack_sign(i, x) == 0) tight.push_back(i);
    out.vertices.push_back(x);
    out.tight.push_back(std::move(tight));
  }
  return out;
}

namespace detail {

/// Fast a.x <= beta checks on machine integers, falling back to GMP when a
/// coefficient does not fit.
class RowEvaluator {
 public:
  explicit RowEvaluator(const HRep& h) : h_(h) {
    fits_ = true;
    for (std::size_t i = 0; i < h.size(); ++i) {
      std::vector<std::int64_t> a;
      for (const auto& c : h.integer_normals()[i]) {
        if (!c.fits_slong_p()) fits_ = false;
        a.push_back(fits_ ? c.get_si() : 0);
      }
      if (!h.rhs()[i].get_num().fits_slong_p() || !h.rhs()[i].get_den().fits_slong_p()) fits_ = false;
      normals_.push_back(std::move(a));
      if (fits_) {
        num_.push_back(h.rhs()[i].get_num().get_si());
        den_.push_back(h.rhs()[i].get_den().get_si());
      }
    }
  }

  /// Index of the first violated row, if any.
  std::optional<std::size_t> first_violation(const IntVector& x) const {
    for (std::size_t i = 0; i < h_.size(); ++i) {
      if (fits_) {
        __int128 s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) s += static_cast<__int128>(normals_[i][j]) * x[j];
        if (s * den_[i] > static_cast<__int128>(num_[i])) return i;
      } else if (h_.slack_sign(i, x) > 0) {
        return i;
      }
    }
    return std::nullopt;
  }

 private:
  const HRep& h_;
  bool fits_ = true;
  std::vector<std::vector<std::int64_t>> normals_;
  std::vector<std::int64_t> num_, den_;
};

inline std::string vec_str(const IntVector& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + ")";
}

inline std::string vec_str(const RationalVector& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + x[i].get_str();
  return s + ")";
}

}  // namespace detail

struct HullCheck {
  bool passed = false;
  std::string detail;  // counterexample when failed
};

struct HullReport {
  HullCheck segment_in_hrep;        // every segment point satisfies the system
  HullCheck basis_matches_vrep;     // basis-enumerated vertices equal the vertex list
  HullCheck vrep_in_segment;        // every listed vertex is a segment point
  HullCheck vertex_certificates;    // every listed vertex has d independent tight rows

  bool all_passed() const {
    return segment_in_hrep.passed && basis_matches_vrep.passed && vrep_in_segment.passed &&
           vertex_certificates.passed;
  }
};

namespace detail {

// Checks (b) and (d): basis-enumerated vertices and tight-row certificates.
inline void check_vertex_list(const HRep& h, const VRep& v, HullReport& r) {
  try {
    const auto basis = hull_vertices_by_basis(h).coordinate_set();
    std::set<RationalVector> listed;
    for (const auto& lv : v.vertices) listed.insert(to_rational_vector(lv.x));
    r.basis_matches_vrep.passed = basis == listed;
    if (!r.basis_matches_vrep.passed) {
      for (const auto& x : basis)
        if (!listed.count(x)) {
          r.basis_matches_vrep.detail = "unlisted vertex " + vec_str(x);
          break;
        }
      if (r.basis_matches_vrep.detail.empty())
        for (const auto& x : listed)
          if (!basis.count(x)) {
            r.basis_matches_vrep.detail = "listed point " + vec_str(x) + " is not a vertex";
            break;
          }
    }
  } catch (const UnboundedSuspected& e) {
    r.basis_matches_vrep.detail = e.what();
  }

  r.vertex_certificates.passed = true;
  try {
    const auto inc = incidence(h, v);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!vertex_certificate(h, inc, i)) {
        r.vertex_certificates.passed = false;
        r.vertex_certificates.detail = to_string(v.vertices[i].label) + " has tight rows of rank < d";
        break;
      }
  } catch (const InfeasibleVertex& e) {
    r.vertex_certificates.passed = false;
    r.vertex_certificates.detail = e.what();
  }
}

}  // namespace detail

inline HullReport verify_hull_equivalence(const LatticeSegment& seg, const HRep& h, const VRep& v) {
  HullReport r;

  const detail::RowEvaluator eval(h);
  r.segment_in_hrep.passed = true;
  for (const auto& x : seg.points)
    if (auto bad = eval.first_violation(x)) {
      r.segment_in_hrep.passed = false;
      r.segment_in_hrep.detail = detail::vec_str(x) + " violates " + to_string(h.ids()[*bad]);
      break;
    }

  r.vrep_in_segment.passed = true;
  for (const auto& lv : v.vertices)
    if (!seg.contains(lv.x)) {
      r.vrep_in_segment.passed = false;
      r.vrep_in_segment.detail = to_string(lv.label) + " " + detail::vec_str(lv.x) + " is not in the segment";
      break;
    }

  detail::check_vertex_list(h, v, r);
  return r;
}

/// The same four checks without storing the segment: lattice points are
/// generated and tested one at a time, and listed vertices are tested for
/// membership with the order directly. For segments too large to hold.
inline HullReport verify_hull_equivalence(OrderKind kind, const IntVector& theta, const HRep& h, const VRep& v,
                                          std::uint64_t point_cap = default_point_cap) {
  detail::check_segment_input(kind, theta, point_cap);
  HullReport r;

  const detail::RowEvaluator eval(h);
  r.segment_in_hrep.passed = true;
  detail::for_each_simplex_point(theta.size(), degree(theta), [&](const IntVector& x, std::int64_t) {
    if (!r.segment_in_hrep.passed || !is_initial_segment_member(kind, x, theta)) return;
    if (auto bad = eval.first_violation(x)) {
      r.segment_in_hrep.passed = false;
      r.segment_in_hrep.detail = detail::vec_str(x) + " violates " + to_string(h.ids()[*bad]);
    }
  });

  r.vrep_in_segment.passed = true;
  for (const auto& lv : v.vertices) {
    const bool nonneg = std::all_of(lv.x.begin(), lv.x.end(), [](auto c) { return c >= 0; });
    if (lv.x.size() != theta.size() || !nonneg || !is_initial_segment_member(kind, lv.x, theta)) {
      r.vrep_in_segment.passed = false;
      r.vrep_in_segment.detail = to_string(lv.label) + " " + detail::vec_str(lv.x) + " is not in the segment";
      break;
    }
  }

  detail::check_vertex_list(h, v, r);
  return r;
}

/// For each row: dropping it lets some vertex of the remaining system
/// violate it, or leaves the system without a boundedness certificate.
inline std::vector<bool> irredundant_rows(const HRep& h) {
  std::vector<bool> out(h.size(), false);
  for (std::size_t i = 0; i < h.size(); ++i) {
    const HRep rest = h.without_row(i);
    try {
      const auto verts = hull_vertices_by_basis(rest);
      for (const auto& x : verts.vertices)
        if (h.slack_sign(i, x) > 0) {
          out[i] = true;
          break;
        }
    } catch (const UnboundedSuspected&) {
      out[i] = true;
    }
  }
  return out;
}

}  // namespace dantzig
