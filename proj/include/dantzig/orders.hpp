#pragma once

// Lex, graded lex and graded reverse lex comparison of nonnegative integer
// vectors. Coordinates are compared right to left: index d decides first.

#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dantzig/exactmath.hpp"

namespace dantzig {

enum class OrderKind { Lex, GrLex, GrevLex };

class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string to_string(OrderKind k) {
  switch (k) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrLex: return "grlex";
    case OrderKind::GrevLex: return "grevlex";
  }
  return "?";
}

inline void require_same_length(const IntVector& x, const IntVector& y) {
  if (x.size() != y.size())
    throw LengthMismatch("vectors of length " + std::to_string(x.size()) + " and " +
                         std::to_string(y.size()));
}

inline std::int64_t degree(const IntVector& x) { return std::accumulate(x.begin(), x.end(), std::int64_t{0}); }

inline std::strong_ordering compare_lex(const IntVector& x, const IntVector& y) {
  require_same_length(x, y);
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] != y[i]) return x[i] <=> y[i];
  }
  return std::strong_ordering::equal;
}

inline std::strong_ordering compare_graded(OrderKind kind, const IntVector& x, const IntVector& y) {
  require_same_length(x, y);
  switch (kind) {
    case OrderKind::Lex: return compare_lex(x, y);
    case OrderKind::GrLex:
    case OrderKind::GrevLex: break;
  }
  const auto dx = degree(x);
  const auto dy = degree(y);
  if (dx != dy) return dx <=> dy;
  const auto tie = compare_lex(x, y);
  return kind == OrderKind::GrLex ? tie : 0 <=> tie;
}

/// x lies in the initial segment {y >= 0 : y <= theta} of the order.
inline bool is_initial_segment_member(OrderKind kind, const IntVector& x, const IntVector& theta) {
  return compare_graded(kind, x, theta) <= 0;
}

}  // namespace dantzig
