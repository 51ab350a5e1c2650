#pragma once

// Exact rational arithmetic and fraction-free linear algebra.
//
// Every matrix routine here scales rows to integers and runs Bareiss
// elimination over mpz, so intermediate entries are minors of the input and
// never leave the integers. Pivots are the first nonzero entry found scanning
// down the current column.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dantzig {

using Integer = mpz_class;
using Rational = mpq_class;  // gmp keeps mpq values canonical: reduced, denominator > 0
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<std::int64_t>;

class SingularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// num/den in lowest terms.
inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer to_integer(std::int64_t v) {
  // mpz_class has no int64_t constructor on every platform; go through long.
  return Integer(static_cast<long>(v));
}

inline Rational to_rational(std::int64_t v) { return Rational(to_integer(v)); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;

  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("RationalMatrix: ragged initializer");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RationalMatrix from_rows(const std::vector<RationalVector>& rows) {
    if (rows.empty()) return {};
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("RationalMatrix: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Matrix whose columns are the given integer vectors.
  static RationalMatrix from_columns(const std::vector<IntVector>& cols) {
    if (cols.empty()) return {};
    RationalMatrix m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_) throw std::invalid_argument("RationalMatrix: ragged columns");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = to_rational(cols[j][i]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  RationalVector row(std::size_t i) const {
    return RationalVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  RationalVector column(std::size_t j) const {
    RationalVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RationalMatrix: dimension mismatch in product");
    RationalMatrix c(a.rows_, b.cols_);
    Rational acc;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        acc = 0;
        for (std::size_t k = 0; k < a.cols_; ++k) acc += a(i, k) * b(k, j);
        c(i, j) = acc;
      }
    return c;
  }

  friend RationalVector operator*(const RationalMatrix& a, const RationalVector& x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("RationalMatrix: dimension mismatch in product");
    RationalVector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      Rational acc = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) acc += a(i, k) * x[k];
      y[i] = acc;
    }
    return y;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  friend std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

namespace detail {

/// Row-major integer work matrix for Bareiss elimination.
struct IntegerTableau {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> a;

  IntegerTableau(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  Integer& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  void swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < cols; ++j) std::swap(at(i, j), at(k, j));
  }
};

/// Least common multiple of the denominators of row i.
inline Integer row_denominator_lcm(const RationalMatrix& m, std::size_t i) {
  Integer l = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
  return l;
}

/// Fraction-free Gauss-Jordan on the leading n x n block of t (n = t.rows).
/// Afterwards the leading block is p*I and the trailing columns hold
/// p * A^{-1} * B, where p is the last pivot. Returns p, or 0 when the
/// leading block is singular.
inline Integer bareiss_jordan(IntegerTableau& t) {
  const std::size_t n = t.rows;
  Integer prev = 1;
  Integer tmp;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(t.at(p, k)) == 0) ++p;
    if (p == n) return 0;
    if (p != k) t.swap_rows(p, k);
    const Integer pivot = t.at(k, k);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Integer factor = t.at(i, k);
      for (std::size_t j = 0; j < t.cols; ++j) {
        if (j == k) continue;
        tmp = pivot * t.at(i, j) - factor * t.at(k, j);
        mpz_divexact(t.at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      t.at(i, k) = 0;
    }
    prev = pivot;
  }
  return prev;
}

/// Fraction-free forward elimination; returns the rank.
inline std::size_t bareiss_rank(IntegerTableau& t) {
  Integer prev = 1;
  Integer tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < t.cols && r < t.rows; ++c) {
    std::size_t p = r;
    while (p < t.rows && sgn(t.at(p, c)) == 0) ++p;
    if (p == t.rows) continue;
    if (p != r) t.swap_rows(p, r);
    const Integer pivot = t.at(r, c);
    for (std::size_t i = r + 1; i < t.rows; ++i) {
      const Integer factor = t.at(i, c);
      for (std::size_t j = c + 1; j < t.cols; ++j) {
        tmp = pivot * t.at(i, j) - factor * t.at(r, j);
        mpz_divexact(t.at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      t.at(i, c) = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

/// Integer tableau [D*m | D*rhs] with D the per-row denominator lcm.
inline IntegerTableau scaled_augmented(const RationalMatrix& m, const RationalMatrix& rhs) {
  IntegerTableau t(m.rows(), m.cols() + rhs.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = row_denominator_lcm(m, i);
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rhs(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational s = m(i, j) * Rational(l);
      t.at(i, j) = s.get_num();
    }
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      Rational s = rhs(i, j) * Rational(l);
      t.at(i, m.cols() + j) = s.get_num();
    }
  }
  return t;
}

inline RationalMatrix solve_matrix(const RationalMatrix& m, const RationalMatrix& rhs) {
  if (!m.square()) throw std::invalid_argument("solve: matrix is not square");
  if (rhs.rows() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  IntegerTableau t = scaled_augmented(m, rhs);
  const Integer p = bareiss_jordan(t);
  if (sgn(p) == 0) throw SingularError("matrix is singular");
  const std::size_t n = m.rows();
  RationalMatrix x(n, rhs.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      x(i, j) = Rational(t.at(i, n + j), p);
      x(i, j).canonicalize();
    }
  return x;
}

}  // namespace detail

/// Exact inverse. Throws SingularError when rank < n.
inline RationalMatrix invert(const RationalMatrix& m) {
  return detail::solve_matrix(m, RationalMatrix::identity(m.rows()));
}

inline std::size_t rank(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  detail::IntegerTableau t = detail::scaled_augmented(m, RationalMatrix(m.rows(), 0));
  return detail::bareiss_rank(t);
}

/// Rank of the sub-matrix formed by the selected rows.
inline std::size_t rank_of_rows(const RationalMatrix& m, std::span<const std::size_t> rows) {
  RationalMatrix sub(rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) sub(i, j) = m(rows[i], j);
  return rank(sub);
}

/// Unique x with m*x = rhs. Throws SingularError when m is singular.
inline RationalVector solve_unique(const RationalMatrix& m, const RationalVector& rhs) {
  if (rhs.empty()) throw std::invalid_argument("solve_unique: empty right-hand side");
  RationalMatrix b(rhs.size(), 1);
  for (std::size_t i = 0; i < rhs.size(); ++i) b(i, 0) = rhs[i];
  return detail::solve_matrix(m, b).column(0);
}

inline Rational dot(const RationalVector& a, std::span<const std::int64_t> x) {
  if (a.size() != x.size()) throw std::invalid_argument("dot: length mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * to_rational(x[i]);
  return acc;
}

}  // namespace dantzig
