#include <gtest/gtest.h>

#include "dantzig/orders.hpp"

using namespace dantzig;

namespace {

std::vector<IntVector> all_vectors(std::size_t d, int max_entry) {
  std::vector<IntVector> out{IntVector(d, 0)};
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<IntVector> next;
    for (const auto& x : out)
      for (int v = 0; v <= max_entry; ++v) {
        auto y = x;
        y[i] = v;
        next.push_back(y);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST(CompareLex, ScansFromLastCoordinate) {
  EXPECT_EQ(compare_lex({0, 0, 5}, {2, 2, 2}), std::strong_ordering::greater);
  EXPECT_EQ(compare_lex({6, 0, 0}, {2, 2, 2}), std::strong_ordering::less);
  EXPECT_EQ(compare_lex({1, 0}, {0, 1}), std::strong_ordering::less);
  EXPECT_EQ(compare_lex({3, 1, 4}, {3, 1, 4}), std::strong_ordering::equal);
}

TEST(CompareLex, LengthMismatch) { EXPECT_THROW(compare_lex({1, 2}, {1, 2, 3}), LengthMismatch); }

TEST(CompareGraded, Examples) {
  EXPECT_EQ(compare_graded(OrderKind::GrLex, {0, 0, 5}, {2, 2, 2}), std::strong_ordering::less);
  EXPECT_EQ(compare_graded(OrderKind::GrLex, {6, 0, 0}, {2, 2, 2}), std::strong_ordering::less);
  EXPECT_EQ(compare_graded(OrderKind::GrevLex, {6, 0, 0}, {2, 2, 2}), std::strong_ordering::greater);
  EXPECT_THROW(compare_graded(OrderKind::GrevLex, {1}, {1, 1}), LengthMismatch);
}

TEST(CompareGraded, TotalOrdersOnSmallBox) {
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto xs = all_vectors(d, 2);
    for (auto kind : {OrderKind::Lex, OrderKind::GrLex, OrderKind::GrevLex}) {
      const auto cmp = [&](const IntVector& a, const IntVector& b) {
        return kind == OrderKind::Lex ? compare_lex(a, b) : compare_graded(kind, a, b);
      };
      for (const auto& x : xs)
        for (const auto& y : xs) {
          const auto xy = cmp(x, y);
          EXPECT_EQ(xy == std::strong_ordering::equal, x == y);
          EXPECT_EQ(xy, 0 <=> cmp(y, x));
          if (xy != std::strong_ordering::less) continue;
          for (const auto& z : xs)
            if (cmp(y, z) == std::strong_ordering::less) {
              EXPECT_EQ(cmp(x, z), std::strong_ordering::less);
            }
        }
    }
  }
}

TEST(CompareGraded, RefinesDegreeAndMirrorsOnTies) {
  const auto xs = all_vectors(3, 3);
  for (const auto& x : xs)
    for (const auto& y : xs) {
      const auto gl = compare_graded(OrderKind::GrLex, x, y);
      const auto gr = compare_graded(OrderKind::GrevLex, x, y);
      if (degree(x) < degree(y)) {
        EXPECT_EQ(gl, std::strong_ordering::less);
        EXPECT_EQ(gr, std::strong_ordering::less);
      } else if (degree(x) == degree(y)) {
        EXPECT_EQ(gl, 0 <=> gr);
      }
    }
}

TEST(InitialSegment, Membership) {
  const IntVector theta{2, 2, 2};
  EXPECT_TRUE(is_initial_segment_member(OrderKind::GrLex, {0, 0, 0}, theta));
  EXPECT_TRUE(is_initial_segment_member(OrderKind::GrLex, {0, 0, 0}, {1, 1, 1}));
  EXPECT_TRUE(is_initial_segment_member(OrderKind::GrLex, {0, 6, 0}, theta));
  EXPECT_TRUE(is_initial_segment_member(OrderKind::GrLex, {0, 5, 1}, theta));
  // Same degree as theta; the right-to-left scan stops at coordinate 3 with 1 < 2.
  EXPECT_TRUE(is_initial_segment_member(OrderKind::GrLex, {5, 0, 1}, theta));
  EXPECT_FALSE(is_initial_segment_member(OrderKind::GrLex, {0, 0, 6}, theta));
  EXPECT_FALSE(is_initial_segment_member(OrderKind::GrevLex, {5, 0, 1}, theta));
  EXPECT_TRUE(is_initial_segment_member(OrderKind::GrevLex, {0, 0, 6}, theta));
  EXPECT_TRUE(is_initial_segment_member(OrderKind::GrevLex, theta, theta));
  EXPECT_FALSE(is_initial_segment_member(OrderKind::GrLex, {0, 0, 7}, theta));
}
