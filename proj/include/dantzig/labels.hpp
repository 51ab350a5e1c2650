#pragma once

// Symbolic names for vertices and facets, independent of coordinates.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>

namespace dantzig {

struct VertexLabel {
  // Point is an anonymous vertex of a generic fixture, numbered by j.
  enum class Kind : std::uint8_t { Zero, Theta, W, U, V, UBar, VBar, Point };

  Kind kind = Kind::Zero;
  int j = 0;
  int k = 0;

  static constexpr VertexLabel zero() { return {Kind::Zero, 0, 0}; }
  static constexpr VertexLabel theta() { return {Kind::Theta, 0, 0}; }
  static constexpr VertexLabel w() { return {Kind::W, 0, 0}; }
  static constexpr VertexLabel u(int k) { return {Kind::U, 0, k}; }
  static constexpr VertexLabel v(int j, int k) { return {Kind::V, j, k}; }
  static constexpr VertexLabel ubar(int k) { return {Kind::UBar, 0, k}; }
  static constexpr VertexLabel vbar(int j, int k) { return {Kind::VBar, j, k}; }
  static constexpr VertexLabel point(int i) { return {Kind::Point, i, 0}; }

  friend constexpr auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

inline std::string to_string(const VertexLabel& l) {
  using K = VertexLabel::Kind;
  const auto s = [](int x) { return std::to_string(x); };
  switch (l.kind) {
    case K::Zero: return "0";
    case K::Theta: return "theta";
    case K::W: return "w";
    case K::U: return "u(" + s(l.k) + ")";
    case K::V: return "v(" + s(l.j) + "," + s(l.k) + ")";
    case K::UBar: return "ubar(" + s(l.k) + ")";
    case K::VBar: return "vbar(" + s(l.j) + "," + s(l.k) + ")";
    case K::Point: return "p" + s(l.j);
  }
  return "?";
}

/// Inverse of to_string; nullopt for text that names no label.
inline std::optional<VertexLabel> parse_label(const std::string& text) {
  if (text == "0") return VertexLabel::zero();
  if (text == "theta") return VertexLabel::theta();
  if (text == "w") return VertexLabel::w();
  static const std::regex one(R"((u|ubar)\((\d+)\))");
  static const std::regex two(R"((v|vbar)\((\d+),(\d+)\))");
  static const std::regex pt(R"(p(\d+))");
  std::smatch m;
  if (std::regex_match(text, m, one)) {
    const int k = std::stoi(m[2]);
    return m[1] == "u" ? VertexLabel::u(k) : VertexLabel::ubar(k);
  }
  if (std::regex_match(text, m, two)) {
    const int j = std::stoi(m[2]);
    const int k = std::stoi(m[3]);
    return m[1] == "v" ? VertexLabel::v(j, k) : VertexLabel::vbar(j, k);
  }
  if (std::regex_match(text, m, pt)) return VertexLabel::point(std::stoi(m[1]));
  return std::nullopt;
}

struct FacetId {
  // Coord(i): x_i >= 0. Grading: sum x <= b. NonTrivial(l): the facet through
  // theta that misses its neighbour l. Row(i): unnamed row of a generic system.
  enum class Kind : std::uint8_t { Coord, Grading, NonTrivial, Row };

  Kind kind = Kind::Row;
  int index = 0;
  VertexLabel missed{};

  static FacetId coord(int i) { return {Kind::Coord, i, {}}; }
  static FacetId grading() { return {Kind::Grading, 0, {}}; }
  static FacetId nontrivial(VertexLabel l) { return {Kind::NonTrivial, 0, l}; }
  static FacetId row(int i) { return {Kind::Row, i, {}}; }

  friend auto operator<=>(const FacetId&, const FacetId&) = default;
};

inline std::string to_string(const FacetId& f) {
  switch (f.kind) {
    case FacetId::Kind::Coord: return "coord(" + std::to_string(f.index) + ")";
    case FacetId::Kind::Grading: return "grading";
    case FacetId::Kind::NonTrivial: return "facet[" + to_string(f.missed) + "]";
    case FacetId::Kind::Row: return "row(" + std::to_string(f.index) + ")";
  }
  return "?";
}

}  // namespace dantzig
