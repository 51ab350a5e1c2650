#pragma once

// Plain-text exchange formats: cdd-style .ine / .ext and Graphviz DOT.
//
// An .ine row "b -a_1 ... -a_d" encodes b - a.x >= 0, i.e. a.x <= b.
// An .ext row "1 v_1 ... v_d" is a vertex.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dantzig/exactmath.hpp"
#include "dantzig/graph.hpp"
#include "dantzig/polytope.hpp"

namespace dantzig {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string write_ine(const HRep& h, const std::string& title = {}) {
  std::ostringstream os;
  if (!title.empty()) os << "* " << title << '\n';
  os << "H-representation\nbegin\n" << h.size() << ' ' << h.dim() + 1 << " rational\n";
  for (std::size_t i = 0; i < h.size(); ++i) {
    os << h.rhs()[i];
    for (std::size_t j = 0; j < h.dim(); ++j) os << ' ' << Rational(-h.normals()(i, j));
    os << '\n';
  }
  os << "end\n";
  return os.str();
}

inline std::string write_ext(const VRep& v, const std::string& title = {}) {
  std::ostringstream os;
  if (!title.empty()) os << "* " << title << '\n';
  os << "V-representation\nbegin\n" << v.size() << ' ' << v.dim() + 1 << " rational\n";
  for (const auto& lv : v.vertices) {
    os << 1;
    for (auto x : lv.x) os << ' ' << x;
    os << '\n';
  }
  os << "end\n";
  return os.str();
}

namespace detail {

/// Body rows of a cdd file, after the header and before "end".
inline std::vector<RationalVector> read_cdd_rows(const std::string& text, const std::string& header) {
  std::istringstream in(text);
  std::string line;
  bool seen_header = false, in_body = false, have_size = false;
  std::size_t rows = 0, cols = 0;
  std::vector<RationalVector> out;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '*') continue;
    line = line.substr(first);
    if (!in_body) {
      if (line.rfind(header, 0) == 0) seen_header = true;
      else if (line.rfind("begin", 0) == 0) in_body = true;
      continue;
    }
    if (line.rfind("end", 0) == 0) break;
    std::istringstream ls(line);
    if (!have_size) {
      std::string kind;
      if (!(ls >> rows >> cols >> kind)) throw ParseError("bad size line: " + line);
      if (kind != "rational" && kind != "integer") throw ParseError("unsupported number type " + kind);
      have_size = true;
      continue;
    }
    RationalVector r;
    std::string tok;
    while (ls >> tok) {
      Rational q;
      if (q.set_str(tok, 10) != 0) throw ParseError("bad number " + tok);
      q.canonicalize();
      r.push_back(q);
    }
    if (r.size() != cols) throw ParseError("row has " + std::to_string(r.size()) + " entries, expected " + std::to_string(cols));
    out.push_back(std::move(r));
  }
  if (!seen_header) throw ParseError("missing " + header + " header");
  if (!have_size) throw ParseError("missing size line");
  if (out.size() != rows) throw ParseError("expected " + std::to_string(rows) + " rows, read " + std::to_string(out.size()));
  if (cols < 2) throw ParseError("need at least one coordinate column");
  return out;
}

}  // namespace detail

inline HRep parse_ine(const std::string& text) {
  std::vector<RationalVector> normals;
  RationalVector beta;
  for (const auto& r : detail::read_cdd_rows(text, "H-representation")) {
    beta.push_back(r[0]);
    RationalVector a;
    for (std::size_t j = 1; j < r.size(); ++j) a.push_back(-r[j]);
    normals.push_back(std::move(a));
  }
  return HRep(std::move(normals), std::move(beta));
}

/// Vertices of an .ext file; rays (leading 0) are rejected.
inline std::vector<RationalVector> parse_ext(const std::string& text) {
  std::vector<RationalVector> out;
  for (const auto& r : detail::read_cdd_rows(text, "V-representation")) {
    if (r[0] != 1) throw ParseError("only vertex rows (leading 1) are supported");
    out.emplace_back(r.begin() + 1, r.end());
  }
  return out;
}

inline std::string write_dot(const PolytopeGraph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (const auto& l : g.labels()) os << "  \"" << to_string(l) << "\";\n";
  for (const auto& [a, b] : g.edges()) os << "  \"" << to_string(a) << "\" -- \"" << to_string(b) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace dantzig
