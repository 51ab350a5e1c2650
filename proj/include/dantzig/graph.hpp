#pragma once

// Labelled undirected graphs and the analytics run on polytope graphs:
// eccentricities, Hamiltonian cycles, colourings, cliques and exact edge
// expansion.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "dantzig/exactmath.hpp"
#include "dantzig/polytope.hpp"

namespace dantzig {

class Disconnected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class LabelMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Coloring = std::map<VertexLabel, int>;

class PolytopeGraph {
 public:
  PolytopeGraph() = default;

  PolytopeGraph(std::vector<VertexLabel> labels, const std::vector<Edge>& edges)
      : labels_(std::move(labels)), adj_(labels_.size(), Bitset(labels_.size())) {
    for (std::size_t i = 0; i < labels_.size(); ++i) index_[labels_[i]] = i;
    if (index_.size() != labels_.size()) throw std::invalid_argument("PolytopeGraph: duplicate label");
    for (const auto& [a, b] : edges) {
      const auto i = index_of(a);
      const auto j = index_of(b);
      if (i == j) throw std::invalid_argument("PolytopeGraph: self-loop at " + to_string(a));
      adj_[i].set(j);
      adj_[j].set(i);
    }
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<VertexLabel>& labels() const { return labels_; }
  const VertexLabel& label(std::size_t i) const { return labels_[i]; }
  const Bitset& neighbours(std::size_t i) const { return adj_[i]; }

  std::size_t index_of(const VertexLabel& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) throw UnknownLabel("graph has no vertex " + to_string(l));
    return it->second;
  }
  bool contains(const VertexLabel& l) const { return index_.count(l) != 0; }

  bool has_edge(std::size_t i, std::size_t j) const { return adj_[i].test(j); }
  bool has_edge(const VertexLabel& a, const VertexLabel& b) const { return has_edge(index_of(a), index_of(b)); }
  std::size_t degree(std::size_t i) const { return adj_[i].count(); }
  std::size_t degree(const VertexLabel& l) const { return degree(index_of(l)); }

  std::size_t edge_count() const {
    std::size_t s = 0;
    for (const auto& a : adj_) s += a.count();
    return s / 2;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (auto j = adj_[i].find_next(i); j != Bitset::npos; j = adj_[i].find_next(j))
        out.push_back(ordered_edge(labels_[i], labels_[j]));
    return canonical_edges(std::move(out));
  }

 private:
  std::vector<VertexLabel> labels_;
  std::vector<Bitset> adj_;
  std::map<VertexLabel, std::size_t> index_;
};

struct Eccentricities {
  std::size_t radius = 0;
  std::size_t diameter = 0;
};

inline std::vector<std::size_t> bfs_distances(const PolytopeGraph& g, std::size_t src) {
  constexpr auto unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(g.size(), unseen);
  std::deque<std::size_t> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    const auto u = q.front();
    q.pop_front();
    const auto& nb = g.neighbours(u);
    for (auto v = nb.find_first(); v != Bitset::npos; v = nb.find_next(v))
      if (dist[v] == unseen) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
  }
  return dist;
}

inline Eccentricities eccentricities(const PolytopeGraph& g) {
  if (g.size() == 0) throw Disconnected("empty graph");
  Eccentricities e{static_cast<std::size_t>(-1), 0};
  for (std::size_t s = 0; s < g.size(); ++s) {
    const auto dist = bfs_distances(g, s);
    const auto ecc = *std::max_element(dist.begin(), dist.end());
    if (ecc == static_cast<std::size_t>(-1)) throw Disconnected("vertex " + to_string(g.label(s)) + " cannot reach every vertex");
    e.radius = std::min(e.radius, ecc);
    e.diameter = std::max(e.diameter, ecc);
  }
  return e;
}

inline bool verify_hamiltonian(const PolytopeGraph& g, const std::vector<VertexLabel>& cycle) {
  if (cycle.size() != g.size() || cycle.size() < 3) return false;
  std::vector<std::size_t> idx;
  Bitset seen(g.size());
  for (const auto& l : cycle) {
    if (!g.contains(l)) return false;
    const auto i = g.index_of(l);
    if (seen.test(i)) return false;
    seen.set(i);
    idx.push_back(i);
  }
  for (std::size_t t = 0; t < idx.size(); ++t)
    if (!g.has_edge(idx[t], idx[(t + 1) % idx.size()])) return false;
  return true;
}

/// Backtracking search for a Hamiltonian cycle through vertex 0.
inline std::optional<std::vector<VertexLabel>> find_hamiltonian_cycle(const PolytopeGraph& g) {
  const std::size_t n = g.size();
  if (n < 3) return std::nullopt;
  std::vector<std::size_t> path{0};
  Bitset used(n);
  used.set(0);
  // Depth-first search with explicit per-level candidate cursors.
  std::vector<std::size_t> cursor{0};
  while (!path.empty()) {
    const auto u = path.back();
    if (path.size() == n) {
      if (g.has_edge(u, 0)) {
        std::vector<VertexLabel> out;
        for (auto i : path) out.push_back(g.label(i));
        return out;
      }
    }
    auto& c = cursor.back();
    std::size_t next = Bitset::npos;
    if (path.size() < n) {
      const auto& nb = g.neighbours(u);
      for (auto v = c == 0 ? nb.find_first() : nb.find_next(c - 1); v != Bitset::npos; v = nb.find_next(v))
        if (!used.test(v)) {
          next = v;
          break;
        }
    }
    if (next == Bitset::npos) {
      used.reset(u);
      path.pop_back();
      cursor.pop_back();
      if (path.empty()) break;
      continue;
    }
    c = next + 1;
    used.set(next);
    path.push_back(next);
    cursor.push_back(0);
  }
  return std::nullopt;
}

struct ColoringCheck {
  bool proper = false;
  std::size_t colors_used = 0;
};

inline ColoringCheck verify_coloring(const PolytopeGraph& g, const Coloring& c) {
  ColoringCheck r{true, 0};
  std::set<int> used;
  for (const auto& l : g.labels()) {
    auto it = c.find(l);
    if (it == c.end()) throw UnknownLabel("colouring misses " + to_string(l));
    used.insert(it->second);
  }
  r.colors_used = used.size();
  for (const auto& [a, b] : g.edges())
    if (c.at(a) == c.at(b)) r.proper = false;
  return r;
}

/// A proper colouring with colours 1..k, or nullopt when none exists.
/// Each vertex tries its preferred colour first, when one is given.
inline std::optional<Coloring> find_coloring(const PolytopeGraph& g, int k, const Coloring& preferred = {}) {
  const std::size_t n = g.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return g.degree(a) > g.degree(b); });
  std::vector<std::vector<int>> choices(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = preferred.find(g.label(i));
    const int first = (it != preferred.end() && it->second >= 1 && it->second <= k) ? it->second : 0;
    if (first) choices[i].push_back(first);
    for (int c = 1; c <= k; ++c)
      if (c != first) choices[i].push_back(c);
  }
  std::vector<int> col(n, 0);
  std::vector<std::size_t> pos(n, 0);  // next choice to try
  std::size_t t = 0;
  while (t < n) {
    const auto v = order[t];
    bool placed = false;
    while (pos[v] < choices[v].size()) {
      const int c = choices[v][pos[v]++];
      bool ok = true;
      const auto& nb = g.neighbours(v);
      for (auto u = nb.find_first(); u != Bitset::npos; u = nb.find_next(u))
        if (col[u] == c) {
          ok = false;
          break;
        }
      if (ok) {
        col[v] = c;
        placed = true;
        break;
      }
    }
    if (placed) {
      ++t;
      continue;
    }
    col[v] = 0;
    pos[v] = 0;
    if (t == 0) return std::nullopt;
    --t;
    col[order[t]] = 0;
  }
  Coloring out;
  for (std::size_t i = 0; i < n; ++i) out[g.label(i)] = col[i];
  return out;
}

inline bool is_clique(const PolytopeGraph& g, const std::vector<VertexLabel>& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (!g.has_edge(s[a], s[b])) return false;
  return true;
}

/// Largest clique by Bron-Kerbosch with pivoting.
inline std::vector<VertexLabel> max_clique(const PolytopeGraph& g) {
  Bitset best(g.size());
  const auto rec = [&](auto&& self, Bitset r, Bitset p, Bitset x) -> void {
    if (p.none() && x.none()) {
      if (r.count() > best.count()) best = r;
      return;
    }
    if (r.count() + p.count() <= best.count()) return;
    const Bitset px = p | x;
    const auto pivot = px.find_first();
    Bitset cand = p - g.neighbours(pivot);
    for (auto v = cand.find_first(); v != Bitset::npos; v = cand.find_next(v)) {
      Bitset rv = r;
      rv.set(v);
      self(self, rv, p & g.neighbours(v), x & g.neighbours(v));
      p.reset(v);
      x.set(v);
    }
  };
  Bitset all(g.size());
  all.set();
  rec(rec, Bitset(g.size()), all, Bitset(g.size()));
  std::vector<VertexLabel> out;
  for (auto v = best.find_first(); v != Bitset::npos; v = best.find_next(v)) out.push_back(g.label(v));
  return out;
}

/// Smallest k admitting a proper k-colouring.
inline int chromatic_number(const PolytopeGraph& g) {
  int k = std::max<int>(1, static_cast<int>(max_clique(g).size()));
  while (!find_coloring(g, k)) ++k;
  return k;
}

inline std::size_t boundary_size(const PolytopeGraph& g, const std::vector<VertexLabel>& s) {
  Bitset in(g.size());
  for (const auto& l : s) in.set(g.index_of(l));
  std::size_t count = 0;
  for (auto v = in.find_first(); v != Bitset::npos; v = in.find_next(v)) count += (g.neighbours(v) - in).count();
  return count;
}

inline std::vector<std::size_t> degree_multiset(const PolytopeGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.size(); ++i) out.push_back(g.degree(i));
  std::sort(out.rbegin(), out.rend());
  return out;
}

struct ExpansionResult {
  Rational value;
  std::vector<VertexLabel> witness;  // sorted by label
  std::size_t boundary = 0;
};

namespace detail {

struct ExpansionCandidate {
  std::uint64_t mask = 0;  // bits in label-rank order
  std::size_t size = 0;
  std::size_t boundary = 0;
  bool valid = false;
};

// Strictly better: smaller ratio, then smaller set, then lexicographically
// smaller sorted label list.
inline bool better(const ExpansionCandidate& a, const ExpansionCandidate& b) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  const auto lhs = static_cast<unsigned __int128>(a.boundary) * b.size;
  const auto rhs = static_cast<unsigned __int128>(b.boundary) * a.size;
  if (lhs != rhs) return lhs < rhs;
  if (a.size != b.size) return a.size < b.size;
  const std::uint64_t diff = a.mask ^ b.mask;
  if (diff == 0) return false;
  return (a.mask >> std::countr_zero(diff)) & 1u;
}

inline unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DANTZIG_SEED_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  return hw;
}

}  // namespace detail

/// Exact edge expansion by enumerating every subset of at most n/2 vertices.
inline ExpansionResult edge_expansion_exact(const PolytopeGraph& g, std::size_t max_vertices = 24) {
  const std::size_t n = g.size();
  if (n > max_vertices)
    throw TooLarge("graph has " + std::to_string(n) + " vertices; limit is " + std::to_string(max_vertices));
  if (n > 63) throw TooLarge("exhaustive expansion supports at most 63 vertices");
  if (n < 2) throw std::invalid_argument("edge expansion needs at least two vertices");

  // rank[i]: position of vertex i in label order, used for tie-breaking.
  std::vector<std::size_t> by_label(n);
  for (std::size_t i = 0; i < n; ++i) by_label[i] = i;
  std::sort(by_label.begin(), by_label.end(), [&](auto a, auto b) { return g.label(a) < g.label(b); });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[by_label[r]] = r;

  std::vector<std::uint64_t> nb(n, 0), rank_bit(n);
  for (std::size_t i = 0; i < n; ++i) {
    rank_bit[i] = std::uint64_t{1} << rank[i];
    const auto& a = g.neighbours(i);
    for (auto j = a.find_first(); j != Bitset::npos; j = a.find_next(j)) nb[i] |= std::uint64_t{1} << j;
  }
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  const std::size_t half = n / 2;
  const std::size_t free_bits = n - 1;  // subsets of the first n-1 vertices
  const std::uint64_t total = std::uint64_t{1} << free_bits;

  const auto to_rank_mask = [&](std::uint64_t m) {
    std::uint64_t r = 0;
    while (m) {
      const int i = std::countr_zero(m);
      r |= rank_bit[static_cast<std::size_t>(i)];
      m &= m - 1;
    }
    return r;
  };

  const auto run = [&](std::uint64_t lo, std::uint64_t hi) {
    detail::ExpansionCandidate best;
    std::uint64_t set = lo ^ (lo >> 1);
    std::size_t bnd = 0;
    for (std::uint64_t m = set; m;) {
      const int v = std::countr_zero(m);
      bnd += static_cast<std::size_t>(std::popcount(nb[static_cast<std::size_t>(v)] & ~set));
      m &= m - 1;
    }
    const auto consider = [&](std::uint64_t s, std::size_t size) {
      if (size == 0 || size > half) return;
      detail::ExpansionCandidate c;
      c.size = size;
      c.boundary = bnd;
      c.valid = true;
      // Cheap ratio pre-check before building the rank mask.
      if (best.valid) {
        const auto lhs = static_cast<unsigned __int128>(c.boundary) * best.size;
        const auto rhs = static_cast<unsigned __int128>(best.boundary) * c.size;
        if (lhs > rhs || (lhs == rhs && c.size > best.size)) return;
      }
      c.mask = to_rank_mask(s);
      if (detail::better(c, best)) best = c;
    };
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (i != lo) {
        // Gray code step i-1 -> i flips bit countr_zero(i).
        const int v = std::countr_zero(i);
        const std::uint64_t bit = std::uint64_t{1} << v;
        const auto inside = static_cast<std::size_t>(std::popcount(nb[static_cast<std::size_t>(v)] & set));
        const auto deg = static_cast<std::size_t>(std::popcount(nb[static_cast<std::size_t>(v)]));
        if (set & bit) {
          set &= ~bit;
          bnd = bnd + 2 * inside - deg;
        } else {
          bnd = bnd + deg - 2 * inside;
          set |= bit;
        }
      }
      const auto size = static_cast<std::size_t>(std::popcount(set));
      consider(set, size);
      consider(full & ~set, n - size);
    }
    return best;
  };

  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(detail::worker_count(), total));
  std::vector<detail::ExpansionCandidate> results(workers);
  if (workers <= 1) {
    results[0] = run(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = total / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = (w + 1 == workers) ? total : lo + chunk;
      pool.emplace_back([&, w, lo, hi] { results[w] = run(lo, hi); });
    }
    for (auto& t : pool) t.join();
  }
  detail::ExpansionCandidate best;
  for (const auto& r : results)
    if (detail::better(r, best)) best = r;

  ExpansionResult out;
  out.boundary = best.boundary;
  out.value = Rational(static_cast<unsigned long>(best.boundary), static_cast<unsigned long>(best.size));
  out.value.canonicalize();
  for (std::size_t r = 0; r < n; ++r)
    if ((best.mask >> r) & 1u) out.witness.push_back(g.label(by_label[r]));
  return out;
}

/// Identity of two incidence matrices after aligning rows and columns by label.
inline bool combinatorially_equal(const IncidenceMatrix& a, const IncidenceMatrix& b) {
  const std::set<VertexLabel> va(a.vertices().begin(), a.vertices().end());
  const std::set<VertexLabel> vb(b.vertices().begin(), b.vertices().end());
  const std::set<FacetId> fa(a.facets().begin(), a.facets().end());
  const std::set<FacetId> fb(b.facets().begin(), b.facets().end());
  if (va != vb) throw LabelMismatch("vertex label sets differ");
  if (fa != fb) throw LabelMismatch("facet label sets differ");
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    const auto bv = b.vertex_index(a.vertices()[v]);
    for (std::size_t f = 0; f < a.facet_count(); ++f)
      if (a.test(v, f) != b.test(bv, b.facet_index(a.facets()[f]))) return false;
  }
  return true;
}

}  // namespace dantzig
