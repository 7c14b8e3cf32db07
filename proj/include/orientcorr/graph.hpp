#pragma once

// Labeled simple undirected graphs on at most 62 vertices.
//
// Edges are kept in canonical order: pairs (u, v) with u < v sorted
// lexicographically. Edge index i means edges()[i] everywhere in the library;
// orientation bit i refers to that edge.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orientcorr/errors.hpp"

namespace orientcorr {

using Vertex = unsigned;
using VertexSet = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Vertex kMaxVertices = 62;

inline constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }

class Graph {
public:
  Graph() : Graph(1) {}

  /// Edgeless graph on n vertices.
  explicit Graph(Vertex n) : n_(n), adjacency_(n, 0) {
    if (n < 1 || n > kMaxVertices)
      throw std::invalid_argument("vertex count must be in 1..62, got " +
                                  std::to_string(n));
  }

  /// Builds a graph from an arbitrary edge list. Self-loops, duplicates (in
  /// either order) and out-of-range endpoints are rejected.
  static Graph from_edges(Vertex n, const std::vector<Edge> &edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u >= n || v >= n)
        throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                    std::to_string(v) +
                                    ") has an endpoint out of range");
      if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      if (g.adjacency_[u] & bit(v))
        throw std::invalid_argument("duplicate edge {" + std::to_string(u) +
                                    "," + std::to_string(v) + "}");
      g.adjacency_[u] |= bit(v);
      g.adjacency_[v] |= bit(u);
    }
    g.rebuild_edges();
    return g;
  }

  Vertex n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }
  const std::vector<Edge> &edges() const noexcept { return edges_; }
  VertexSet neighbors(Vertex v) const { return adjacency_[v]; }
  VertexSet all_vertices() const noexcept { return bit(n_) - 1; }

  bool has_edge(Vertex u, Vertex v) const {
    return u < n_ && v < n_ && (adjacency_[u] & bit(v)) != 0;
  }

  std::size_t degree(Vertex v) const {
    return static_cast<std::size_t>(std::popcount(adjacency_[v]));
  }

  /// Index of edge {u,v} in canonical order, or m() if absent.
  std::size_t edge_index(Vertex u, Vertex v) const {
    if (u > v)
      std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v})
      return m();
    return static_cast<std::size_t>(it - edges_.begin());
  }

  /// Copy without edge {u,v}.
  Graph without_edge(Vertex u, Vertex v) const {
    Graph g = *this;
    g.adjacency_[u] &= ~bit(v);
    g.adjacency_[v] &= ~bit(u);
    g.rebuild_edges();
    return g;
  }

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  void rebuild_edges() {
    edges_.clear();
    for (Vertex u = 0; u < n_; ++u)
      for (VertexSet rest = adjacency_[u] & ~(bit(u + 1) - 1); rest;
           rest &= rest - 1)
        edges_.emplace_back(u, static_cast<Vertex>(std::countr_zero(rest)));
  }

  Vertex n_;
  std::vector<VertexSet> adjacency_;
  std::vector<Edge> edges_;
};

/// Three distinct vertices; the events studied are {a->s} and {s->b}.
struct Triple {
  Vertex a = 0;
  Vertex s = 0;
  Vertex b = 0;

  friend bool operator==(const Triple &, const Triple &) = default;
};

inline void validate_triple(const Graph &g, const Triple &t) {
  if (t.a >= g.n() || t.s >= g.n() || t.b >= g.n())
    throw std::invalid_argument("triple vertex out of range for n=" +
                                std::to_string(g.n()));
  if (t.a == t.s || t.s == t.b || t.a == t.b)
    throw std::invalid_argument("triple vertices a, s, b must be distinct");
}

// ---------------------------------------------------------------------------
// Constructors for standard families

inline Graph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

/// Cycle 0-1-...-(n-1)-0.
inline Graph cycle_graph(Vertex n) {
  if (n < 3)
    throw std::invalid_argument("cycle_graph needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

/// Path 0-1-...-(n-1).
inline Graph path_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v)
    edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

// ---------------------------------------------------------------------------
// Undirected structure

/// Vertices reachable from v ignoring edge directions.
inline VertexSet component_of(const Graph &g, Vertex v) {
  VertexSet seen = bit(v), frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1)
      next |= g.neighbors(static_cast<Vertex>(std::countr_zero(f)));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

inline std::size_t component_count(const Graph &g) {
  std::size_t count = 0;
  for (VertexSet left = g.all_vertices(); left; ++count)
    left &= ~component_of(g, static_cast<Vertex>(std::countr_zero(left)));
  return count;
}

inline bool is_connected(const Graph &g) {
  return component_of(g, 0) == g.all_vertices();
}

inline bool is_forest(const Graph &g) {
  return g.m() + component_count(g) == g.n();
}

inline constexpr unsigned kUnreachable = std::numeric_limits<unsigned>::max();

/// Breadth-first edge distances from `from`; kUnreachable across components.
inline std::vector<unsigned> distances_from(const Graph &g, Vertex from) {
  std::vector<unsigned> dist(g.n(), kUnreachable);
  dist[from] = 0;
  VertexSet seen = bit(from), frontier = seen;
  for (unsigned d = 1; frontier; ++d) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1)
      next |= g.neighbors(static_cast<Vertex>(std::countr_zero(f)));
    frontier = next & ~seen;
    seen |= frontier;
    for (VertexSet f = frontier; f; f &= f - 1)
      dist[std::countr_zero(f)] = d;
  }
  return dist;
}

// ---------------------------------------------------------------------------
// graph6
//
// Header byte 63+n (n <= 62), then the upper triangle in column-major order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed big-endian into 6-bit groups,
// each written as 63+value. The final group is zero padded.

inline std::string to_graph6(const Graph &g) {
  const Vertex n = g.n();
  std::string out(1, static_cast<char>(63 + n));
  unsigned group = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = filled = 0;
      }
    }
  }
  if (filled)
    out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t offset = 0;
  if (text.substr(0, kHeader.size()) == kHeader)
    offset = kHeader.size();
  if (offset >= text.size())
    throw ParseError("graph6: empty record", offset);

  const auto header = static_cast<unsigned char>(text[offset]);
  if (header < 63 || header > 126)
    throw ParseError("graph6: invalid size byte at offset " +
                         std::to_string(offset),
                     offset);
  const unsigned n = header - 63u;
  if (n < 1 || n > kMaxVertices)
    throw ParseError("graph6: vertex count " + std::to_string(n) +
                         " outside 1..62 at offset " + std::to_string(offset),
                     offset);
  ++offset;

  const std::size_t bits = std::size_t{n} * (n - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() - offset < groups)
    throw ParseError("graph6: record truncated at offset " +
                         std::to_string(text.size()),
                     text.size());
  if (text.size() - offset > groups)
    throw ParseError("graph6: trailing bytes at offset " +
                         std::to_string(offset + groups),
                     offset + groups);

  std::vector<Edge> edges;
  std::size_t k = 0;
  Vertex i = 0, j = 1;
  for (std::size_t gi = 0; gi < groups; ++gi) {
    const std::size_t at = offset + gi;
    const auto c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126)
      throw ParseError("graph6: byte out of range at offset " +
                           std::to_string(at),
                       at);
    const unsigned value = c - 63u;
    for (int b = 5; b >= 0; --b, ++k) {
      const bool set = (value >> b) & 1u;
      if (k >= bits) {
        if (set)
          throw ParseError("graph6: nonzero padding bit at offset " +
                               std::to_string(at),
                           at);
        continue;
      }
      if (set)
        edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_edges(n, edges);
}

// ---------------------------------------------------------------------------
// Plain edge list: first line "n", then one "u v" pair per line. Blank lines
// and lines starting with '#' are ignored.

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  std::vector<Edge> edges;

  auto fail = [&](const std::string &msg) -> ParseError {
    return ParseError("edge list line " + std::to_string(line_no) + ": " + msg,
                      line_no);
  };

  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::istringstream fields(line);
    if (n < 0) {
      std::string extra;
      if (!(fields >> n) || (fields >> extra))
        throw fail("expected a single vertex count");
      if (n < 1 || n > kMaxVertices)
        throw fail("vertex count must be in 1..62");
      continue;
    }
    long long u = 0, v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra))
      throw fail("expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw fail("vertex out of range");
    if (u == v)
      throw fail("self-loop at vertex " + std::to_string(u));
    Edge e{static_cast<Vertex>(std::min(u, v)),
           static_cast<Vertex>(std::max(u, v))};
    if (std::find(edges.begin(), edges.end(), e) != edges.end())
      throw fail("duplicate edge {" + std::to_string(e.first) + "," +
                 std::to_string(e.second) + "}");
    edges.push_back(e);
  }
  if (n < 0)
    throw ParseError("edge list: missing vertex count", line_no);
  return Graph::from_edges(static_cast<Vertex>(n), edges);
}

inline std::string to_edge_list(const Graph &g) {
  std::string out = std::to_string(g.n()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

} // namespace orientcorr
