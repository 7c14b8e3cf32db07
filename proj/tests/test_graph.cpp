#include <random>

#include <gtest/gtest.h>

#include "orientcorr/graph.hpp"

using namespace orientcorr;

namespace {

void expect_well_formed(const Graph &g) {
  std::size_t adjacency_pairs = 0;
  for (Vertex u = 0; u < g.n(); ++u) {
    EXPECT_FALSE(g.has_edge(u, u));
    for (Vertex v = 0; v < g.n(); ++v) {
      EXPECT_EQ(g.has_edge(u, v), g.has_edge(v, u));
      adjacency_pairs += g.has_edge(u, v);
    }
  }
  EXPECT_EQ(adjacency_pairs, 2 * g.m());
  for (std::size_t i = 0; i < g.m(); ++i) {
    EXPECT_LT(g.edges()[i].first, g.edges()[i].second);
    EXPECT_TRUE(g.has_edge(g.edges()[i].first, g.edges()[i].second));
    if (i > 0)
      EXPECT_LT(g.edges()[i - 1], g.edges()[i]);
  }
}

Graph random_graph(std::mt19937_64 &rng, Vertex n, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (keep(rng))
        edges.emplace_back(v, u); // reversed on purpose
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph::from_edges(n, edges);
}

} // namespace

TEST(Graph6, DecodesFiveVertexStar) {
  // 'D' -> n = 5; '?' -> 000000; '{' -> 111100. Bits 6..9 of the
  // column-major upper triangle are (0,4), (1,4), (2,4), (3,4).
  const Graph g = parse_graph6("D?{");
  EXPECT_EQ(g.n(), 5u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
}

TEST(Graph6, DecodesTriangle) {
  // 'B' -> n = 3; 'w' = 119 - 63 = 56 = 111000.
  const Graph g = parse_graph6("Bw");
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.m(), 3u);
  EXPECT_EQ(g, complete_graph(3));
}

TEST(Graph6, EncodesKnownRecords) {
  EXPECT_EQ(to_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(to_graph6(Graph::from_edges(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}})),
            "D?{");
}

TEST(Graph6, AcceptsOptionalHeader) {
  EXPECT_EQ(parse_graph6(">>graph6<<Bw"), complete_graph(3));
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("?"), ParseError);   // n = 0
  EXPECT_THROW(parse_graph6("~"), ParseError);   // n >= 63 form
  EXPECT_THROW(parse_graph6("D?"), ParseError);  // truncated
  EXPECT_THROW(parse_graph6("Bww"), ParseError); // trailing byte
  EXPECT_THROW(parse_graph6("Bx"), ParseError);  // nonzero padding

  try {
    parse_graph6("Bww");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.position(), 2u);
  }
  try {
    parse_graph6("D\x01{");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.position(), 1u);
  }
}

TEST(Graph6, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Vertex n = 1 + static_cast<Vertex>(rng() % kMaxVertices);
    const Graph g = random_graph(rng, n, 0.3);
    expect_well_formed(g);
    EXPECT_EQ(parse_graph6(to_graph6(g)), g);
    EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
  }
  for (Vertex n = 1; n <= 12; ++n)
    EXPECT_EQ(parse_graph6(to_graph6(complete_graph(n))), complete_graph(n));
}

TEST(EdgeList, ParsesTriangle) {
  EXPECT_EQ(parse_edge_list("3\n0 1\n1 2\n0 2"), complete_graph(3));
  EXPECT_EQ(parse_edge_list("# comment\n3\n\n2 1\n1 0\n0 2\n"), complete_graph(3));
}

TEST(EdgeList, RejectsBadEdges) {
  EXPECT_THROW(parse_edge_list("2\n0 0"), ParseError);
  EXPECT_THROW(parse_edge_list("4\n0 1\n1 0"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 3"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 -1"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 1 2"), ParseError);
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("63\n"), ParseError);
  try {
    parse_edge_list("4\n0 1\n1 0");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.position(), 3u);
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
  }
}

TEST(Families, EdgeCounts) {
  for (Vertex n = 1; n <= 12; ++n) {
    EXPECT_EQ(complete_graph(n).m(), n * (n - 1) / 2);
    EXPECT_EQ(path_graph(n).m(), n - 1);
    expect_well_formed(complete_graph(n));
  }
  EXPECT_EQ(complete_graph(4).m(), 6u);
  EXPECT_EQ(cycle_graph(5).m(), 5u);
  EXPECT_EQ(path_graph(2).edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_THROW(cycle_graph(2), std::invalid_argument);
  EXPECT_THROW(Graph(0), std::invalid_argument);
  EXPECT_THROW(Graph(63), std::invalid_argument);
}

TEST(Connectivity, Basics) {
  EXPECT_TRUE(is_connected(complete_graph(5)));
  EXPECT_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_EQ(component_count(Graph::from_edges(5, {{0, 1}, {2, 3}})), 3u);
  EXPECT_TRUE(is_forest(path_graph(6)));
  EXPECT_FALSE(is_forest(cycle_graph(6)));
}

TEST(Connectivity, Distances) {
  const auto d = distances_from(cycle_graph(6), 0);
  EXPECT_EQ(d, (std::vector<unsigned>{0, 1, 2, 3, 2, 1}));
  const auto split = distances_from(Graph::from_edges(3, {{0, 1}}), 0);
  EXPECT_EQ(split[2], kUnreachable);
}

TEST(Graph, EdgeIndexFollowsCanonicalOrder) {
  const Graph g = complete_graph(4);
  EXPECT_EQ(g.edge_index(0, 1), 0u);
  EXPECT_EQ(g.edge_index(3, 2), 5u);
  EXPECT_EQ(g.without_edge(0, 1).edge_index(0, 1), 5u);
}
