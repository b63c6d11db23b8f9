#include <gtest/gtest.h>

#include <random>
#include <string>

#include "oracles.hpp"
#include "ugeo/generators.hpp"
#include "ugeo/graph.hpp"
#include "ugeo/graph_io.hpp"

namespace ugeo {
namespace {

TEST(Graph, NeighborsAlive) {
  Graph g = oracle::path(3);
  VertexMask m(3);
  EXPECT_EQ(neighbors_alive(g, 1, m), (std::vector<Vertex>{0, 2}));
  m.remove(0);
  EXPECT_EQ(neighbors_alive(g, 1, m), (std::vector<Vertex>{2}));
  Graph iso = Graph::from_edges(1, {});
  EXPECT_TRUE(neighbors_alive(iso, 0, VertexMask(1)).empty());
}

TEST(Graph, RejectsBadEdges) {
  std::vector<Edge> loop{{0, 0}};
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  std::vector<Edge> range{{0, 2}};
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const InvalidGraph& e) {
      return e.kind();
    }
    return std::string("none");
  };
  EXPECT_EQ(kind([&] { Graph::from_edges(2, loop); }), "self_loop");
  EXPECT_EQ(kind([&] { Graph::from_edges(2, dup); }), "duplicate_edge");
  EXPECT_EQ(kind([&] { Graph::from_edges(2, range); }), "out_of_range");
}

TEST(Graph, InvariantsOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_graph(1 + i % 40, 0.2, rng);
    EXPECT_TRUE(g.check_invariants());
  }
}

TEST(Graph, Bipartition) {
  EXPECT_TRUE(bipartition(oracle::cycle(6)).has_value());
  EXPECT_FALSE(bipartition(oracle::cycle(5)).has_value());
  EXPECT_FALSE(bipartition(oracle::complete(4)).has_value());
}

TEST(GraphIo, ParsesExamples) {
  auto p = parse_position(R"({"vertices":2,"edges":[[0,1]],"token":0})");
  EXPECT_EQ(p.graph.vertex_count(), 2u);
  EXPECT_EQ(p.graph.edge_count(), 1u);
  EXPECT_EQ(p.token, 0u);
  auto d = parse_directed_position(R"({"vertices":3,"arcs":[[0,1],[1,2]],"token":0})");
  EXPECT_EQ(d.graph.arc_count(), 2u);
  EXPECT_EQ(d.graph.out_neighbors(1).size(), 1u);
}

std::string error_kind(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  return "none";
}

TEST(GraphIo, DistinctDiagnostics) {
  EXPECT_EQ(error_kind(R"({"vertices":2,"edges":[[0,0]],"token":0})"), "self_loop");
  EXPECT_EQ(error_kind(R"({"vertices":2,"edges":[[0,1],[1,0]],"token":0})"), "duplicate_edge");
  EXPECT_EQ(error_kind(R"({"vertices":2,"edges":[[0,5]],"token":0})"), "out_of_range");
  EXPECT_EQ(error_kind(R"({"vertices":2,"edges":[[0,1]],"token":7})"), "out_of_range");
  EXPECT_EQ(error_kind(R"({"vertices":2,"edges":[[0,1]],)"), "malformed_syntax");
  EXPECT_EQ(error_kind(R"({"vertices":2,"edges":[],"arcs":[],"token":0})"), "wrong_kind");
  EXPECT_EQ(error_kind("ug 3 0\n0 1\n1 1\n"), "self_loop");
  EXPECT_EQ(error_kind("ug 3 0\n0 x\n"), "malformed_syntax");
  EXPECT_EQ(error_kind("gg 3 0\n0 1\n0 1\n"), "duplicate_edge");
}

TEST(GraphIo, DiagnosticsCarryLocation) {
  const std::string text = "{\"vertices\":3,\n\"edges\":[[0,1],\n[2,2]],\"token\":0}";
  try {
    parse_graph(text);
    FAIL() << "expected a self-loop error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), "self_loop");
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 1);
    EXPECT_EQ(e.offset(), static_cast<long>(text.find("[2,2]")));
  }
  try {
    parse_graph("ug 3 0\n0 1\n1 4\n");
    FAIL() << "expected a range error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), "out_of_range");
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(GraphIo, WrongKindRejected) {
  EXPECT_THROW(parse_position(R"({"vertices":2,"arcs":[[0,1]],"token":0})"), ParseError);
  EXPECT_THROW(parse_directed_position(R"({"vertices":2,"edges":[[0,1]],"token":0})"), ParseError);
}

TEST(GraphIo, CanonicalSerialization) {
  const std::string canon = R"({"vertices":2,"edges":[[0,1]],"token":0})";
  EXPECT_EQ(serialize_graph(parse_position(canon)), canon);
  // Permuted and reversed edges canonicalize to the sorted u<v list.
  auto p = parse_position(R"({"token":1,"edges":[[3,2],[1,0],[2,0]],"vertices":4})");
  EXPECT_EQ(serialize_graph(p), R"({"vertices":4,"edges":[[0,1],[0,2],[2,3]],"token":1})");
  auto d = parse_directed_position("gg 3 2\n2 0\n0 1\n1 0\n");
  EXPECT_EQ(serialize_graph(d), R"({"vertices":3,"arcs":[[0,1],[1,0],[2,0]],"token":2})");
}

// Round trip over random graphs n <= 32, checked against an independently
// sorted edge list.
TEST(GraphIo, RoundTripProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 32;
    Graph g = random_graph(n, 0.15, rng);
    Vertex token = static_cast<Vertex>(rng() % n);
    std::vector<Edge> edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    std::string body;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (rng() & 1) std::swap(u, v);
      body += (i ? "," : "") + std::string("[") + std::to_string(u) + "," + std::to_string(v) + "]";
    }
    std::string text = "{\"vertices\":" + std::to_string(n) + ",\"token\":" +
                       std::to_string(token) + ",\"edges\":[" + body + "]}";
    Position p = parse_position(text);
    EXPECT_EQ(p.graph, g);
    std::string canon = serialize_graph(p);
    EXPECT_EQ(serialize_graph(parse_position(canon)), canon);
    EXPECT_EQ(parse_position(canon), p);
    EXPECT_EQ(parse_position(serialize_edgelist(p)), p);

    std::vector<Edge> sorted = g.edges();
    std::sort(sorted.begin(), sorted.end());
    std::string expect_edges;
    for (std::size_t i = 0; i < sorted.size(); ++i)
      expect_edges += (i ? "," : "") + std::string("[") + std::to_string(sorted[i].first) + "," +
                      std::to_string(sorted[i].second) + "]";
    EXPECT_EQ(canon, "{\"vertices\":" + std::to_string(n) + ",\"edges\":[" + expect_edges +
                         "],\"token\":" + std::to_string(token) + "}");
  }
}

}  // namespace
}  // namespace ugeo
