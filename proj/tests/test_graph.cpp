#include <gtest/gtest.h>

#include <random>

#include "chromzeta/graph.hpp"
#include "oracles.hpp"

using namespace chromzeta;

namespace {

GraphErrorKind parse_error_kind(std::string_view text, int* line = nullptr) {
  try {
    parse_graph(text);
  } catch (const GraphError& e) {
    if (line) *line = e.line();
    return e.kind();
  }
  ADD_FAILURE() << "no error for: " << text;
  return GraphErrorKind::malformed;
}

}  // namespace

TEST(ParseGraph, Triangle) {
  const Graph g = parse_graph("3\n1 2\n2 3\n1 3");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}}));
}

TEST(ParseGraph, IsolatedVerticesKept) {
  const Graph g = parse_graph("4\n1 2");
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.degree(3), 0);
  EXPECT_EQ(g.degree(4), 0);
}

TEST(ParseGraph, CommentsBlankLinesAndCrlf) {
  const Graph g = parse_graph("# triangle\r\n3\r\n\r\n# edges\r\n2 1\r\n3 2\r\n1 3\r\n");
  EXPECT_EQ(g, family("cycle:3"));
}

TEST(ParseGraph, ErrorsAreDistinctAndNameTheLine) {
  int line = 0;
  EXPECT_EQ(parse_error_kind("2\n1 1", &line), GraphErrorKind::self_loop);
  EXPECT_EQ(line, 2);
  EXPECT_EQ(parse_error_kind("3\n1 2\n# c\n1 4", &line), GraphErrorKind::vertex_out_of_range);
  EXPECT_EQ(line, 4);
  EXPECT_EQ(parse_error_kind("3\n1 2\n2 1", &line), GraphErrorKind::duplicate_edge);
  EXPECT_EQ(line, 3);
  EXPECT_EQ(parse_error_kind("3\n1 two", &line), GraphErrorKind::malformed);
  EXPECT_EQ(line, 2);
  EXPECT_EQ(parse_error_kind("3\n1 2 3"), GraphErrorKind::malformed);
  EXPECT_EQ(parse_error_kind(""), GraphErrorKind::malformed);
  EXPECT_EQ(parse_error_kind("0"), GraphErrorKind::bad_parameter);
  EXPECT_EQ(parse_error_kind("17"), GraphErrorKind::too_many_vertices);
  EXPECT_NO_THROW(parse_graph("17", 17));
}

TEST(ParseGraph, ErrorsAreUsageErrors) { EXPECT_THROW(parse_graph("2\n1 1"), UsageError); }

TEST(Family, Examples) {
  EXPECT_EQ(family("cycle:3"), Graph(3, {{1, 2}, {2, 3}, {1, 3}}));
  EXPECT_EQ(family("path:2"), Graph(2, {{1, 2}}));
  EXPECT_EQ(family("complete:4").size(), 6u);
  EXPECT_EQ(family("empty:5").size(), 0u);
  EXPECT_EQ(family("star:4").degree(1), 3);
  EXPECT_EQ(family("path:1"), Graph(1, {}));
}

TEST(Family, Errors) {
  EXPECT_THROW(family("cycle:2"), GraphError);
  EXPECT_THROW(family("wheel:5"), GraphError);
  EXPECT_THROW(family("path:0"), GraphError);
  EXPECT_THROW(family("path:-3"), GraphError);
  EXPECT_THROW(family("path"), GraphError);
  EXPECT_THROW(family("path:3x"), GraphError);
  EXPECT_THROW(family("complete:17"), GraphError);
  EXPECT_NO_THROW(family("complete:17", 17));
}

TEST(Family, CompleteEdgeCount) {
  for (int k = 1; k <= 12; ++k) EXPECT_EQ(family("complete:" + std::to_string(k)).size(), std::size_t(k * (k - 1) / 2));
}

TEST(Family, IdentifyRoundTrip) {
  for (const char* label : {"path:5", "cycle:6", "complete:4", "empty:3", "star:5"}) {
    const auto name = identify_family(family(label));
    ASSERT_TRUE(name.has_value()) << label;
    EXPECT_EQ(family(*name), family(label));
  }
  EXPECT_FALSE(identify_family(Graph(4, {{1, 3}})).has_value());
}

TEST(Components, Examples) {
  const auto parts = connected_components(Graph(4, {{1, 2}}));
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].original_label, (std::vector<int>{1, 2}));
  EXPECT_EQ(parts[0].graph, family("path:2"));
  EXPECT_EQ(parts[1].original_label, (std::vector<int>{3}));
  EXPECT_EQ(parts[2].original_label, (std::vector<int>{4}));
  EXPECT_EQ(connected_components(family("cycle:5")).size(), 1u);
  EXPECT_EQ(connected_components(family("empty:3")).size(), 3u);
}

TEST(Components, PreserveCountsAndEdges) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 10, 0.2);
    int vertices = 0;
    std::size_t edges = 0;
    for (const auto& c : connected_components(g)) {
      vertices += c.graph.order();
      edges += c.graph.size();
      for (const auto& e : c.graph.edges())
        EXPECT_TRUE(g.has_edge(c.original_label[e.u - 1], c.original_label[e.v - 1]));
    }
    EXPECT_EQ(vertices, g.order());
    EXPECT_EQ(edges, g.size());
  }
}

TEST(Subgraph, Examples) {
  EXPECT_TRUE(is_subgraph(family("path:3"), family("cycle:3")));
  EXPECT_FALSE(is_subgraph(family("cycle:3"), family("path:3")));
  EXPECT_TRUE(is_subgraph(family("empty:3"), family("cycle:3")));
  EXPECT_THROW(is_subgraph(family("path:2"), family("cycle:3")), UsageError);
}

TEST(Render, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 16, 0.35);
    EXPECT_EQ(parse_graph(render_graph(g)), g);
  }
}

TEST(GraphValue, ValidatesAndNormalises) {
  const Graph g(3, {{3, 1}, {2, 1}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {1, 3}}));
  EXPECT_TRUE(g.has_edge(3, 1));
  EXPECT_THROW(Graph(3, {{1, 2}, {2, 1}}), GraphError);
  EXPECT_THROW(Graph(3, {{0, 2}}), GraphError);
  EXPECT_THROW(Graph(3, {{2, 2}}), GraphError);
}
