#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace ekc;
using fixtures::Edges;

namespace {

std::vector<VertexId> ids(std::initializer_list<VertexId> v) { return v; }

}  // namespace

TEST(Parse, SnapHeaderAndRemap) {
  std::istringstream in("# Directed graph\n# Nodes: 3\n10 20\n\n20 30 extra\n10 30\n");
  const Graph g = parse_edge_list(in);
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.labels(), (std::vector<Label>{10, 20, 30}));
}

TEST(Parse, DuplicatesAndReversedCollapse) {
  std::istringstream in("1 2\n2 1\n1 2\n");
  const Graph g = parse_edge_list(in);
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Parse, SelfLoopRegistersVertexOnly) {
  std::istringstream in("5 5\n1 2\n");
  const Graph g = parse_edge_list(in);
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.degree(0), 0u);
}

TEST(Parse, BadTokenReportsLine) {
  std::istringstream in("1 2\n# ok\n3 x\n");
  try {
    parse_edge_list(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Parse, SingleTokenIsError) {
  std::istringstream in("1\n");
  EXPECT_THROW(parse_edge_list(in), ParseError);
}

TEST(Parse, EmptyInput) {
  std::istringstream in("# nothing\n");
  const Graph g = parse_edge_list(in);
  EXPECT_EQ(g.vertex_count(), 0u);
  EXPECT_EQ(graph_stats(g).k_max, 0u);
}

TEST(Graph, Demo6Shape) {
  const Graph g = fixtures::demo6();
  EXPECT_EQ(g.vertex_count(), 6u);
  EXPECT_EQ(g.edge_count(), 10u);
  EXPECT_TRUE(g.has_edge(5, 1));
  EXPECT_FALSE(g.has_edge(1, 4));
}

TEST(AddEdges, Demo6PlusAnchor) {
  const CandidateEdge a[] = {{1, 4}};
  const Graph g = add_edges(fixtures::demo6(), a);
  EXPECT_EQ(g.edge_count(), 11u);
  EXPECT_EQ(compute_k_core(g, 3).size(), 6u);
}

TEST(AddEdges, RejectsBadAnchors) {
  const Graph g = fixtures::demo6();
  const CandidateEdge existing[] = {{0, 1}};
  const CandidateEdge loop[] = {{2, 2}};
  const CandidateEdge missing[] = {{0, 9}};
  const CandidateEdge twice[] = {{1, 4}, {4, 1}};
  EXPECT_THROW(add_edges(g, existing), InvalidAnchor);
  EXPECT_THROW(add_edges(g, loop), InvalidAnchor);
  EXPECT_THROW(add_edges(g, missing), InvalidAnchor);
  EXPECT_THROW(add_edges(g, twice), InvalidAnchor);
}

TEST(Core, Fixtures) {
  EXPECT_EQ(compute_k_core(fixtures::k4(), 3).members(), ids({0, 1, 2, 3}));
  EXPECT_EQ(compute_k_core(fixtures::demo6(), 3).members(), ids({0, 1, 2, 3}));
  EXPECT_TRUE(compute_k_core(fixtures::path5(), 2).empty());
  EXPECT_EQ(compute_k_core(fixtures::demo6(), 0).size(), 6u);
  EXPECT_TRUE(compute_k_core(fixtures::k4(), 4).empty());
}

TEST(Core, Decomposition) {
  const CoreDecomposition d = core_decomposition(fixtures::demo6());
  EXPECT_EQ(d.coreness, (std::vector<std::uint32_t>{3, 3, 3, 3, 2, 2}));
  EXPECT_EQ(d.k_max, 3u);
  EXPECT_EQ(k_shell(fixtures::demo6(), 2).members(), ids({4, 5}));
}

TEST(Components, Demo6Shell) {
  const Graph g = fixtures::demo6();
  const auto comps = induced_components(g, k_shell(g, 2));
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0], ids({4, 5}));
}

TEST(Stats, Demo6) {
  const GraphStats s = graph_stats(fixtures::demo6());
  EXPECT_EQ(s.n, 6u);
  EXPECT_EQ(s.m, 10u);
  EXPECT_NEAR(s.d_avg, 10.0 / 3.0, 1e-12);
  EXPECT_EQ(s.k_max, 3u);
}

TEST(Property, CoreMatchesSubsetOracle) {
  fixtures::RandomGraphs gen(11);
  for (int t = 0; t < 150; ++t) {
    const Graph g = gen.next(3, 11, 0.1, 0.7);
    for (std::size_t k = 1; k <= 5; ++k) {
      const auto expect = oracle::subset_core(oracle::adjacency(g), k);
      const auto got = compute_k_core(g, k).members();
      ASSERT_EQ(got, std::vector<VertexId>(expect.begin(), expect.end())) << "k=" << k;
    }
  }
}

TEST(Property, DecompositionAgreesWithPerKPeel) {
  fixtures::RandomGraphs gen(12);
  for (int t = 0; t < 100; ++t) {
    const Graph g = gen.next(5, 40, 0.05, 0.4);
    const CoreDecomposition d = core_decomposition(g);
    for (std::size_t k = 0; k <= d.k_max + 1; ++k) {
      const VertexSet c = compute_k_core(g, k);
      for (VertexId u = 0; u < g.vertex_count(); ++u) {
        ASSERT_EQ(c.contains(u), d.coreness[u] >= k);
      }
    }
  }
}

TEST(Property, CoresAreNested) {
  fixtures::RandomGraphs gen(13);
  for (int t = 0; t < 100; ++t) {
    const Graph g = gen.next(5, 40, 0.05, 0.4);
    for (std::size_t k = 1; k < 6; ++k) {
      const VertexSet hi = compute_k_core(g, k + 1);
      const VertexSet lo = compute_k_core(g, k);
      for (VertexId u : hi.members()) ASSERT_TRUE(lo.contains(u));
    }
  }
}

TEST(Property, AnchorsNeverShrinkTheCore) {
  fixtures::RandomGraphs gen(14);
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    const Graph g = gen.next(4, 30, 0.05, 0.4);
    const std::size_t n = g.vertex_count();
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    const VertexId a = pick(rng), c = pick(rng);
    if (a == c || g.has_edge(a, c)) continue;
    const CandidateEdge e[] = {{a, c}};
    const Graph h = add_edges(g, e);
    for (std::size_t k = 1; k < 5; ++k) {
      const VertexSet before = compute_k_core(g, k);
      const VertexSet after = compute_k_core(h, k);
      for (VertexId u : before.members()) ASSERT_TRUE(after.contains(u));
    }
  }
}

TEST(Property, WriteParseRoundTrip) {
  fixtures::RandomGraphs gen(15);
  for (int t = 0; t < 100; ++t) {
    const Graph g = gen.next(1, 30, 0.0, 0.3);
    std::stringstream buf;
    write_edge_list(buf, g);
    const Graph h = parse_edge_list(buf);
    ASSERT_EQ(h.vertex_count(), g.vertex_count());
    ASSERT_EQ(h.edges(), g.edges());
    ASSERT_EQ(h.labels(), g.labels());
  }
}

TEST(Property, RoundTripKeepsForeignLabels) {
  std::istringstream in("7 3\n3 100\n42 42\n100 7\n");
  const Graph g = parse_edge_list(in);
  std::stringstream buf;
  write_edge_list(buf, g);
  const Graph h = parse_edge_list(buf);
  EXPECT_TRUE(h == g);
}
