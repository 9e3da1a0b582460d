#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace ekc;

namespace {

using Ids = std::vector<VertexId>;

Ids layered(const Graph& g, std::size_t k, CandidateEdge e) {
  return followers_layered(g, {}, k, e, build_onion_layers(g, k)).followers;
}

}  // namespace

TEST(Oracle, Demo6) {
  const Graph g = fixtures::demo6();
  EXPECT_EQ(followers_oracle(g, {}, 3, {1, 4}).followers, (Ids{4, 5}));
  EXPECT_EQ(followers_oracle(g, {}, 3, {0, 5}).followers, (Ids{5}));
  EXPECT_EQ(followers_oracle(g, {}, 3, {3, 5}).followers, (Ids{5}));
}

TEST(Oracle, EndpointsCountAsFollowers) {
  const FollowerResult r = followers_oracle(fixtures::demo6(), {}, 3, {1, 4});
  EXPECT_EQ(r.count(), 2u);
  EXPECT_EQ(r.non_endpoint_count(), 1u);
}

TEST(Oracle, Path5ClosingTheCycle) {
  const Graph g = fixtures::path5();
  EXPECT_EQ(followers_oracle(g, {}, 2, {0, 4}).followers, (Ids{0, 1, 2, 3, 4}));
  EXPECT_EQ(followers_oracle(g, {}, 2, {0, 2}).followers, (Ids{0, 1, 2}));
}

TEST(Oracle, RespectsPriorAnchors) {
  const Graph g = fixtures::demo6();
  const CandidateEdge a[] = {{1, 4}};
  EXPECT_TRUE(followers_oracle(g, a, 3, {2, 4}).followers.empty());
}

TEST(Oracle, RejectsExistingEdge) {
  EXPECT_THROW(followers_oracle(fixtures::demo6(), {}, 3, {0, 1}), InvalidAnchor);
  EXPECT_THROW(followers_oracle(fixtures::demo6(), {}, 3, {0, 0}), InvalidAnchor);
}

TEST(Layered, Demo6Traces) {
  const Graph g = fixtures::demo6();
  const OnionLayers L = build_onion_layers(g, 3);
  LayeredFollowerFinder find(g, L);
  EXPECT_EQ(find({1, 4}).followers, (Ids{4, 5}));
  EXPECT_EQ(find.last_activation_count(), 2u);
  EXPECT_EQ(find({3, 5}).followers, (Ids{5}));
  EXPECT_EQ(find.last_activation_count(), 1u);
  EXPECT_EQ(find({0, 5}).followers, (Ids{5}));
}

TEST(Layered, Demo8ForcedDroppedPair) {
  EXPECT_TRUE(layered(fixtures::demo8(), 3, {5, 7}).empty());
  EXPECT_TRUE(layered(fixtures::demo8(), 3, {3, 6}).empty());
}

TEST(Layered, OutOfScopeIsEmpty) {
  EXPECT_TRUE(layered(fixtures::path5(), 3, {0, 4}).empty());
}

TEST(Layered, FinderIsReusable) {
  const Graph g = fixtures::demo8();
  const OnionLayers L = build_onion_layers(g, 3);
  LayeredFollowerFinder find(g, L);
  for (int round = 0; round < 3; ++round) {
    for (CandidateEdge e : scope_filter(g, 3)) {
      ASSERT_EQ(find(e).followers, FollowerOracle(g, 3)(e).followers);
    }
  }
}

TEST(Property, OracleMatchesSubsetDefinition) {
  fixtures::RandomGraphs gen(41);
  for (int t = 0; t < 40; ++t) {
    const Graph g = gen.next(4, 10, 0.2, 0.6);
    for (std::size_t k = 2; k <= 4; ++k) {
      const auto before = oracle::subset_core(oracle::adjacency(g), k);
      for (CandidateEdge e : scope_filter(g, k)) {
        const auto after = oracle::subset_core(oracle::adjacency(g, {e}), k);
        Ids want;
        for (VertexId v : after) {
          if (!before.count(v)) want.push_back(v);
        }
        ASSERT_EQ(FollowerOracle(g, k)(e).followers, want);
      }
    }
  }
}

TEST(Property, LayeredMatchesOracleOnSurvivors) {
  fixtures::RandomGraphs gen(42);
  for (int t = 0; t < 200; ++t) {
    const Graph g = gen.next(10, 60, 0.04, 0.2);
    for (std::size_t k = 2; k <= 6; ++k) {
      const OnionLayers L = build_onion_layers(g, k);
      const FollowerOracle truth(g, k);
      LayeredFollowerFinder find(g, L);
      for (CandidateEdge e : layer_filter(scope_filter(g, k), L)) {
        ASSERT_EQ(find(e).followers, truth(e).followers) << e.u << "," << e.v << " k=" << k;
      }
    }
  }
}

TEST(Property, FollowersAreConnectedToTheAnchor) {
  fixtures::RandomGraphs gen(43);
  for (int t = 0; t < 80; ++t) {
    const Graph g = gen.next(10, 40, 0.05, 0.2);
    const std::size_t k = 3;
    for (CandidateEdge e : scope_filter(g, k)) {
      const FollowerResult r = FollowerOracle(g, k)(e);
      if (r.followers.empty()) continue;
      // Nonempty follower sets contain an endpoint and lie in the (k-1)-shell.
      ASSERT_TRUE(std::any_of(r.followers.begin(), r.followers.end(),
                              [&](VertexId x) { return e.touches(x); }));
      const VertexSet shell = k_shell(g, k - 1);
      for (VertexId x : r.followers) ASSERT_TRUE(shell.contains(x));
    }
  }
}
