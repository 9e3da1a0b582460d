#pragma once

#include <random>
#include <utility>
#include <vector>

#include "ekc/ekc.hpp"

namespace fixtures {

using ekc::Graph;
using ekc::VertexId;
using Edges = std::vector<std::pair<VertexId, VertexId>>;

inline Edges demo6_edges() {
  return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 5}, {5, 1}, {5, 2}};
}

// K4 on {0,1,2,3}; 4 hangs off 0 and 5; 5 hangs off 1 and 2.
inline Graph demo6() { return Graph::from_edges(6, demo6_edges()); }

// demo6 plus the path 0-6-7-1.
inline Graph demo8() {
  Edges e = demo6_edges();
  e.insert(e.end(), {{6, 0}, {6, 7}, {7, 1}});
  return Graph::from_edges(8, e);
}

inline Graph k4() { return Graph::from_edges(4, Edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

inline Graph path5() { return Graph::from_edges(5, Edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}}); }

// Two disjoint copies of `g`, the second shifted by g.vertex_count().
inline Graph disjoint_twice(const Graph& g) {
  const auto n = static_cast<VertexId>(g.vertex_count());
  Edges e;
  for (auto c : g.edges()) {
    e.emplace_back(c.u, c.v);
    e.emplace_back(c.u + n, c.v + n);
  }
  return Graph::from_edges(2 * n, e);
}

// Hand-rolled generator for property tests: G(n, p) with a random n in [lo, hi].
struct RandomGraphs {
  std::mt19937_64 rng;
  explicit RandomGraphs(std::uint64_t seed) : rng(seed) {}

  Graph next(std::size_t lo, std::size_t hi, double p_lo, double p_hi) {
    std::uniform_int_distribution<std::size_t> nd(lo, hi);
    std::uniform_real_distribution<double> pd(p_lo, p_hi);
    const std::size_t n = nd(rng);
    return ekc::gen_er(n, pd(rng), rng());
  }
};

}  // namespace fixtures
