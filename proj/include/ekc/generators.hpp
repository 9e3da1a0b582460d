#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ekc/graph.hpp"

namespace ekc {

/// G(n, p) with a portable coin: the top 53 bits of mt19937_64 as a double in [0, 1).
inline Graph gen_er(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const double coin = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (coin < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

/// A maximum-coverage instance: `sets[j]` lists 1-based element ids of set T_{j+1}.
struct MCInstance {
  std::size_t elements = 0;
  std::vector<std::vector<std::size_t>> sets;

  std::size_t set_count() const noexcept { return sets.size(); }
};

struct MCReduction {
  Graph graph;
  /// Human-readable role per vertex: "u<set>_<pos>", "v<element>" or "q<index>".
  std::vector<std::string> labels;
  /// Gadget anchor (u^i_{d+1}, u^i_{d+3}) per set.
  std::vector<CandidateEdge> gadget_anchors;
  /// The k+1 clique vertices.
  std::vector<VertexId> clique;
  /// Sets with fewer than two elements, which the reduction's argument does not cover.
  std::vector<std::size_t> degenerate_sets;
};

/// Hardness-reduction graph from maximum coverage.
///
/// Per set T_i a cycle gadget M_i of d+3 vertices; per element a vertex v_j joined to the
/// j-th gadget vertex of every set containing it; and a (k+1)-clique Q. Gadget vertices
/// get padding edges to Q up to degree k, except u_{d+1} and u_{d+3} which stop at k-1;
/// every v_j gets k-1 edges to Q. The k-core is exactly Q, and anchoring
/// (u^i_{d+1}, u^i_{d+3}) pulls in M_i plus the elements of T_i.
///
/// Vertex ids: gadgets first (set-major), then elements, then Q. Padding targets are
/// assigned round-robin over Q.
inline MCReduction gen_mc_reduction(const MCInstance& inst, std::size_t k) {
  const std::size_t c = inst.set_count();
  const std::size_t d = inst.elements;
  if (k < 3) throw std::invalid_argument("reduction needs k >= 3");

  std::vector<std::vector<std::uint8_t>> member(c, std::vector<std::uint8_t>(d + 1, 0));
  std::vector<std::uint8_t> covered(d + 1, 0);
  for (std::size_t j = 0; j < c; ++j) {
    for (std::size_t e : inst.sets[j]) {
      if (e < 1 || e > d) throw std::invalid_argument("element id out of range");
      member[j][e] = 1;
      covered[e] = 1;
    }
  }
  for (std::size_t e = 1; e <= d; ++e) {
    if (!covered[e]) throw std::invalid_argument("element " + std::to_string(e) + " is in no set");
  }

  const std::size_t gadget = d + 3;
  auto gadget_vertex = [&](std::size_t set, std::size_t pos) {  // pos is 1-based
    return static_cast<VertexId>(set * gadget + (pos - 1));
  };
  auto element_vertex = [&](std::size_t e) { return static_cast<VertexId>(c * gadget + (e - 1)); };
  auto clique_vertex = [&](std::size_t q) { return static_cast<VertexId>(c * gadget + d + q); };
  const std::size_t n = c * gadget + d + k + 1;

  MCReduction out;
  out.labels.resize(n);
  std::vector<std::pair<VertexId, VertexId>> edges;

  for (std::size_t q = 0; q <= k; ++q) {
    out.clique.push_back(clique_vertex(q));
    out.labels[clique_vertex(q)] = "q" + std::to_string(q);
    for (std::size_t r = q + 1; r <= k; ++r) edges.emplace_back(clique_vertex(q), clique_vertex(r));
  }

  std::size_t next_q = 0;
  auto pad = [&](VertexId x, std::size_t count) {
    if (count > k + 1) throw std::logic_error("padding needs more than k+1 clique neighbors");
    for (std::size_t t = 0; t < count; ++t) {
      edges.emplace_back(x, clique_vertex(next_q));
      next_q = (next_q + 1) % (k + 1);
    }
  };

  for (std::size_t i = 0; i < c; ++i) {
    if (inst.sets[i].size() < 2) out.degenerate_sets.push_back(i);
    for (std::size_t pos = 1; pos <= gadget; ++pos) {
      const VertexId x = gadget_vertex(i, pos);
      out.labels[x] = "u" + std::to_string(i + 1) + "_" + std::to_string(pos);
      edges.emplace_back(x, gadget_vertex(i, pos == gadget ? 1 : pos + 1));
      std::size_t degree = 2;
      if (pos <= d && member[i][pos]) {
        edges.emplace_back(x, element_vertex(pos));
        ++degree;
      }
      const std::size_t target = (pos == d + 1 || pos == d + 3) ? k - 1 : k;
      if (degree > target) throw std::logic_error("gadget vertex exceeds its target degree");
      pad(x, target - degree);
    }
    out.gadget_anchors.emplace_back(gadget_vertex(i, d + 1), gadget_vertex(i, d + 3));
  }
  for (std::size_t e = 1; e <= d; ++e) {
    out.labels[element_vertex(e)] = "v" + std::to_string(e);
    pad(element_vertex(e), k - 1);
  }

  out.graph = Graph::from_edges(n, edges);
  return out;
}

struct NonSubmodularWitness {
  Graph graph;
  CandidateEdge a;  // (u, w)
  CandidateEdge b;  // (v, w)
  VertexId w = 0;
};

/// Two disjoint (k+1)-cliques Q1 (ids 0..k, u = 0, v = 1) and Q2 (ids k+1..2k+1), plus w
/// (id 2k+2) joined to k-2 vertices of Q2. Each of (u, w) and (v, w) alone gains nothing;
/// together they pull w into the k-core.
inline NonSubmodularWitness gen_nonsubmodular(std::size_t k) {
  if (k < 2) throw std::invalid_argument("witness needs k >= 2");
  const std::size_t n = 2 * (k + 1) + 1;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t base : {std::size_t{0}, k + 1}) {
    for (std::size_t i = 0; i <= k; ++i) {
      for (std::size_t j = i + 1; j <= k; ++j) {
        edges.emplace_back(static_cast<VertexId>(base + i), static_cast<VertexId>(base + j));
      }
    }
  }
  const auto w = static_cast<VertexId>(2 * (k + 1));
  for (std::size_t i = 0; i + 2 < k; ++i) edges.emplace_back(w, static_cast<VertexId>(k + 1 + i));
  return {Graph::from_edges(n, edges), CandidateEdge(0, w), CandidateEdge(1, w), w};
}

}  // namespace ekc
