#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "ekc/graph.hpp"

namespace ekc {

/// Onion-layer decomposition of the (k-1)-core with respect to k-core peeling.
///
/// Peeling C_{k-1} down to C_k removes vertices in batches; batch i is layer L_i. Every
/// vertex of the (k-1)-shell gets a layer index in [1, s]. k-core vertices sit above all
/// layers (kCoreLayer) and vertices outside C_{k-1} get kOutside.
struct OnionLayers {
  static constexpr std::uint32_t kOutside = 0;
  static constexpr std::uint32_t kCoreLayer = std::numeric_limits<std::uint32_t>::max();

  std::size_t k = 0;
  std::vector<std::uint32_t> layer;
  /// Neighbors in strictly higher layers or in the k-core. Zero for non-shell vertices.
  std::vector<std::uint32_t> dstar;
  /// layers[i - 1] holds L_i in ascending id order.
  std::vector<std::vector<VertexId>> layers;

  std::size_t depth() const noexcept { return layers.size(); }

  bool in_shell(VertexId u) const noexcept {
    return layer[u] != kOutside && layer[u] != kCoreLayer;
  }
  bool in_core(VertexId u) const noexcept { return layer[u] == kCoreLayer; }
  bool in_lower_core(VertexId u) const noexcept { return layer[u] != kOutside; }
};

inline OnionLayers build_onion_layers(const Graph& g, std::size_t k) {
  if (k < 2) throw std::invalid_argument("onion layers need k >= 2");
  const std::size_t n = g.vertex_count();
  const VertexSet lower = compute_k_core(g, k - 1);

  OnionLayers out;
  out.k = k;
  out.layer.assign(n, OnionLayers::kOutside);
  out.dstar.assign(n, 0);

  std::vector<std::size_t> deg(n, 0);
  std::vector<VertexId> batch;
  for (VertexId u = 0; u < n; ++u) {
    if (!lower.contains(u)) continue;
    out.layer[u] = OnionLayers::kCoreLayer;
    for (VertexId w : g.neighbors(u)) {
      if (lower.contains(w)) ++deg[u];
    }
  }
  for (VertexId u = 0; u < n; ++u) {
    if (lower.contains(u) && deg[u] < k) batch.push_back(u);
  }

  std::uint32_t index = 0;
  while (!batch.empty()) {
    ++index;
    for (VertexId u : batch) out.layer[u] = index;
    std::vector<VertexId> next;
    for (VertexId u : batch) {
      for (VertexId w : g.neighbors(u)) {
        if (out.layer[w] != OnionLayers::kCoreLayer) continue;
        if (deg[w]-- == k) next.push_back(w);
      }
    }
    std::sort(batch.begin(), batch.end());
    out.layers.push_back(std::move(batch));
    batch = std::move(next);
  }

  for (const auto& level : out.layers) {
    for (VertexId u : level) {
      std::uint32_t count = 0;
      for (VertexId w : g.neighbors(u)) {
        if (out.layer[w] != OnionLayers::kOutside && out.layer[w] > out.layer[u]) ++count;
      }
      out.dstar[u] = count;
    }
  }
  return out;
}

/// "L<i>: <labels>" per layer followed by one "d*:" line of label=value pairs.
inline void dump_onion_layers(std::ostream& out, const Graph& g, const OnionLayers& layers) {
  for (std::size_t i = 0; i < layers.layers.size(); ++i) {
    out << 'L' << (i + 1) << ':';
    for (VertexId u : layers.layers[i]) out << ' ' << g.label(u);
    out << '\n';
  }
  out << "d*:";
  for (const auto& level : layers.layers) {
    for (VertexId u : level) out << ' ' << g.label(u) << '=' << layers.dstar[u];
  }
  out << '\n';
}

}  // namespace ekc
