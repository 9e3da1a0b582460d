#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ekc/graph.hpp"
#include "ekc/onion.hpp"

namespace ekc {

/// Vertices that join the k-core when `edge` is inserted, sorted ascending.
struct FollowerResult {
  CandidateEdge edge;
  std::vector<VertexId> followers;

  std::size_t count() const noexcept { return followers.size(); }

  /// Followers other than the two anchor endpoints.
  std::size_t non_endpoint_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(followers.begin(), followers.end(),
                                                  [&](VertexId x) { return !edge.touches(x); }));
  }
};

namespace detail {

inline void check_candidate(const Graph& g, CandidateEdge e) {
  if (e.u == e.v) throw InvalidAnchor("candidate is a self-loop");
  if (e.v >= g.vertex_count()) throw InvalidAnchor("candidate endpoint out of range");
  if (g.has_edge(e.u, e.v)) throw InvalidAnchor("candidate is already an edge");
}

}  // namespace detail

/// Reference follower computation: peel G+e from scratch and diff against the k-core of G.
/// `g` is the current graph (original graph plus all anchors chosen so far).
class FollowerOracle {
 public:
  FollowerOracle(const Graph& g, std::size_t k) : g_(&g), k_(k), core_(compute_k_core(g, k)) {}

  FollowerResult operator()(CandidateEdge e) const {
    detail::check_candidate(*g_, e);
    const CandidateEdge extra[] = {e};
    const VertexSet after = detail::peel_k_core(*g_, k_, extra);
    FollowerResult r{e, {}};
    for (VertexId v : after.members()) {
      if (!core_.contains(v)) r.followers.push_back(v);
    }
    return r;
  }

  const VertexSet& core() const noexcept { return core_; }

 private:
  const Graph* g_;
  std::size_t k_;
  VertexSet core_;
};

inline FollowerResult followers_oracle(const Graph& g, std::span<const CandidateEdge> anchors,
                                       std::size_t k, CandidateEdge e) {
  const Graph current = add_edges(g, anchors);
  return FollowerOracle(current, k)(e);
}

/// Onion-layer follower computation.
///
/// Starting from the lower-layer endpoint, vertices are activated layer by layer; only a
/// surviving activated vertex activates its shell neighbors in strictly higher layers.
/// Each activated vertex carries an upper bound on its degree in the new k-core:
/// d*(x), plus activated surviving neighbors in the same or lower layers, plus one for
/// the anchor edge while the partner endpoint survives. A vertex whose bound drops below
/// k is deleted and its processed neighbors lose one, cascading. Deleting an anchor
/// endpoint means the anchor has no followers.
///
/// Scratch buffers are sized O(n) and reused between calls, so one finder per worker.
class LayeredFollowerFinder {
 public:
  LayeredFollowerFinder(const Graph& g, const OnionLayers& layers)
      : g_(&g),
        layers_(&layers),
        k_(layers.k),
        activated_(g.vertex_count(), 0),
        processed_(g.vertex_count(), 0),
        dead_(g.vertex_count(), 0),
        bound_(g.vertex_count(), 0),
        buckets_(layers.depth() + 1) {}

  FollowerResult operator()(CandidateEdge e) {
    detail::check_candidate(*g_, e);
    FollowerResult result{e, {}};
    const OnionLayers& L = *layers_;
    if (!L.in_lower_core(e.u) || !L.in_lower_core(e.v)) return result;
    if (L.in_core(e.u) && L.in_core(e.v)) return result;

    edge_ = e;
    if (++stamp_ == 0) reset_stamps();
    touched_layers_.clear();
    activated_list_.clear();

    const std::uint32_t lu = L.layer[e.u];
    const std::uint32_t lv = L.layer[e.v];
    if (lu <= lv) activate(e.u);
    if (lv <= lu) activate(e.v);

    bool endpoint_died = false;
    for (std::uint32_t level = std::min(lu, lv); level <= max_active_layer_ && !endpoint_died;
         ++level) {
      auto& bucket = buckets_[level];
      for (std::size_t i = 0; i < bucket.size() && !endpoint_died; ++i) {
        const VertexId x = bucket[i];
        if (dead_[x] == stamp_) continue;
        processed_[x] = stamp_;
        bound_[x] = initial_bound(x);
        if (bound_[x] < k_) {
          endpoint_died = remove(x);
          continue;
        }
        for (VertexId y : g_->neighbors(x)) {
          if (L.in_shell(y) && L.layer[y] > level) activate(y);
        }
        if (edge_.touches(x)) {
          const VertexId partner = edge_.other(x);
          if (L.in_shell(partner) && L.layer[partner] > level) activate(partner);
        }
      }
    }
    for (std::uint32_t level : touched_layers_) buckets_[level].clear();
    max_active_layer_ = 0;
    if (endpoint_died) return result;

    for (VertexId x : activated_list_) {
      if (dead_[x] != stamp_) result.followers.push_back(x);
    }
    std::sort(result.followers.begin(), result.followers.end());
    return result;
  }

  /// Vertices activated by the last call, for instrumentation.
  std::size_t last_activation_count() const noexcept { return activated_list_.size(); }

 private:
  void activate(VertexId x) {
    if (activated_[x] == stamp_) return;
    activated_[x] = stamp_;
    activated_list_.push_back(x);
    const std::uint32_t level = layers_->layer[x];
    if (buckets_[level].empty()) touched_layers_.push_back(level);
    buckets_[level].push_back(x);
    max_active_layer_ = std::max(max_active_layer_, level);
  }

  bool alive_active(VertexId y) const noexcept {
    return activated_[y] == stamp_ && dead_[y] != stamp_;
  }

  std::size_t initial_bound(VertexId x) const {
    const OnionLayers& L = *layers_;
    const std::uint32_t lx = L.layer[x];
    std::size_t bound = L.dstar[x];
    for (VertexId y : g_->neighbors(x)) {
      if (L.in_shell(y) && L.layer[y] <= lx && alive_active(y)) ++bound;
    }
    if (edge_.touches(x)) {
      const VertexId p = edge_.other(x);
      if (L.in_core(p) || L.layer[p] > lx || alive_active(p)) ++bound;
    }
    return bound;
  }

  // Deletes x and cascades. Returns true if an anchor endpoint was deleted.
  bool remove(VertexId x) {
    cascade_.clear();
    dead_[x] = stamp_;
    cascade_.push_back(x);
    bool endpoint_died = edge_.touches(x);
    auto lose = [&](VertexId y) {
      if (processed_[y] != stamp_ || dead_[y] == stamp_) return;
      if (--bound_[y] < k_) {
        dead_[y] = stamp_;
        cascade_.push_back(y);
        if (edge_.touches(y)) endpoint_died = true;
      }
    };
    for (std::size_t head = 0; head < cascade_.size() && !endpoint_died; ++head) {
      const VertexId z = cascade_[head];
      for (VertexId y : g_->neighbors(z)) lose(y);
      if (edge_.touches(z)) lose(edge_.other(z));
    }
    return endpoint_died;
  }

  void reset_stamps() {
    std::fill(activated_.begin(), activated_.end(), 0);
    std::fill(processed_.begin(), processed_.end(), 0);
    std::fill(dead_.begin(), dead_.end(), 0);
    stamp_ = 1;
  }

  const Graph* g_;
  const OnionLayers* layers_;
  std::size_t k_;
  CandidateEdge edge_;
  std::uint32_t stamp_ = 0;
  std::vector<std::uint32_t> activated_;
  std::vector<std::uint32_t> processed_;
  std::vector<std::uint32_t> dead_;
  std::vector<std::size_t> bound_;
  std::vector<std::vector<VertexId>> buckets_;
  std::vector<std::uint32_t> touched_layers_;
  std::vector<VertexId> activated_list_;
  std::vector<VertexId> cascade_;
  std::uint32_t max_active_layer_ = 0;
};

/// Convenience wrapper: builds G+A and its onion layers, then runs the layered finder.
inline FollowerResult followers_layered(const Graph& g, std::span<const CandidateEdge> anchors,
                                        std::size_t k, CandidateEdge e, const OnionLayers& layers) {
  const Graph current = add_edges(g, anchors);
  LayeredFollowerFinder finder(current, layers);
  return finder(e);
}

}  // namespace ekc
