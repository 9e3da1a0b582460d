#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ekc/graph.hpp"
#include "ekc/onion.hpp"

namespace ekc {

/// Per-iteration candidate accounting.
/// Invariant at iteration end: produced == pruned_scope + pruned_layer +
/// pruned_subsumption + evaluated + reused.
struct CandidateCounters {
  std::uint64_t produced = 0;
  std::uint64_t pruned_scope = 0;
  std::uint64_t pruned_layer = 0;
  std::uint64_t pruned_subsumption = 0;
  std::uint64_t evaluated = 0;
  /// Candidates whose result was taken from the component cache instead of re-evaluated.
  std::uint64_t reused = 0;

  CandidateCounters& operator+=(const CandidateCounters& o) {
    produced += o.produced;
    pruned_scope += o.pruned_scope;
    pruned_layer += o.pruned_layer;
    pruned_subsumption += o.pruned_subsumption;
    evaluated += o.evaluated;
    reused += o.reused;
    return *this;
  }

  friend bool operator==(const CandidateCounters&, const CandidateCounters&) = default;
};

/// Membership of every vertex relative to the k-core and the (k-1)-core of one graph.
class CoreView {
 public:
  enum class Status : std::uint8_t { kOutside, kShell, kCore };

  CoreView() = default;

  CoreView(const Graph& g, std::size_t k) : k_(k) {
    if (k < 1) throw std::invalid_argument("core view needs k >= 1");
    const CoreDecomposition cores = core_decomposition(g);
    status_.resize(g.vertex_count(), Status::kOutside);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      if (cores.coreness[u] >= k) {
        status_[u] = Status::kCore;
        lower_.push_back(u);
        ++core_size_;
      } else if (cores.coreness[u] + 1 == k) {
        status_[u] = Status::kShell;
        lower_.push_back(u);
        shell_.push_back(u);
      }
      if (status_[u] != Status::kCore) non_core_.push_back(u);
      all_.push_back(u);
    }
  }

  std::size_t k() const noexcept { return k_; }
  std::size_t vertex_count() const noexcept { return status_.size(); }
  Status status(VertexId u) const noexcept { return status_[u]; }
  bool in_core(VertexId u) const noexcept { return status_[u] == Status::kCore; }
  bool in_shell(VertexId u) const noexcept { return status_[u] == Status::kShell; }
  bool in_lower_core(VertexId u) const noexcept { return status_[u] != Status::kOutside; }
  std::size_t core_size() const noexcept { return core_size_; }

  /// Sorted vertex lists.
  const std::vector<VertexId>& lower_core() const noexcept { return lower_; }
  const std::vector<VertexId>& shell() const noexcept { return shell_; }
  const std::vector<VertexId>& non_core() const noexcept { return non_core_; }
  const std::vector<VertexId>& all() const noexcept { return all_; }

  VertexSet core_set() const {
    VertexSet s(status_.size());
    for (VertexId u = 0; u < status_.size(); ++u) {
      if (in_core(u)) s.insert(u);
    }
    return s;
  }

 private:
  std::size_t k_ = 0;
  std::vector<Status> status_;
  std::vector<VertexId> lower_;
  std::vector<VertexId> shell_;
  std::vector<VertexId> non_core_;
  std::vector<VertexId> all_;
  std::size_t core_size_ = 0;
};

/// Size of the unpruned candidate universe: non-edges that are not between two k-core
/// vertices. Computed arithmetically so the universe is never materialized.
inline std::uint64_t unpruned_candidate_count(const Graph& g, const CoreView& view) {
  const std::uint64_t n = g.vertex_count();
  const std::uint64_t c = view.core_size();
  std::uint64_t core_edges = 0;
  for (VertexId u = 0; u < n; ++u) {
    if (!view.in_core(u)) continue;
    for (VertexId w : g.neighbors(u)) {
      if (u < w && view.in_core(w)) ++core_edges;
    }
  }
  const std::uint64_t all_pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t core_pairs = c * (c - (c > 0 ? 1 : 0)) / 2;
  return all_pairs - g.edge_count() - (core_pairs - core_edges);
}

/// Lazily enumerates candidate non-edges in ascending normalized order.
///
/// kUnpruned yields every non-edge except pairs inside the k-core. kScope yields only
/// pairs with one endpoint in the (k-1)-shell and the other in the (k-1)-core, which are
/// the only pairs that can have followers. A stream can be restricted to the source
/// vertices u with u % stride == offset, so that workers can split the enumeration.
class CandidateStream {
 public:
  enum class Mode { kUnpruned, kScope };

  CandidateStream(const Graph& g, const CoreView& view, Mode mode, std::size_t offset = 0,
                  std::size_t stride = 1)
      : g_(&g), view_(&view), mode_(mode), next_source_(offset), stride_(stride) {}

  std::optional<CandidateEdge> next() {
    while (true) {
      if (targets_.empty()) {
        if (!advance_source()) return std::nullopt;
        continue;
      }
      VertexId v = targets_.front();
      targets_ = targets_.subspan(1);
      while (!adjacency_.empty() && adjacency_.front() < v) adjacency_ = adjacency_.subspan(1);
      if (!adjacency_.empty() && adjacency_.front() == v) continue;
      return CandidateEdge(source_, v);
    }
  }

  Mode mode() const noexcept { return mode_; }

 private:
  bool advance_source() {
    const std::size_t n = g_->vertex_count();
    while (next_source_ < n) {
      VertexId u = static_cast<VertexId>(next_source_);
      next_source_ += stride_;
      const std::vector<VertexId>* pool = nullptr;
      if (mode_ == Mode::kScope) {
        if (view_->in_shell(u)) {
          pool = &view_->lower_core();
        } else if (view_->in_core(u)) {
          pool = &view_->shell();
        }
      } else {
        pool = view_->in_core(u) ? &view_->non_core() : &view_->all();
      }
      if (pool == nullptr) continue;
      auto first = std::upper_bound(pool->begin(), pool->end(), u);
      targets_ = std::span<const VertexId>(first, pool->end());
      auto adj = g_->neighbors(u);
      adjacency_ = std::span<const VertexId>(std::upper_bound(adj.begin(), adj.end(), u), adj.end());
      source_ = u;
      if (!targets_.empty()) return true;
    }
    return false;
  }

  const Graph* g_;
  const CoreView* view_;
  Mode mode_;
  std::size_t next_source_;
  std::size_t stride_;
  VertexId source_ = 0;
  std::span<const VertexId> targets_;
  std::span<const VertexId> adjacency_;
};

/// Every candidate that can gain followers in one step, in ascending order.
inline std::vector<CandidateEdge> scope_filter(const Graph& g, std::size_t k) {
  CoreView view(g, k);
  CandidateStream stream(g, view, CandidateStream::Mode::kScope);
  std::vector<CandidateEdge> out;
  while (auto e = stream.next()) out.push_back(*e);
  return out;
}

/// Onion-layer test: the lower-layer endpoint must already see k-1 survivors above it;
/// on equal layers both endpoints must. k-core endpoints count as the top layer and carry
/// no requirement.
inline bool passes_layer_filter(const OnionLayers& layers, CandidateEdge e) {
  const std::uint32_t lu = layers.layer[e.u];
  const std::uint32_t lv = layers.layer[e.v];
  if (lu == OnionLayers::kOutside || lv == OnionLayers::kOutside) return false;
  const std::uint32_t need = static_cast<std::uint32_t>(layers.k - 1);
  if (lu < lv) return layers.dstar[e.u] == need;
  if (lv < lu) return layers.dstar[e.v] == need;
  if (lu == OnionLayers::kCoreLayer) return false;
  return layers.dstar[e.u] == need && layers.dstar[e.v] == need;
}

inline std::vector<CandidateEdge> layer_filter(std::span<const CandidateEdge> candidates,
                                               const OnionLayers& layers) {
  std::vector<CandidateEdge> out;
  for (const CandidateEdge& e : candidates) {
    if (passes_layer_filter(layers, e)) out.push_back(e);
  }
  return out;
}

/// Follower-subsumption pruning index.
///
/// After a candidate e1 is evaluated with follower set F1, any candidate (u, v) with
/// u in F1 and v in F1 or the k-core has a follower set contained in F1. The index
/// records F1 per evaluated candidate and answers that test for later candidates.
class SubsumptionIndex {
 public:
  struct Hit {
    CandidateEdge by;
    std::uint32_t bound = 0;
    /// True if some subsuming candidate carries the queried tag.
    bool same_tag = false;
  };

  explicit SubsumptionIndex(std::size_t n = 0) : groups_of_(n) {}

  void add(CandidateEdge e1, std::span<const VertexId> followers, std::int64_t tag = -1) {
    if (followers.empty()) return;
    const auto id = static_cast<std::uint32_t>(sources_.size());
    sources_.push_back({e1, static_cast<std::uint32_t>(followers.size()), tag});
    for (VertexId x : followers) {
      if (groups_of_[x].empty()) touched_.push_back(x);
      groups_of_[x].push_back(id);
    }
  }

  /// `in_core(x)` reports k-core membership on the current graph.
  template <typename CorePredicate>
  std::optional<Hit> find(CandidateEdge e, CorePredicate&& in_core, std::int64_t tag = -1) const {
    const auto& gu = groups_of_[e.u];
    const auto& gv = groups_of_[e.v];
    std::optional<Hit> hit;
    auto consider = [&](std::uint32_t id) {
      const Source& s = sources_[id];
      if (!hit) hit = Hit{s.edge, s.bound, false};
      if (s.tag == tag && !hit->same_tag) *hit = Hit{s.edge, s.bound, true};
    };
    if (in_core(e.u) || in_core(e.v)) {
      for (std::uint32_t id : in_core(e.u) ? gv : gu) consider(id);
      return hit;
    }
    auto a = gu.begin();
    auto b = gv.begin();
    while (a != gu.end() && b != gv.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        consider(*a);
        ++a;
        ++b;
      }
    }
    return hit;
  }

  void clear() {
    for (VertexId x : touched_) groups_of_[x].clear();
    touched_.clear();
    sources_.clear();
  }

  std::size_t size() const noexcept { return sources_.size(); }

 private:
  struct Source {
    CandidateEdge edge;
    std::uint32_t bound;
    std::int64_t tag;
  };

  std::vector<std::vector<std::uint32_t>> groups_of_;
  std::vector<VertexId> touched_;
  std::vector<Source> sources_;
};

}  // namespace ekc
