#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "ekc/candidates.hpp"
#include "ekc/followers.hpp"
#include "ekc/graph.hpp"
#include "ekc/onion.hpp"

namespace ekc {

using AnchorSet = std::vector<CandidateEdge>;

enum class Algorithm { kNaive, kBaseline, kBlO1, kBlO2, kBlOF, kEkc, kExact, kRand, kDegree, kLayer };

inline constexpr std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kNaive: return "naive";
    case Algorithm::kBaseline: return "baseline";
    case Algorithm::kBlO1: return "bl+o1";
    case Algorithm::kBlO2: return "bl+o2";
    case Algorithm::kBlOF: return "bl+of";
    case Algorithm::kEkc: return "ekc";
    case Algorithm::kExact: return "exact";
    case Algorithm::kRand: return "rand";
    case Algorithm::kDegree: return "degree";
    case Algorithm::kLayer: return "layer";
  }
  return "?";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kNaive, Algorithm::kBaseline, Algorithm::kBlO1, Algorithm::kBlO2,
                      Algorithm::kBlOF, Algorithm::kEkc, Algorithm::kExact, Algorithm::kRand,
                      Algorithm::kDegree, Algorithm::kLayer}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

/// The greedy ladder variants, in order of added techniques.
inline constexpr Algorithm kGreedyLadder[] = {Algorithm::kNaive, Algorithm::kBaseline,
                                              Algorithm::kBlO1,  Algorithm::kBlO2,
                                              Algorithm::kBlOF,  Algorithm::kEkc};

/// Which optimizations a greedy variant applies.
struct Techniques {
  bool scope = false;        // restrict to (k-1)-shell x (k-1)-core pairs
  bool layer = false;        // onion-layer d* filter
  bool subsumption = false;  // follower-subsumption pruning
  bool layered = false;      // onion-layer follower computation instead of re-peeling
  bool reuse = false;        // per-component result reuse across iterations

  static Techniques for_algorithm(Algorithm a) {
    switch (a) {
      case Algorithm::kNaive: return {};
      case Algorithm::kBaseline: return {true};
      case Algorithm::kBlO1: return {true, true};
      case Algorithm::kBlO2: return {true, true, true};
      case Algorithm::kBlOF: return {true, true, true, true};
      case Algorithm::kEkc: return {true, true, true, true, true};
      default: throw std::invalid_argument("not a greedy algorithm: " + std::string(to_string(a)));
    }
  }
};

enum class ExactMode { kSound, kFiltered };

inline constexpr std::string_view to_string(ExactMode m) {
  return m == ExactMode::kSound ? "sound" : "filtered";
}

struct SolverOptions {
  Algorithm algo = Algorithm::kEkc;
  std::size_t k = 3;
  std::size_t b = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  /// Anchor the smallest scope candidate when no candidate has followers, instead of stopping.
  bool spend_budget = false;
  ExactMode exact_mode = ExactMode::kSound;
  std::uint64_t exact_limit = 10'000'000;
  /// Greedy runs throw DeadlineExceeded once this passes.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct IterationReport {
  std::size_t iteration = 0;
  std::optional<CandidateEdge> edge;
  std::size_t followers = 0;
  std::size_t non_endpoint_followers = 0;
  std::vector<VertexId> follower_ids;
  /// k-core size after this iteration's anchor.
  std::size_t core_size = 0;
  CandidateCounters counters;
  double ms = 0.0;
};

struct SolveResult {
  AnchorSet anchors;
  std::vector<IterationReport> iterations;
  std::size_t initial_core_size = 0;
  std::size_t final_core_size = 0;
  /// A greedy iteration found no candidate with followers and the budget was left unspent.
  bool stopped_early = false;
  /// Baselines: fewer than b anchors were available.
  bool short_of_budget = false;
  double total_ms = 0.0;

  std::size_t total_followers() const noexcept { return final_core_size - initial_core_size; }

  std::vector<std::size_t> follower_sequence() const {
    std::vector<std::size_t> out;
    for (const auto& it : iterations) {
      if (it.edge) out.push_back(it.followers);
    }
    return out;
  }
};

/// Per-component best results of the (k-1)-shell, kept across greedy iterations.
///
/// An entry is keyed by its component's smallest vertex and holds the best candidate among
/// pairs inside the component or between the component and a k-core vertex that was
/// already in the core at the entry's epoch. The epoch counts applied anchors.
class ComponentCache {
 public:
  struct Entry {
    std::vector<VertexId> vertices;
    std::uint32_t epoch = 0;
    std::uint32_t best_count = 0;
    std::optional<CandidateEdge> best_edge;
  };

  explicit ComponentCache(std::size_t n = 0) : core_epoch_(n, 0) {}

  std::uint32_t epoch() const noexcept { return epoch_; }
  std::size_t size() const noexcept { return entries_.size(); }

  const Entry* lookup(std::span<const VertexId> component) const {
    if (component.empty()) return nullptr;
    auto it = entries_.find(component.front());
    if (it == entries_.end()) return nullptr;
    const auto& vs = it->second.vertices;
    if (!std::equal(vs.begin(), vs.end(), component.begin(), component.end())) return nullptr;
    return &it->second;
  }

  /// True if the pair (shell vertex, core vertex) was already covered by `entry`.
  bool covers(const Entry& entry, VertexId core_vertex) const noexcept {
    return core_epoch_[core_vertex] <= entry.epoch;
  }

  void store(std::vector<VertexId> component, std::uint32_t best_count,
             std::optional<CandidateEdge> best_edge) {
    const VertexId key = component.front();
    entries_[key] = Entry{std::move(component), epoch_, best_count, best_edge};
  }

  /// Marks an anchor application: followers join the core at the next epoch.
  void advance(std::span<const VertexId> new_core_vertices) {
    ++epoch_;
    for (VertexId v : new_core_vertices) core_epoch_[v] = epoch_;
  }

  template <typename Predicate>
  void erase_if(Predicate&& drop) {
    std::erase_if(entries_, [&](const auto& kv) { return drop(kv.second); });
  }

  const std::map<VertexId, Entry>& entries() const noexcept { return entries_; }

 private:
  std::map<VertexId, Entry> entries_;
  std::vector<std::uint32_t> core_epoch_;
  std::uint32_t epoch_ = 0;
};

/// Call after applying `last_anchor` to obtain `g_after`. Drops entries whose component
/// changed, touches the anchor, or lost vertices to the new followers.
inline void cache_update(ComponentCache& cache, const Graph& g_after, std::size_t k,
                         CandidateEdge last_anchor, std::span<const VertexId> new_followers) {
  cache.advance(new_followers);
  const CoreView view(g_after, k);
  const VertexSet shell = VertexSet::from(g_after.vertex_count(), view.shell());
  std::map<VertexId, std::vector<VertexId>> components;
  for (auto& comp : induced_components(g_after, shell)) {
    VertexId key = comp.front();
    components.emplace(key, std::move(comp));
  }
  const VertexSet followers = VertexSet::from(g_after.vertex_count(), new_followers);
  cache.erase_if([&](const ComponentCache::Entry& entry) {
    for (VertexId x : entry.vertices) {
      if (last_anchor.touches(x) || followers.contains(x)) return true;
    }
    auto it = components.find(entry.vertices.front());
    return it == components.end() || it->second != entry.vertices;
  });
}

/// Outcome of one greedy iteration on the current graph.
struct IterationOutcome {
  /// Best candidate with at least one follower; empty if none exists.
  std::optional<CandidateEdge> best_edge;
  std::uint32_t best_count = 0;
  /// Smallest candidate in scope, for budget spending when nothing has followers.
  std::optional<CandidateEdge> first_scope_candidate;
  CandidateCounters counters;
};

namespace detail {

struct Scored {
  std::uint32_t count = 0;
  std::optional<CandidateEdge> edge;

  /// Larger follower count wins; ties go to the smaller edge.
  void offer(std::uint32_t c, CandidateEdge e) {
    if (!edge || c > count || (c == count && e < *edge)) {
      count = c;
      edge = e;
    }
  }
  void offer(const Scored& o) {
    if (o.edge) offer(o.count, *o.edge);
  }
};

struct WorkerState {
  CandidateCounters counters;
  std::uint64_t streamed = 0;
  Scored best;
  std::vector<Scored> class_best;
  std::vector<std::uint8_t> tainted;
  std::exception_ptr error;
};

inline void check_deadline(const std::optional<std::chrono::steady_clock::time_point>& deadline) {
  if (deadline && std::chrono::steady_clock::now() > *deadline) throw DeadlineExceeded();
}

}  // namespace detail

/// One greedy iteration on `current` (the input graph with all anchors applied).
///
/// Candidates are streamed in ascending order and passed through the enabled filters;
/// survivors are evaluated and the best kept by (most followers, smallest edge). With
/// `threads > 1` the stream is split by source vertex; each worker prunes only with
/// candidates it evaluated itself, so the selected edge matches the serial result.
inline IterationOutcome run_greedy_iteration(
    const Graph& current, std::size_t k, const Techniques& tech, unsigned threads = 1,
    ComponentCache* cache = nullptr,
    std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  detail::check_deadline(deadline);
  const std::size_t n = current.vertex_count();
  const CoreView view(current, k);
  const bool reuse = tech.reuse && cache != nullptr;

  IterationOutcome outcome;
  {
    CandidateStream first(current, view, CandidateStream::Mode::kScope);
    outcome.first_scope_candidate = first.next();
  }

  std::optional<OnionLayers> layers;
  if (tech.layer || tech.layered) layers = build_onion_layers(current, k);

  // Shell components and cache lookups for result reuse.
  std::vector<std::vector<VertexId>> components;
  std::vector<std::int64_t> component_of(reuse ? n : 0, -1);
  std::vector<const ComponentCache::Entry*> cached;
  if (reuse) {
    components = induced_components(current, VertexSet::from(n, view.shell()));
    cached.resize(components.size(), nullptr);
    for (std::size_t c = 0; c < components.size(); ++c) {
      for (VertexId x : components[c]) component_of[x] = static_cast<std::int64_t>(c);
      cached[c] = cache->lookup(components[c]);
    }
  }
  auto class_of = [&](CandidateEdge e) -> std::int64_t {
    const bool su = view.in_shell(e.u);
    const bool sv = view.in_shell(e.v);
    if (su && sv) return component_of[e.u] == component_of[e.v] ? component_of[e.u] : -1;
    return su ? component_of[e.u] : component_of[e.v];
  };
  auto covered = [&](CandidateEdge e, std::int64_t cls) {
    if (cls < 0 || cached[cls] == nullptr) return false;
    if (view.in_core(e.u)) return cache->covers(*cached[cls], e.u);
    if (view.in_core(e.v)) return cache->covers(*cached[cls], e.v);
    return true;
  };
  auto in_core = [&](VertexId x) { return view.in_core(x); };

  const auto mode = tech.scope ? CandidateStream::Mode::kScope : CandidateStream::Mode::kUnpruned;
  const unsigned workers = std::max(1u, threads);
  std::vector<detail::WorkerState> states(workers);
  std::atomic<bool> abort{false};

  auto work = [&](unsigned w) {
    detail::WorkerState& st = states[w];
    try {
      if (reuse) {
        st.class_best.resize(components.size());
        st.tainted.assign(components.size(), 0);
      }
      std::optional<FollowerOracle> oracle;
      std::optional<LayeredFollowerFinder> layered;
      if (tech.layered) {
        layered.emplace(current, *layers);
      } else {
        oracle.emplace(current, k);
      }
      SubsumptionIndex index(tech.subsumption ? n : 0);
      CandidateStream stream(current, view, mode, w, workers);
      while (auto next = stream.next()) {
        const CandidateEdge e = *next;
        if ((++st.streamed & 0x3ff) == 0) {
          if (abort.load(std::memory_order_relaxed)) return;
          detail::check_deadline(deadline);
        }
        if (tech.layer && !passes_layer_filter(*layers, e)) {
          ++st.counters.pruned_layer;
          continue;
        }
        const std::int64_t cls = reuse ? class_of(e) : -1;
        if (reuse && covered(e, cls)) {
          ++st.counters.reused;
          continue;
        }
        if (tech.subsumption) {
          if (auto hit = index.find(e, in_core, cls)) {
            ++st.counters.pruned_subsumption;
            if (reuse && cls >= 0 && !hit->same_tag) st.tainted[cls] = 1;
            continue;
          }
        }
        FollowerResult r = tech.layered ? (*layered)(e) : (*oracle)(e);
        ++st.counters.evaluated;
        const auto count = static_cast<std::uint32_t>(r.count());
        if (count > 0) st.best.offer(count, e);
        if (reuse && cls >= 0 && count > 0) st.class_best[cls].offer(count, e);
        if (tech.subsumption) index.add(e, r.followers, cls);
      }
    } catch (...) {
      st.error = std::current_exception();
      abort = true;
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto& st : states) {
    if (st.error) std::rethrow_exception(st.error);
  }

  detail::Scored best;
  std::uint64_t streamed = 0;
  for (const auto& st : states) {
    best.offer(st.best);
    outcome.counters += st.counters;
    streamed += st.streamed;
  }

  if (reuse) {
    for (std::size_t c = 0; c < components.size(); ++c) {
      detail::Scored local;
      bool tainted = false;
      for (const auto& st : states) {
        local.offer(st.class_best[c]);
        tainted = tainted || st.tainted[c] != 0;
      }
      if (cached[c] != nullptr && cached[c]->best_edge) {
        local.offer(cached[c]->best_count, *cached[c]->best_edge);
      }
      best.offer(local);
      if (!tainted) cache->store(components[c], local.count, local.edge);
    }
  }

  const std::uint64_t universe = unpruned_candidate_count(current, view);
  outcome.counters.produced = universe;
  outcome.counters.pruned_scope = universe - streamed;

  if (best.edge && best.count > 0) {
    outcome.best_edge = best.edge;
    outcome.best_count = best.count;
  }
  return outcome;
}

/// One greedy iteration on G + A with the techniques of `opts.algo`.
inline IterationOutcome greedy_iteration(const Graph& g, std::span<const CandidateEdge> anchors,
                                         std::size_t k, const SolverOptions& opts) {
  const Graph current = add_edges(g, anchors);
  return run_greedy_iteration(current, k, Techniques::for_algorithm(opts.algo), opts.threads,
                              nullptr, opts.deadline);
}

namespace detail {

inline std::vector<VertexId> new_members(const VertexSet& before, const VertexSet& after) {
  std::vector<VertexId> out;
  for (VertexId v : after.members()) {
    if (!before.contains(v)) out.push_back(v);
  }
  return out;
}

inline void validate_kb(std::size_t k, std::size_t b) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (b < 1) throw std::invalid_argument("budget b must be at least 1");
}

inline double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

}  // namespace detail

/// Greedy edge k-core maximization with the techniques selected by `opts.algo`.
/// Every ladder variant returns the same anchors; only the work done differs.
inline SolveResult solve_ekc(const Graph& g, std::size_t k, std::size_t b,
                             const SolverOptions& opts) {
  detail::validate_kb(k, b);
  const Techniques tech = Techniques::for_algorithm(opts.algo);
  const auto run_start = std::chrono::steady_clock::now();

  SolveResult result;
  Graph current = g;
  VertexSet core = compute_k_core(current, k);
  result.initial_core_size = core.size();
  ComponentCache cache(g.vertex_count());

  for (std::size_t iteration = 1; iteration <= b; ++iteration) {
    const auto start = std::chrono::steady_clock::now();
    IterationOutcome out = run_greedy_iteration(current, k, tech, opts.threads,
                                                tech.reuse ? &cache : nullptr, opts.deadline);
    IterationReport report;
    report.iteration = iteration;
    report.counters = out.counters;

    std::optional<CandidateEdge> chosen = out.best_edge;
    if (!chosen && opts.spend_budget) chosen = out.first_scope_candidate;
    if (!chosen) {
      report.core_size = core.size();
      report.ms = detail::elapsed_ms(start);
      result.iterations.push_back(std::move(report));
      result.stopped_early = true;
      break;
    }

    const CandidateEdge anchor[] = {*chosen};
    Graph next = add_edges(current, anchor);
    VertexSet next_core = compute_k_core(next, k);
    std::vector<VertexId> followers = detail::new_members(core, next_core);
    if (out.best_edge && followers.size() != out.best_count) {
      throw std::logic_error("follower count of the selected anchor changed on application");
    }
    if (tech.reuse) cache_update(cache, next, k, *chosen, followers);

    report.edge = *chosen;
    report.followers = followers.size();
    report.non_endpoint_followers = FollowerResult{*chosen, followers}.non_endpoint_count();
    report.follower_ids = std::move(followers);
    report.core_size = next_core.size();
    report.ms = detail::elapsed_ms(start);
    result.anchors.push_back(*chosen);
    result.iterations.push_back(std::move(report));

    current = std::move(next);
    core = std::move(next_core);
  }
  result.final_core_size = core.size();
  result.total_ms = detail::elapsed_ms(run_start);
  return result;
}

/// Greedy with full re-peeling of every non-edge outside the k-core.
inline SolveResult solve_naive(const Graph& g, std::size_t k, std::size_t b) {
  SolverOptions opts;
  opts.algo = Algorithm::kNaive;
  return solve_ekc(g, k, b, opts);
}

/// k-core growth from inserting all of `anchors` at once.
inline std::size_t anchor_set_followers(const Graph& g, std::size_t k,
                                        std::span<const CandidateEdge> anchors) {
  const std::size_t before = compute_k_core(g, k).size();
  return detail::peel_k_core(g, k, anchors).size() - before;
}

/// Per-anchor marginal reports for a fixed anchor sequence (baselines and exact).
inline SolveResult replay_anchors(const Graph& g, std::size_t k, const AnchorSet& anchors) {
  SolveResult result;
  Graph current = g;
  VertexSet core = compute_k_core(current, k);
  result.initial_core_size = core.size();
  std::size_t iteration = 0;
  for (const CandidateEdge& e : anchors) {
    const CandidateEdge one[] = {e};
    Graph next = add_edges(current, one);
    VertexSet next_core = compute_k_core(next, k);
    IterationReport report;
    report.iteration = ++iteration;
    report.edge = e;
    report.follower_ids = detail::new_members(core, next_core);
    report.followers = report.follower_ids.size();
    report.non_endpoint_followers = FollowerResult{e, report.follower_ids}.non_endpoint_count();
    report.core_size = next_core.size();
    result.iterations.push_back(std::move(report));
    current = std::move(next);
    core = std::move(next_core);
  }
  result.anchors = anchors;
  result.final_core_size = core.size();
  return result;
}

struct ExactResult {
  AnchorSet anchors;
  std::size_t followers = 0;
  std::uint64_t combinations = 0;
  std::size_t pool_size = 0;
};

namespace detail {

/// C(n, r), saturating at `cap + 1`.
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t r, std::uint64_t cap) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace detail

/// Exhaustive search over all b-subsets of a candidate pool.
///
/// kSound enumerates every non-edge of g. kFiltered enumerates only single-edge scope and
/// onion-layer survivors; multi-edge combinations can lift vertices those filters exclude,
/// so filtered mode can miss the optimum. Ties go to the lexicographically smallest set.
inline ExactResult solve_exact(const Graph& g, std::size_t k, std::size_t b, ExactMode mode,
                               std::uint64_t limit) {
  detail::validate_kb(k, b);
  std::vector<CandidateEdge> pool;
  if (mode == ExactMode::kSound) {
    const std::size_t n = g.vertex_count();
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (!g.has_edge(u, v)) pool.emplace_back(u, v);
      }
    }
  } else {
    pool = layer_filter(scope_filter(g, k), build_onion_layers(g, k));
  }

  ExactResult result;
  result.pool_size = pool.size();
  const std::size_t r = std::min(b, pool.size());
  const std::uint64_t total = detail::binomial_capped(pool.size(), r, limit);
  if (total > limit) throw EnumerationLimitExceeded(limit, total);
  if (r == 0) return result;

  const std::size_t base = compute_k_core(g, k).size();
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  std::vector<CandidateEdge> chosen(r);
  bool have = false;
  while (true) {
    for (std::size_t i = 0; i < r; ++i) chosen[i] = pool[idx[i]];
    const std::size_t gain = detail::peel_k_core(g, k, chosen).size() - base;
    ++result.combinations;
    if (!have || gain > result.followers) {
      have = true;
      result.followers = gain;
      result.anchors = chosen;
    }
    // Next combination in lexicographic order.
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == pool.size() - r + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return result;
}

struct BaselineResult {
  AnchorSet anchors;
  bool short_of_budget = false;
};

namespace detail {

inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound) {
  const std::uint64_t range = bound;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % range);
}

inline BaselineResult top_b(std::vector<std::pair<std::int64_t, CandidateEdge>> scored,
                            std::size_t b) {
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& c) {
    return a.first != c.first ? a.first > c.first : a.second < c.second;
  });
  BaselineResult out;
  for (std::size_t i = 0; i < scored.size() && out.anchors.size() < b; ++i) {
    out.anchors.push_back(scored[i].second);
  }
  out.short_of_budget = out.anchors.size() < b;
  return out;
}

}  // namespace detail

/// Random scope candidates, each with at least one follower on the input graph.
inline BaselineResult baseline_rand(const Graph& g, std::size_t k, std::size_t b,
                                    std::uint64_t seed) {
  detail::validate_kb(k, b);
  std::vector<CandidateEdge> pool = scope_filter(g, k);
  std::mt19937_64 rng(seed);
  for (std::size_t i = pool.size(); i > 1; --i) {
    std::swap(pool[i - 1], pool[detail::uniform_index(rng, i)]);
  }
  const FollowerOracle oracle(g, k);
  BaselineResult out;
  for (const CandidateEdge& e : pool) {
    if (out.anchors.size() == b) break;
    if (oracle(e).count() > 0) out.anchors.push_back(e);
  }
  out.short_of_budget = out.anchors.size() < b;
  return out;
}

/// Scope candidates ranked by the sum of endpoint degrees inside the (k-1)-core.
inline BaselineResult baseline_degree(const Graph& g, std::size_t k, std::size_t b) {
  detail::validate_kb(k, b);
  const CoreView view(g, k);
  std::vector<std::int64_t> deg(g.vertex_count(), 0);
  for (VertexId u : view.lower_core()) {
    for (VertexId w : g.neighbors(u)) {
      if (view.in_lower_core(w)) ++deg[u];
    }
  }
  std::vector<std::pair<std::int64_t, CandidateEdge>> scored;
  for (const CandidateEdge& e : scope_filter(g, k)) scored.emplace_back(deg[e.u] + deg[e.v], e);
  return detail::top_b(std::move(scored), b);
}

/// Scope candidates ranked by the highest onion layer among their shell endpoints.
inline BaselineResult baseline_layer(const Graph& g, std::size_t k, std::size_t b) {
  detail::validate_kb(k, b);
  const OnionLayers layers = build_onion_layers(g, k);
  std::vector<std::pair<std::int64_t, CandidateEdge>> scored;
  for (const CandidateEdge& e : scope_filter(g, k)) {
    std::int64_t score = 0;
    for (VertexId x : {e.u, e.v}) {
      if (layers.in_shell(x)) score = std::max<std::int64_t>(score, layers.layer[x]);
    }
    scored.emplace_back(score, e);
  }
  return detail::top_b(std::move(scored), b);
}

/// Dispatches on `opts.algo` and returns per-anchor reports for every algorithm family.
inline SolveResult solve(const Graph& g, const SolverOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult result;
  switch (opts.algo) {
    case Algorithm::kExact: {
      ExactResult ex = solve_exact(g, opts.k, opts.b, opts.exact_mode, opts.exact_limit);
      result = replay_anchors(g, opts.k, ex.anchors);
      break;
    }
    case Algorithm::kRand:
    case Algorithm::kDegree:
    case Algorithm::kLayer: {
      BaselineResult base = opts.algo == Algorithm::kRand
                                ? baseline_rand(g, opts.k, opts.b, opts.seed)
                            : opts.algo == Algorithm::kDegree ? baseline_degree(g, opts.k, opts.b)
                                                              : baseline_layer(g, opts.k, opts.b);
      result = replay_anchors(g, opts.k, base.anchors);
      result.short_of_budget = base.short_of_budget;
      break;
    }
    default:
      return solve_ekc(g, opts.k, opts.b, opts);
  }
  result.total_ms = detail::elapsed_ms(start);
  return result;
}

}  // namespace ekc
