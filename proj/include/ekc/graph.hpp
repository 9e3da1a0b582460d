#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ekc/errors.hpp"

namespace ekc {

using VertexId = std::uint32_t;
using Label = std::int64_t;

/// An unordered vertex pair stored with `u < v`. Used for anchors and candidate non-edges.
struct CandidateEdge {
  VertexId u = 0;
  VertexId v = 0;

  constexpr CandidateEdge() = default;
  constexpr CandidateEdge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool touches(VertexId x) const noexcept { return x == u || x == v; }
  constexpr VertexId other(VertexId x) const noexcept { return x == u ? v : u; }

  friend constexpr auto operator<=>(const CandidateEdge&, const CandidateEdge&) = default;
};

/// Membership over dense vertex ids with a cached cardinality.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, 0) {}

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(VertexId v) const noexcept { return v < bits_.size() && bits_[v] != 0; }

  void insert(VertexId v) {
    if (bits_[v] == 0) {
      bits_[v] = 1;
      ++count_;
    }
  }

  void erase(VertexId v) {
    if (bits_[v] != 0) {
      bits_[v] = 0;
      --count_;
    }
  }

  /// Members in ascending order.
  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    out.reserve(count_);
    for (VertexId v = 0; v < bits_.size(); ++v) {
      if (bits_[v] != 0) out.push_back(v);
    }
    return out;
  }

  static VertexSet from(std::size_t universe, std::span<const VertexId> ids) {
    VertexSet s(universe);
    for (VertexId v : ids) s.insert(v);
    return s;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.count_ == b.count_ && a.bits_ == b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t count_ = 0;
};

/// Simple undirected graph in compressed sparse row form.
///
/// Vertex ids are dense in [0, n). Every adjacency list is strictly increasing and
/// symmetric, so there are no self-loops or parallel edges. The original input label of
/// each vertex is kept for reporting.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds a graph from an arbitrary edge list. Self-loops and duplicates are dropped.
  /// If `labels` is empty the identity labelling is used.
  static Graph from_edges(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges,
                          std::vector<Label> labels = {}) {
    std::vector<std::vector<VertexId>> adj(n);
    for (auto [a, b] : edges) {
      if (a == b) continue;
      if (a >= n || b >= n) throw std::out_of_range("edge endpoint out of range");
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (std::size_t u = 0; u < n; ++u) {
      auto& list = adj[u];
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      g.offsets_[u + 1] = g.offsets_[u] + list.size();
    }
    g.neighbors_.reserve(g.offsets_[n]);
    for (auto& list : adj) g.neighbors_.insert(g.neighbors_.end(), list.begin(), list.end());
    if (labels.empty()) {
      labels.resize(n);
      std::iota(labels.begin(), labels.end(), Label{0});
    }
    if (labels.size() != n) throw std::invalid_argument("label count does not match n");
    g.labels_ = std::move(labels);
    return g;
  }

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId u) const noexcept {
    return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
  }

  std::size_t degree(VertexId u) const noexcept { return offsets_[u + 1] - offsets_[u]; }

  bool has_edge(VertexId u, VertexId v) const noexcept {
    auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
  }

  Label label(VertexId u) const noexcept { return labels_[u]; }
  const std::vector<Label>& labels() const noexcept { return labels_; }

  /// Every edge once, as (u, v) with u < v, in ascending order.
  std::vector<CandidateEdge> edges() const {
    std::vector<CandidateEdge> out;
    out.reserve(edge_count());
    for (VertexId u = 0; u < vertex_count(); ++u) {
      for (VertexId v : neighbors(u)) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> neighbors_;
  std::vector<Label> labels_;
};

/// Reads a SNAP-style edge list: '#' comment lines, two integer labels per line,
/// separated by whitespace. Tokens after the second are ignored. Labels are remapped to
/// dense ids in order of first appearance; self-loops register the vertex but add no edge.
inline Graph parse_edge_list(std::istream& in) {
  std::unordered_map<Label, VertexId> ids;
  std::vector<Label> labels;
  std::vector<std::pair<VertexId, VertexId>> edges;

  auto intern = [&](Label label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  auto next_token = [](std::string_view& rest) {
    std::size_t begin = rest.find_first_not_of(" \t\r\v\f");
    if (begin == std::string_view::npos) {
      rest = {};
      return std::string_view{};
    }
    std::size_t end = rest.find_first_of(" \t\r\v\f", begin);
    if (end == std::string_view::npos) end = rest.size();
    std::string_view tok = rest.substr(begin, end - begin);
    rest.remove_prefix(end);
    return tok;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = line;
    std::size_t first = rest.find_first_not_of(" \t\r\v\f");
    if (first == std::string_view::npos || rest[first] == '#') continue;

    Label endpoints[2];
    for (Label& label : endpoints) {
      std::string_view tok = next_token(rest);
      if (tok.empty()) throw ParseError(line_no, "expected two vertex labels");
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), label);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line_no, "not an integer label: '" + std::string(tok) + "'");
      }
    }
    VertexId a = intern(endpoints[0]);
    VertexId b = intern(endpoints[1]);
    if (a != b) edges.emplace_back(a, b);
  }
  std::size_t n = labels.size();
  return Graph::from_edges(n, edges, std::move(labels));
}

/// Writes each edge once as "label_u label_v", in ascending dense-id order.
///
/// A self-loop line "x x" registers a vertex whenever first-appearance order would
/// otherwise differ from dense-id order, and for isolated vertices. Parsing the output
/// therefore reproduces the same dense ids, labels and vertex count.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint8_t> seen(n, 0);
  VertexId next = 0;  // every id below `next` has appeared
  auto reg = [&](VertexId x) {
    out << g.label(x) << ' ' << g.label(x) << '\n';
    seen[x] = 1;
  };
  auto settle = [&] {
    while (next < n && seen[next]) ++next;
  };
  for (VertexId u = 0; u < n; ++u) {
    while (next < u) {
      if (!seen[next]) reg(next);
      ++next;
    }
    auto adj = g.neighbors(u);
    auto hi = std::upper_bound(adj.begin(), adj.end(), u);
    if (hi == adj.end()) {
      if (!seen[u]) reg(u);
      settle();
      continue;
    }
    for (auto it = hi; it != adj.end(); ++it) {
      const VertexId v = *it;
      VertexId probe = std::max<VertexId>(next, u + 1);
      while (probe < v && seen[probe]) ++probe;
      if (probe < v) {
        if (!seen[u]) reg(u);
        for (VertexId x = probe; x < v; ++x) {
          if (!seen[x]) reg(x);
        }
      }
      out << g.label(u) << ' ' << g.label(v) << '\n';
      seen[u] = seen[v] = 1;
      settle();
    }
  }
}

/// Returns G + A. Every anchor must be a non-edge between distinct existing vertices.
inline Graph add_edges(const Graph& g, std::span<const CandidateEdge> anchors) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(g.edge_count() + anchors.size());
  for (const CandidateEdge& e : g.edges()) edges.emplace_back(e.u, e.v);
  for (const CandidateEdge& a : anchors) {
    if (a.u == a.v) throw InvalidAnchor("anchor is a self-loop");
    if (a.v >= g.vertex_count()) throw InvalidAnchor("anchor endpoint out of range");
    if (g.has_edge(a.u, a.v)) {
      throw InvalidAnchor("anchor (" + std::to_string(g.label(a.u)) + "," +
                          std::to_string(g.label(a.v)) + ") is already an edge");
    }
    edges.emplace_back(a.u, a.v);
  }
  std::vector<CandidateEdge> sorted(anchors.begin(), anchors.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidAnchor("duplicate anchor");
  }
  return Graph::from_edges(g.vertex_count(), edges, g.labels());
}

namespace detail {

/// Queue-based peeling of the k-core of g plus a few virtual extra edges.
/// The extra edges are assumed to be valid non-edges.
inline VertexSet peel_k_core(const Graph& g, std::size_t k, std::span<const CandidateEdge> extra) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  for (VertexId u = 0; u < n; ++u) deg[u] = g.degree(u);
  for (const CandidateEdge& e : extra) {
    ++deg[e.u];
    ++deg[e.v];
  }
  VertexSet alive(n);
  std::vector<VertexId> queue;
  for (VertexId u = 0; u < n; ++u) {
    if (deg[u] >= k) {
      alive.insert(u);
    } else {
      queue.push_back(u);
    }
  }
  auto drop = [&](VertexId w) {
    if (alive.contains(w) && --deg[w] < k) {
      alive.erase(w);
      queue.push_back(w);
    }
  };
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId x = queue[head];
    for (VertexId w : g.neighbors(x)) drop(w);
    for (const CandidateEdge& e : extra) {
      if (e.touches(x)) drop(e.other(x));
    }
  }
  return alive;
}

}  // namespace detail

/// Vertex set of the k-core: the maximal induced subgraph with minimum degree >= k.
inline VertexSet compute_k_core(const Graph& g, std::size_t k) {
  return detail::peel_k_core(g, k, {});
}

struct CoreDecomposition {
  std::vector<std::uint32_t> coreness;
  std::uint32_t k_max = 0;

  bool in_core(VertexId u, std::size_t k) const noexcept { return coreness[u] >= k; }
};

/// Bucket-based core decomposition in O(n + m).
inline CoreDecomposition core_decomposition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  CoreDecomposition out;
  out.coreness.assign(n, 0);
  if (n == 0) return out;

  std::size_t max_deg = 0;
  std::vector<std::size_t> deg(n);
  for (VertexId u = 0; u < n; ++u) {
    deg[u] = g.degree(u);
    max_deg = std::max(max_deg, deg[u]);
  }
  std::vector<std::size_t> bin(max_deg + 1, 0);
  for (std::size_t d : deg) ++bin[d];
  std::size_t start = 0;
  for (std::size_t d = 0; d <= max_deg; ++d) {
    std::size_t count = bin[d];
    bin[d] = start;
    start += count;
  }
  std::vector<VertexId> order(n);
  std::vector<std::size_t> pos(n);
  for (VertexId u = 0; u < n; ++u) {
    pos[u] = bin[deg[u]]++;
    order[pos[u]] = u;
  }
  for (std::size_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    VertexId u = order[i];
    out.coreness[u] = static_cast<std::uint32_t>(deg[u]);
    for (VertexId w : g.neighbors(u)) {
      if (deg[w] > deg[u]) {
        std::size_t dw = deg[w];
        std::size_t pw = pos[w];
        std::size_t pfirst = bin[dw];
        VertexId first = order[pfirst];
        if (first != w) {
          std::swap(order[pw], order[pfirst]);
          pos[w] = pfirst;
          pos[first] = pw;
        }
        ++bin[dw];
        --deg[w];
      }
    }
  }
  out.k_max = *std::max_element(out.coreness.begin(), out.coreness.end());
  return out;
}

/// H_k: vertices in the k-core but not in the (k+1)-core.
inline VertexSet k_shell(const Graph& g, std::size_t k) {
  VertexSet shell = compute_k_core(g, k);
  VertexSet upper = compute_k_core(g, k + 1);
  for (VertexId v : upper.members()) shell.erase(v);
  return shell;
}

/// Connected components of the induced subgraph G[s]. Each component is sorted, and
/// components are ordered by their smallest vertex.
inline std::vector<std::vector<VertexId>> induced_components(const Graph& g, const VertexSet& s) {
  std::vector<std::vector<VertexId>> out;
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (!s.contains(root) || seen[root]) continue;
    std::vector<VertexId> comp;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (VertexId w : g.neighbors(x)) {
        if (s.contains(w) && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

struct GraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  double d_avg = 0.0;
  std::uint32_t k_max = 0;
};

inline GraphStats graph_stats(const Graph& g) {
  GraphStats s;
  s.n = g.vertex_count();
  s.m = g.edge_count();
  s.d_avg = s.n == 0 ? 0.0 : 2.0 * static_cast<double>(s.m) / static_cast<double>(s.n);
  s.k_max = core_decomposition(g).k_max;
  return s;
}

}  // namespace ekc
