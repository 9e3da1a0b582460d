#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <thread>

#include "ekc/solver.hpp"
#include "json.hpp"

namespace ekc {

using Json = nlohmann::ordered_json;

inline Json counters_json(const CandidateCounters& c) {
  return Json{{"produced", c.produced},
              {"pruned_thm4_scope", c.pruned_scope},
              {"pruned_thm5", c.pruned_layer},
              {"pruned_thm6", c.pruned_subsumption},
              {"evaluated", c.evaluated},
              {"reused", c.reused}};
}

inline Json options_json(const SolverOptions& o) {
  return Json{{"algo", std::string(to_string(o.algo))},
              {"k", o.k},
              {"b", o.b},
              {"seed", o.seed},
              {"threads", o.threads},
              {"spend_budget", o.spend_budget},
              {"exact_mode", std::string(to_string(o.exact_mode))},
              {"exact_limit", o.exact_limit}};
}

inline Json environment_json() {
  return Json{{"compiler", __VERSION__},
              {"cxx", static_cast<long>(__cplusplus)},
              {"hardware_threads", std::thread::hardware_concurrency()}};
}

/// Schema-stable run report. Edges and followers are given by original vertex label.
inline Json run_report_json(const Graph& g, const SolverOptions& opts, const SolveResult& r,
                            const std::string& input, bool verbose) {
  Json config = options_json(opts);
  config["input"] = input;

  Json iterations = Json::array();
  for (const IterationReport& it : r.iterations) {
    Json row;
    row["iter"] = it.iteration;
    row["edge"] = it.edge ? Json::array({g.label(it.edge->u), g.label(it.edge->v)}) : Json(nullptr);
    row["followers"] = it.followers;
    row["non_endpoint_followers"] = it.non_endpoint_followers;
    row["core_size"] = it.core_size;
    row["counters"] = counters_json(it.counters);
    row["ms"] = it.ms;
    if (verbose) {
      Json ids = Json::array();
      for (VertexId v : it.follower_ids) ids.push_back(g.label(v));
      row["follower_ids"] = std::move(ids);
    }
    iterations.push_back(std::move(row));
  }

  Json anchors = Json::array();
  for (const CandidateEdge& e : r.anchors) anchors.push_back({g.label(e.u), g.label(e.v)});

  Json report;
  report["config"] = std::move(config);
  report["graph"] = Json{{"n", g.vertex_count()}, {"m", g.edge_count()}};
  report["initial_core_size"] = r.initial_core_size;
  report["iterations"] = std::move(iterations);
  report["anchors"] = std::move(anchors);
  report["totals"] = Json{{"anchors", r.anchors.size()},
                          {"followers", r.total_followers()},
                          {"core_size", r.final_core_size},
                          {"stopped_early", r.stopped_early},
                          {"short_of_budget", r.short_of_budget},
                          {"ms", r.total_ms}};
  report["environment"] = environment_json();
  return report;
}

inline constexpr const char* kIterationCsvHeader =
    "iter,edge_u,edge_v,followers,core_size,produced,pruned4,pruned5,pruned6,evaluated,ms";

inline void write_iterations_csv(std::ostream& out, const Graph& g, const SolveResult& r) {
  out << kIterationCsvHeader << '\n';
  for (const IterationReport& it : r.iterations) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", it.ms);
    out << it.iteration << ',';
    if (it.edge) {
      out << g.label(it.edge->u) << ',' << g.label(it.edge->v);
    } else {
      out << ',';
    }
    const CandidateCounters& c = it.counters;
    out << ',' << it.followers << ',' << it.core_size << ',' << c.produced << ','
        << c.pruned_scope << ',' << c.pruned_layer << ',' << c.pruned_subsumption << ','
        << c.evaluated << ',' << ms << '\n';
  }
}

}  // namespace ekc
