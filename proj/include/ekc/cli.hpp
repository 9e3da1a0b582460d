#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ekc/generators.hpp"
#include "ekc/report.hpp"
#include "ekc/solver.hpp"

namespace ekc {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitIo = 2,
  kExitMismatch = 3,
  kExitLimit = 4,
};

namespace cli_detail {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return parse_edge_list(in);
  } catch (const ParseError& e) {
    throw IoError(path + ": " + e.what());
  }
}

/// Writes to `path`, or to `fallback` when the path is empty or "-".
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& write) {
  if (path.empty() || path == "-") {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot write '" + path + "'");
  write(file);
  if (!file) throw IoError("write failed for '" + path + "'");
}

inline std::string edge_text(const Graph& g, CandidateEdge e) {
  return "(" + std::to_string(g.label(e.u)) + "," + std::to_string(g.label(e.v)) + ")";
}

/// "1,2;2,3,4;1,4" -> {{1,2},{2,3,4},{1,4}}
inline MCInstance parse_sets(const std::string& text, std::size_t elements) {
  MCInstance inst;
  std::stringstream sets(text);
  std::string set;
  std::size_t max_element = 0;
  while (std::getline(sets, set, ';')) {
    std::vector<std::size_t> members;
    std::stringstream items(set);
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.empty()) continue;
      std::size_t pos = 0;
      const unsigned long value = std::stoul(item, &pos);
      if (pos != item.size()) throw std::invalid_argument("bad element '" + item + "'");
      members.push_back(value);
      max_element = std::max<std::size_t>(max_element, value);
    }
    inst.sets.push_back(std::move(members));
  }
  inst.elements = elements ? elements : max_element;
  return inst;
}

}  // namespace cli_detail

/// Runs one CLI invocation. `args` excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
  using namespace cli_detail;

  CLI::App app{"Edge k-core maximization toolkit", "ekc"};
  app.require_subcommand(1);

  std::string file;
  std::size_t k = 3;
  std::size_t b = 1;

  // stats
  CLI::App* stats = app.add_subcommand("stats", "Print 'n m d_avg k_max' for an edge list");
  stats->add_option("file", file, "Edge-list file")->required();

  // solve
  CLI::App* solve_cmd = app.add_subcommand("solve", "Select b anchor edges");
  std::string algo_name = "ekc";
  std::string mode_name = "sound";
  std::string out_path;
  std::string csv_path;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool spend = false;
  bool verbose = false;
  double time_limit = 0.0;
  std::uint64_t limit = 10'000'000;
  solve_cmd->add_option("file", file, "Edge-list file")->required();
  solve_cmd->add_option("--k", k, "Core order")->required();
  solve_cmd->add_option("--b", b, "Anchor budget");
  solve_cmd->add_option("--algo", algo_name,
                        "naive|baseline|bl+o1|bl+o2|bl+of|ekc|exact|rand|degree|layer");
  solve_cmd->add_option("--seed", seed, "Seed for the rand baseline");
  solve_cmd->add_option("--threads", threads, "Worker threads per iteration")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--spend-budget", spend,
                      "Anchor the smallest scope candidate when nothing has followers");
  solve_cmd->add_option("--out", out_path, "JSON report path (default stdout)");
  solve_cmd->add_option("--csv", csv_path, "Per-iteration CSV path");
  solve_cmd->add_flag("--verbose", verbose, "Include follower ids in the report");
  solve_cmd->add_option("--time-limit", time_limit, "Give up after this many seconds");
  solve_cmd->add_option("--mode", mode_name, "Exact mode: sound|filtered");
  solve_cmd->add_option("--limit", limit, "Exact enumeration limit");

  // exact
  CLI::App* exact = app.add_subcommand("exact", "Exhaustive optimum over b-subsets");
  exact->add_option("file", file, "Edge-list file")->required();
  exact->add_option("--k", k, "Core order")->required();
  exact->add_option("--b", b, "Anchor budget");
  exact->add_option("--mode", mode_name, "sound|filtered");
  exact->add_option("--limit", limit, "Refuse when more combinations are needed");

  // gen
  CLI::App* gen = app.add_subcommand("gen", "Write a generated edge list");
  gen->require_subcommand(1);
  std::string gen_out;
  gen->add_option("--out", gen_out, "Output path (default stdout)");
  CLI::App* gen_er_cmd = gen->add_subcommand("er", "Erdos-Renyi G(n, p)");
  std::size_t n = 0;
  double p = 0.0;
  gen_er_cmd->add_option("--n", n, "Vertex count")->required();
  gen_er_cmd->add_option("--p", p, "Edge probability")->required();
  gen_er_cmd->add_option("--seed", seed, "Seed");
  gen_er_cmd->add_option("--out", gen_out, "Output path (default stdout)");
  CLI::App* gen_mc = gen->add_subcommand("mc", "Maximum-coverage reduction graph");
  std::string sets_text;
  std::size_t elements = 0;
  gen_mc->add_option("--sets", sets_text, "Sets as '1,2;2,3,4;1,4'")->required();
  gen_mc->add_option("--elements", elements, "Element count (default: largest element)");
  gen_mc->add_option("--k", k, "Core order");
  gen_mc->add_option("--out", gen_out, "Output path (default stdout)");
  CLI::App* gen_ns = gen->add_subcommand("nonsub", "Non-submodularity witness");
  gen_ns->add_option("--k", k, "Core order");
  gen_ns->add_option("--out", gen_out, "Output path (default stdout)");

  // layers
  CLI::App* layers_cmd = app.add_subcommand("layers", "Dump onion layers of the (k-1)-shell");
  layers_cmd->add_option("file", file, "Edge-list file")->required();
  layers_cmd->add_option("--k", k, "Core order")->required();

  // verify
  CLI::App* verify = app.add_subcommand("verify", "Cross-check layered followers against peeling");
  verify->add_option("file", file, "Edge-list file")->required();
  verify->add_option("--k", k, "Core order")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*stats) {
      const GraphStats s = graph_stats(load_graph(file));
      char avg[32];
      std::snprintf(avg, sizeof avg, "%.2f", s.d_avg);
      out << s.n << ' ' << s.m << ' ' << avg << ' ' << s.k_max << '\n';
      return kExitOk;
    }

    if (*solve_cmd) {
      const auto algo = parse_algorithm(algo_name);
      if (!algo) {
        err << "unknown algorithm '" << algo_name << "'\n";
        return kExitUsage;
      }
      if (mode_name != "sound" && mode_name != "filtered") {
        err << "unknown exact mode '" << mode_name << "'\n";
        return kExitUsage;
      }
      const Graph g = load_graph(file);
      SolverOptions opts;
      opts.algo = *algo;
      opts.k = k;
      opts.b = b;
      opts.seed = seed;
      opts.threads = threads;
      opts.spend_budget = spend;
      opts.exact_mode = mode_name == "sound" ? ExactMode::kSound : ExactMode::kFiltered;
      opts.exact_limit = limit;
      if (time_limit > 0) {
        opts.deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(time_limit));
      }
      const SolveResult r = solve(g, opts);
      const Json report = run_report_json(g, opts, r, file, verbose);
      emit(out_path, out, [&](std::ostream& os) { os << report.dump(2) << '\n'; });
      if (!csv_path.empty()) {
        emit(csv_path, out, [&](std::ostream& os) { write_iterations_csv(os, g, r); });
      }
      if (!out_path.empty() && out_path != "-") {
        out << "anchors:";
        for (const CandidateEdge& e : r.anchors) out << ' ' << edge_text(g, e);
        out << "\nfollowers: " << r.total_followers() << '\n';
      }
      return kExitOk;
    }

    if (*exact) {
      if (mode_name != "sound" && mode_name != "filtered") {
        err << "unknown exact mode '" << mode_name << "'\n";
        return kExitUsage;
      }
      const Graph g = load_graph(file);
      const ExactMode mode = mode_name == "sound" ? ExactMode::kSound : ExactMode::kFiltered;
      const auto start = std::chrono::steady_clock::now();
      const ExactResult r = solve_exact(g, k, b, mode, limit);
      Json anchors = Json::array();
      for (const CandidateEdge& e : r.anchors) anchors.push_back({g.label(e.u), g.label(e.v)});
      const Json report{{"config", {{"input", file}, {"k", k}, {"b", b}, {"mode", mode_name},
                                    {"limit", limit}}},
                        {"graph", {{"n", g.vertex_count()}, {"m", g.edge_count()}}},
                        {"anchors", anchors},
                        {"followers", r.followers},
                        {"pool_size", r.pool_size},
                        {"combinations", r.combinations},
                        {"ms", detail::elapsed_ms(start)}};
      out << report.dump(2) << '\n';
      return kExitOk;
    }

    if (*gen) {
      if (*gen_er_cmd) {
        const Graph g = gen_er(n, p, seed);
        emit(gen_out, out, [&](std::ostream& os) {
          os << "# er n=" << n << " p=" << p << " seed=" << seed << '\n';
          write_edge_list(os, g);
        });
      } else if (*gen_mc) {
        const MCInstance inst = parse_sets(sets_text, elements);
        const MCReduction red = gen_mc_reduction(inst, k);
        for (std::size_t s : red.degenerate_sets) {
          err << "warning: set T" << (s + 1) << " has fewer than two elements\n";
        }
        emit(gen_out, out, [&](std::ostream& os) {
          os << "# mc reduction k=" << k << " sets=" << inst.set_count()
             << " elements=" << inst.elements << '\n';
          for (std::size_t i = 0; i < red.gadget_anchors.size(); ++i) {
            const CandidateEdge a = red.gadget_anchors[i];
            os << "# gadget T" << (i + 1) << " anchor " << a.u << ' ' << a.v << '\n';
          }
          os << "# vertex roles:";
          for (std::size_t v = 0; v < red.labels.size(); ++v) os << ' ' << v << '=' << red.labels[v];
          os << '\n';
          write_edge_list(os, red.graph);
        });
      } else {
        const NonSubmodularWitness w = gen_nonsubmodular(k);
        emit(gen_out, out, [&](std::ostream& os) {
          os << "# nonsub k=" << k << " A=(" << w.a.u << ',' << w.a.v << ") B=(" << w.b.u << ','
             << w.b.v << ")\n";
          write_edge_list(os, w.graph);
        });
      }
      return kExitOk;
    }

    if (*layers_cmd) {
      const Graph g = load_graph(file);
      dump_onion_layers(out, g, build_onion_layers(g, k));
      return kExitOk;
    }

    if (*verify) {
      const Graph g = load_graph(file);
      const OnionLayers layers = build_onion_layers(g, k);
      const FollowerOracle oracle(g, k);
      LayeredFollowerFinder layered(g, layers);
      std::size_t checked = 0;
      std::size_t mismatches = 0;
      for (const CandidateEdge& e : scope_filter(g, k)) {
        ++checked;
        const FollowerResult truth = oracle(e);
        const bool kept = passes_layer_filter(layers, e);
        const std::vector<VertexId> got = kept ? layered(e).followers : std::vector<VertexId>{};
        if (got != truth.followers) {
          ++mismatches;
          err << "mismatch " << edge_text(g, e) << (kept ? " layered " : " dropped by layer filter ")
              << got.size() << " vs oracle " << truth.count() << '\n';
        }
      }
      out << "checked " << checked << " candidates, " << mismatches << " mismatches\n";
      return mismatches == 0 ? kExitOk : kExitMismatch;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const EnumerationLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const DeadlineExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ekc
