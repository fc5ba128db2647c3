// Copyright 2026 The hcore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "hcore/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hcore/applications.hpp"
#include "hcore/decomposition.hpp"
#include "hcore/errors.hpp"
#include "hcore/graph.hpp"
#include "hcore/h_bfs.hpp"

namespace hcore {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string input;
  std::uint32_t h = 2;
  std::string algorithm = "lbub";
  std::size_t partition_size = 1;
  std::size_t threads = 1;
  std::uint64_t seed = 0;
  std::string output;
  bool verbose = false;

  std::uint32_t h_min = 1;
  std::uint32_t h_max = 5;
  std::vector<std::string> query;
  std::size_t ell = 20;
  std::string strategy = "core";
  std::vector<std::string> landmarks;
  std::size_t pair_count = 500;
  std::vector<std::string> pairs;

  DecomposeOptions options() const {
    DecomposeOptions opts;
    opts.threads = threads;
    opts.partition_size = partition_size;
    opts.record_bounds = verbose;
    return opts;
  }
};

const CLI::Range kAtLeastOne(std::uint64_t{1}, std::uint64_t{std::numeric_limits<std::uint32_t>::max()}, "at least 1");

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("input", cfg.input, "Edge-list file")->required();
  cmd->add_option("--h", cfg.h, "Distance threshold")->check(kAtLeastOne)->capture_default_str();
  cmd->add_option("--algorithm", cfg.algorithm, "Decomposition algorithm")
      ->check(CLI::IsMember({"bz", "lb", "lbub"}))
      ->capture_default_str();
  cmd->add_option("--partition-size", cfg.partition_size, "Distinct upper bounds per interval (lbub)")
      ->check(kAtLeastOne)
      ->capture_default_str();
  cmd->add_option("--threads", cfg.threads, "Worker threads")->check(kAtLeastOne)->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  cmd->add_option("--output", cfg.output, "Output file (default: standard output)");
  cmd->add_flag("--verbose", cfg.verbose, "Report bounds and extra diagnostics");
}

/// Destination for results: the --output file or the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::out | std::ios::trunc);
      if (!file_) throw IoError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }

  std::ostream& get() { return *stream_; }

  void finish() {
    stream_->flush();
    if (!*stream_) throw IoError("failed to write output");
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::vector<std::string> labels_of(const Graph& g, std::span<const VertexId> ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (VertexId v : ids) out.push_back(g.label(v));
  return out;
}

VertexId lookup(const Graph& g, const std::string& label) {
  const auto id = g.find(label);
  if (!id) throw ParameterError("unknown vertex label '" + label + "'");
  return *id;
}

CoreResult run_decomposition(const Graph& g, const RunConfig& cfg, std::uint32_t h) {
  return decompose(g, h, parse_algorithm(cfg.algorithm), cfg.options());
}

void summarize(std::ostream& err, const CoreResult& r) {
  err << "h=" << r.h << " max_core=" << r.max_core() << " distinct_cores=" << r.distinct_cores()
      << " distance_computations=" << r.stats.distance_computations << " wall_seconds=" << std::fixed
      << std::setprecision(3) << r.stats.wall_seconds << std::defaultfloat << '\n';
}

void report_accuracy(std::ostream& err, const char* name, const std::vector<std::uint32_t>& bound,
                     const std::vector<std::uint32_t>& core) {
  if (bound.empty()) return;
  const BoundAccuracy acc = bound_accuracy(bound, core);
  err << name << ": mean_relative_error=" << std::setprecision(6) << acc.mean_relative_error
      << " exact_fraction=" << acc.exact_fraction << std::defaultfloat << '\n';
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_edge_list(cfg.input);
  const CoreResult r = run_decomposition(g, cfg, cfg.h);
  Sink sink(cfg.output, out);
  std::ostream& os = sink.get();

  struct Column {
    const char* name;
    const std::vector<std::uint32_t>* values;
  };
  std::vector<Column> extra;
  if (cfg.verbose && r.bounds) {
    const BoundDiagnostics& b = *r.bounds;
    for (const Column& c : {Column{"lb1", &b.lb1}, Column{"lb2", &b.lb2}, Column{"lb3", &b.lb3}, Column{"ub", &b.ub},
                            Column{"h_degree", &b.h_degree}}) {
      if (!c.values->empty()) extra.push_back(c);
    }
    os << "# vertex\tcore";
    for (const Column& c : extra) os << '\t' << c.name;
    os << '\n';
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    os << g.label(v) << '\t' << r.core[v];
    for (const Column& c : extra) os << '\t' << (*c.values)[v];
    os << '\n';
  }
  sink.finish();

  summarize(err, r);
  if (cfg.verbose && r.bounds) {
    for (const Column& c : extra) report_accuracy(err, c.name, *c.values, r.core);
  }
  return kExitOk;
}

int cmd_stats(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.h_min < 1 || cfg.h_min > cfg.h_max) throw ParameterError("need 1 <= --h-min <= --h-max");
  const Graph g = load_edge_list(cfg.input);
  Sink sink(cfg.output, out);
  for (std::uint32_t h = cfg.h_min; h <= cfg.h_max; ++h) {
    const CoreResult r = run_decomposition(g, cfg, h);
    json row = {{"h", h},
                {"vertices", g.num_vertices()},
                {"edges", g.num_edges()},
                {"max_core", r.max_core()},
                {"distinct_cores", r.distinct_cores()},
                {"distance_computations", r.stats.distance_computations}};
    sink.get() << row.dump() << '\n';
    summarize(err, r);
  }
  sink.finish();
  return kExitOk;
}

int cmd_hclub(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_edge_list(cfg.input);
  const CoreResult cores = run_decomposition(g, cfg, cfg.h);
  summarize(err, cores);
  const MaxClubResult r = max_h_club(g, cfg.h, cores);
  json row = {{"h", cfg.h},
              {"size", r.club.size()},
              {"verified", r.club.verified},
              {"degeneracy", r.degeneracy},
              {"inspected_cores", r.inspected_cores},
              {"members", labels_of(g, r.club.members)}};
  Sink sink(cfg.output, out);
  sink.get() << row.dump() << '\n';
  sink.finish();
  return kExitOk;
}

int cmd_densest(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_edge_list(cfg.input);
  const CoreResult cores = run_decomposition(g, cfg, cfg.h);
  summarize(err, cores);
  const DensestResult r = densest_h_core(g, cfg.h, cores);
  json row = {{"h", cfg.h},
              {"core_index", r.core_index},
              {"density", r.density},
              {"size", r.members.size()},
              {"members", labels_of(g, r.members)}};
  Sink sink(cfg.output, out);
  sink.get() << row.dump() << '\n';
  sink.finish();
  return kExitOk;
}

int cmd_community(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_edge_list(cfg.input);
  std::vector<VertexId> q;
  for (const std::string& label : cfg.query) q.push_back(lookup(g, label));
  const CoreResult cores = run_decomposition(g, cfg, cfg.h);
  summarize(err, cores);
  const Community c = cocktail_party(g, q, cfg.h, cores);
  json row = {{"h", cfg.h},
              {"query", cfg.query},
              {"core_index", c.core_index},
              {"min_h_degree", c.min_h_degree},
              {"size", c.members.size()},
              {"members", labels_of(g, c.members)}};
  Sink sink(cfg.output, out);
  sink.get() << row.dump() << '\n';
  sink.finish();
  return kExitOk;
}

int cmd_color(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_edge_list(cfg.input);
  const CoreResult cores = run_decomposition(g, cfg, cfg.h);
  summarize(err, cores);
  const Coloring c = greedy_distance_h_coloring(g, cfg.h, cores);
  json colors = json::array();
  for (VertexId v = 0; v < g.num_vertices(); ++v) colors.push_back({{"vertex", g.label(v)}, {"color", c.color[v]}});
  json row = {{"h", cfg.h},
              {"num_colors", c.num_colors},
              {"degeneracy", cores.max_core()},
              {"valid", is_distance_h_coloring(g, cfg.h, c.color)},
              {"colors", std::move(colors)}};
  Sink sink(cfg.output, out);
  sink.get() << row.dump() << '\n';
  sink.finish();
  return kExitOk;
}

json distance_or_null(std::uint32_t d) { return d == kUnreachable ? json(nullptr) : json(d); }

int cmd_landmarks(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_edge_list(cfg.input);
  const std::size_t n = g.num_vertices();

  std::vector<VertexId> chosen;
  std::string strategy = cfg.strategy;
  if (!cfg.landmarks.empty()) {
    for (const std::string& label : cfg.landmarks) chosen.push_back(lookup(g, label));
    strategy = "given";
  } else {
    const LandmarkStrategy s = parse_landmark_strategy(cfg.strategy);
    if (s == LandmarkStrategy::kCore) {
      const CoreResult cores = run_decomposition(g, cfg, cfg.h);
      summarize(err, cores);
      chosen = choose_landmarks(g, cfg.h, cfg.ell, cfg.seed, s, cores);
    } else {
      chosen = choose_landmarks(g, cfg.h, cfg.ell, cfg.seed, s);
    }
  }
  const LandmarkIndex index = build_landmark_index(g, chosen);

  std::vector<std::pair<VertexId, VertexId>> pairs;
  if (!cfg.pairs.empty()) {
    if (cfg.pairs.size() % 2 != 0) throw ParameterError("--pair takes two vertex labels");
    for (std::size_t i = 0; i < cfg.pairs.size(); i += 2) pairs.emplace_back(lookup(g, cfg.pairs[i]), lookup(g, cfg.pairs[i + 1]));
  } else if (n >= 2) {
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    while (pairs.size() < cfg.pair_count) {
      const VertexId s = pick(rng);
      const VertexId t = pick(rng);
      if (s != t) pairs.emplace_back(s, t);
    }
  }

  Sink sink(cfg.output, out);
  double error_sum = 0.0;
  std::size_t evaluated = 0;
  std::size_t violations = 0;
  for (auto [s, t] : pairs) {
    const DistanceEstimate e = estimate_distance(index, s, t);
    const std::uint32_t truth = single_source_distances(g, s)[t];
    json row = {{"s", g.label(s)},
                {"t", g.label(t)},
                {"lower", e.lower},
                {"upper", distance_or_null(e.upper)},
                {"estimate", std::isinf(e.estimate) ? json(nullptr) : json(e.estimate)},
                {"distance", distance_or_null(truth)}};
    if (truth != kUnreachable && (e.lower > truth || truth > e.upper)) ++violations;
    if (truth != kUnreachable && truth > 0 && e.upper != kUnreachable) {
      const double rel = std::abs(e.estimate - truth) / truth;
      row["relative_error"] = rel;
      error_sum += rel;
      ++evaluated;
    } else {
      row["relative_error"] = nullptr;
    }
    sink.get() << row.dump() << '\n';
  }
  json summary = {{"summary", true},
                  {"strategy", strategy},
                  {"landmarks", labels_of(g, index.landmarks)},
                  {"pairs", pairs.size()},
                  {"evaluated", evaluated},
                  {"bound_violations", violations},
                  {"mean_relative_error", evaluated ? json(error_sum / static_cast<double>(evaluated)) : json(nullptr)}};
  sink.get() << summary.dump() << '\n';
  sink.finish();
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"(k,h)-core decomposition of graphs and its applications", "hcore"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "Write the core index of every vertex as TSV");
  add_common(decompose_cmd, cfg);

  CLI::App* stats_cmd = app.add_subcommand("stats", "Max core index and distinct cores for a range of h");
  add_common(stats_cmd, cfg);
  stats_cmd->add_option("--h-min", cfg.h_min, "Smallest h")->check(kAtLeastOne)->capture_default_str();
  stats_cmd->add_option("--h-max", cfg.h_max, "Largest h")->check(kAtLeastOne)->capture_default_str();

  CLI::App* hclub_cmd = app.add_subcommand("hclub", "Maximum h-club");
  add_common(hclub_cmd, cfg);

  CLI::App* densest_cmd = app.add_subcommand("densest", "Densest core by average h-degree");
  add_common(densest_cmd, cfg);

  CLI::App* community_cmd = app.add_subcommand("community", "Community around query vertices");
  add_common(community_cmd, cfg);
  community_cmd->add_option("--query", cfg.query, "Query vertex label (repeatable)")->required();

  CLI::App* color_cmd = app.add_subcommand("color", "Greedy distance-h coloring");
  add_common(color_cmd, cfg);

  CLI::App* landmarks_cmd = app.add_subcommand("landmarks", "Landmark-based distance estimates");
  add_common(landmarks_cmd, cfg);
  landmarks_cmd->add_option("--ell", cfg.ell, "Number of landmarks")->check(kAtLeastOne)->capture_default_str();
  landmarks_cmd->add_option("--strategy", cfg.strategy, "Landmark selection")
      ->check(CLI::IsMember({"core", "degree", "random"}))
      ->capture_default_str();
  landmarks_cmd->add_option("--landmark", cfg.landmarks, "Use this vertex as a landmark (repeatable)");
  landmarks_cmd->add_option("--pairs", cfg.pair_count, "Number of random vertex pairs to evaluate")
      ->capture_default_str();
  landmarks_cmd->add_option("--pair", cfg.pairs, "Evaluate this pair of vertex labels (repeatable)")
      ->expected(2)
      ->allow_extra_args(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*decompose_cmd) return cmd_decompose(cfg, out, err);
    if (*stats_cmd) return cmd_stats(cfg, out, err);
    if (*hclub_cmd) return cmd_hclub(cfg, out, err);
    if (*densest_cmd) return cmd_densest(cfg, out, err);
    if (*community_cmd) return cmd_community(cfg, out, err);
    if (*color_cmd) return cmd_color(cfg, out, err);
    if (*landmarks_cmd) return cmd_landmarks(cfg, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParseError& e) {
    err << "error: " << cfg.input;
    if (e.line() > 0) err << ":" << e.line();
    err << ": " << e.what() << '\n';
    return kExitParse;
  } catch (const NoSolutionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoSolution;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hcore
