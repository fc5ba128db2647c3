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


#include <algorithm>
#include <iterator>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "hcore/applications.hpp"
#include "hcore/errors.hpp"
#include "hcore/h_bfs.hpp"

namespace hcore {

std::string_view to_string(LandmarkStrategy strategy) {
  switch (strategy) {
    case LandmarkStrategy::kCore:
      return "core";
    case LandmarkStrategy::kDegree:
      return "degree";
    case LandmarkStrategy::kRandom:
      return "random";
  }
  return "?";
}

LandmarkStrategy parse_landmark_strategy(std::string_view name) {
  if (name == "core") return LandmarkStrategy::kCore;
  if (name == "degree") return LandmarkStrategy::kDegree;
  if (name == "random") return LandmarkStrategy::kRandom;
  throw ParameterError("unknown landmark strategy '" + std::string(name) + "' (expected core, degree or random)");
}

namespace {

void check_count(const Graph& g, std::size_t ell) {
  if (ell == 0) throw ParameterError("at least one landmark is required");
  if (ell > g.num_vertices()) throw ParameterError("more landmarks requested than the graph has vertices");
}

std::vector<VertexId> by_core(const CoreResult& cores, std::size_t ell, std::mt19937_64& rng) {
  std::vector<std::uint32_t> levels = cores.core_values();
  std::reverse(levels.begin(), levels.end());
  std::vector<VertexId> chosen;
  for (std::uint32_t k : levels) {
    std::vector<VertexId> shell;
    for (std::size_t v = 0; v < cores.core.size(); ++v) {
      if (cores.core[v] == k) shell.push_back(static_cast<VertexId>(v));
    }
    const std::size_t want = ell - chosen.size();
    if (shell.size() <= want) {
      chosen.insert(chosen.end(), shell.begin(), shell.end());
    } else {
      std::sample(shell.begin(), shell.end(), std::back_inserter(chosen), want, rng);
    }
    if (chosen.size() == ell) break;
  }
  return chosen;
}

std::vector<VertexId> by_degree(const Graph& g, std::uint32_t h, std::size_t ell) {
  TraversalPool pool(g.num_vertices(), 1);
  const std::vector<std::uint32_t> degree = compute_h_degrees(g, h, pool);
  std::vector<VertexId> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return degree[a] > degree[b]; });
  order.resize(ell);
  return order;
}

std::vector<VertexId> uniformly(const Graph& g, std::size_t ell, std::mt19937_64& rng) {
  std::vector<VertexId> all(g.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  std::vector<VertexId> chosen;
  std::sample(all.begin(), all.end(), std::back_inserter(chosen), ell, rng);
  return chosen;
}

}  // namespace

std::vector<VertexId> choose_landmarks(const Graph& g, std::uint32_t h, std::size_t ell, std::uint64_t seed,
                                       LandmarkStrategy strategy, const CoreResult& cores) {
  if (h < 1) throw ParameterError("distance threshold h must be at least 1");
  check_count(g, ell);
  std::mt19937_64 rng(seed);
  switch (strategy) {
    case LandmarkStrategy::kCore:
      if (cores.core.size() != g.num_vertices()) throw ContractError("core indices do not match the graph");
      return by_core(cores, ell, rng);
    case LandmarkStrategy::kDegree:
      return by_degree(g, h, ell);
    case LandmarkStrategy::kRandom:
      return uniformly(g, ell, rng);
  }
  throw ParameterError("unknown landmark strategy");
}

std::vector<VertexId> choose_landmarks(const Graph& g, std::uint32_t h, std::size_t ell, std::uint64_t seed,
                                       LandmarkStrategy strategy) {
  check_count(g, ell);
  if (strategy != LandmarkStrategy::kCore) return choose_landmarks(g, h, ell, seed, strategy, CoreResult{});
  return choose_landmarks(g, h, ell, seed, strategy, decompose_hlbub(g, h));
}

LandmarkIndex build_landmark_index(const Graph& g, std::vector<VertexId> landmarks) {
  LandmarkIndex index;
  index.num_vertices = g.num_vertices();
  index.distances.reserve(landmarks.size());
  for (VertexId u : landmarks) index.distances.push_back(single_source_distances(g, u));
  index.landmarks = std::move(landmarks);
  return index;
}

LandmarkIndex select_landmarks(const Graph& g, std::uint32_t h, std::size_t ell, std::uint64_t seed,
                               LandmarkStrategy strategy) {
  return build_landmark_index(g, choose_landmarks(g, h, ell, seed, strategy));
}

DistanceEstimate estimate_distance(const LandmarkIndex& index, VertexId s, VertexId t) {
  if (s >= index.num_vertices || t >= index.num_vertices) throw ParameterError("vertex id out of range");
  DistanceEstimate out;
  out.upper = kUnreachable;
  for (const auto& d : index.distances) {
    if (d[s] == kUnreachable || d[t] == kUnreachable) continue;
    const std::uint32_t gap = d[s] > d[t] ? d[s] - d[t] : d[t] - d[s];
    out.lower = std::max(out.lower, gap);
    out.upper = std::min(out.upper, d[s] + d[t]);
  }
  out.estimate = out.upper == kUnreachable ? std::numeric_limits<double>::infinity()
                                           : (static_cast<double>(out.lower) + static_cast<double>(out.upper)) / 2.0;
  return out;
}

}  // namespace hcore
