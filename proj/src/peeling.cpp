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
#include <chrono>
#include <limits>
#include <string>

#include "hcore/decomposition.hpp"
#include "hcore/errors.hpp"

namespace hcore {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kBz:
      return "bz";
    case Algorithm::kLb:
      return "lb";
    case Algorithm::kLbUb:
      return "lbub";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "bz") return Algorithm::kBz;
  if (name == "lb") return Algorithm::kLb;
  if (name == "lbub") return Algorithm::kLbUb;
  throw ParameterError("unknown algorithm '" + std::string(name) + "' (expected bz, lb or lbub)");
}

std::uint32_t CoreResult::max_core() const {
  return core.empty() ? 0 : *std::max_element(core.begin(), core.end());
}

std::vector<std::uint32_t> CoreResult::core_values() const {
  std::vector<std::uint32_t> values(core.begin(), core.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::size_t CoreResult::distinct_cores() const { return core_values().size(); }

std::vector<VertexId> CoreResult::core_members(std::uint32_t k) const {
  std::vector<VertexId> members;
  for (std::size_t v = 0; v < core.size(); ++v) {
    if (core[v] >= k) members.push_back(static_cast<VertexId>(v));
  }
  return members;
}

BoundAccuracy bound_accuracy(std::span<const std::uint32_t> bound, std::span<const std::uint32_t> core) {
  if (bound.size() != core.size()) throw ContractError("bound vector does not match the core vector");
  BoundAccuracy acc;
  double error = 0.0;
  std::size_t exact = 0;
  for (std::size_t v = 0; v < core.size(); ++v) {
    if (core[v] == 0) continue;
    ++acc.vertices;
    const double diff = bound[v] > core[v] ? bound[v] - core[v] : core[v] - bound[v];
    error += diff / core[v];
    exact += bound[v] == core[v];
  }
  if (acc.vertices > 0) {
    acc.mean_relative_error = error / static_cast<double>(acc.vertices);
    acc.exact_fraction = static_cast<double>(exact) / static_cast<double>(acc.vertices);
  }
  return acc;
}

PartitionPlan make_partition_plan(std::span<const std::uint32_t> upper_bounds, std::uint32_t lb0,
                                  std::size_t partition_size) {
  if (partition_size < 1) throw ParameterError("partition size must be at least 1");
  PartitionPlan plan;
  plan.partition_size = partition_size;
  plan.lb0 = lb0;
  plan.upper_bounds.assign(upper_bounds.begin(), upper_bounds.end());
  std::sort(plan.upper_bounds.begin(), plan.upper_bounds.end(), std::greater<>());
  plan.upper_bounds.erase(std::unique(plan.upper_bounds.begin(), plan.upper_bounds.end()), plan.upper_bounds.end());

  const auto& u = plan.upper_bounds;
  if (u.empty()) return plan;
  if (lb0 > u.back()) throw ContractError("lower bound exceeds the smallest upper bound");
  for (std::size_t i = 0; i < u.size(); i += partition_size) {
    const std::size_t next = i + partition_size;
    const std::uint32_t k_min = next < u.size() ? u[next] + 1 : lb0;
    plan.intervals.push_back({k_min, u[i]});
  }
  return plan;
}

PeelState::PeelState(std::size_t n)
    : mask(n), buckets(n, n + 1), set_lb(n, 0), degree(n, 0), core(n, 0), finalized(n, 0) {
  finalize_order.reserve(n);
}

namespace {

std::size_t bucket_cap(const PeelState& state, std::size_t k) { return std::min(k, state.buckets.num_buckets() - 1); }

/// Removes v from the live subgraph and refreshes the h-degrees of its
/// tracked h-neighbors: full recomputation when they were closer than h,
/// a unit decrement when exactly h away. Recomputations run on the pool; the
/// bucket moves are committed afterwards in neighborhood order.
class NeighborUpdater {
 public:
  void remove(const Graph& g, std::uint32_t h, std::uint32_t k, VertexId v, PeelState& state, TraversalPool& pool) {
    auto listed = pool.primary().neighborhood(g, state.mask, v, h);
    neighbors_.assign(listed.begin(), listed.end());
    state.mask.kill(v);

    targets_.clear();
    for (const HopMember& m : neighbors_) {
      if (!state.set_lb[m.vertex] && m.distance < h) targets_.push_back(m.vertex);
    }
    fresh_.resize(targets_.size());
    pool.degrees(g, state.mask, targets_, h, fresh_);

    std::size_t next = 0;
    for (const HopMember& m : neighbors_) {
      const VertexId u = m.vertex;
      if (state.set_lb[u]) continue;
      if (m.distance < h) {
        state.degree[u] = fresh_[next++];
      } else if (state.degree[u] > 0) {
        --state.degree[u];
      }
      state.buckets.move(u, bucket_cap(state, std::max(state.degree[u], k)));
    }
  }

 private:
  std::vector<HopMember> neighbors_;
  std::vector<VertexId> targets_;
  std::vector<std::uint32_t> fresh_;
};

std::vector<VertexId> peel_order_from(const PeelState& state) {
  const std::size_t n = state.core.size();
  std::vector<VertexId> order;
  order.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!state.finalized[v]) order.push_back(static_cast<VertexId>(v));
  }
  order.insert(order.end(), state.finalize_order.begin(), state.finalize_order.end());
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return state.core[a] < state.core[b]; });
  return order;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_threshold(std::uint32_t h) {
  if (h < 1) throw ParameterError("distance threshold h must be at least 1");
}

}  // namespace

void core_decomp_interval(const Graph& g, std::uint32_t h, std::uint32_t k_min, std::uint32_t k_max,
                          PeelState& state, TraversalPool& pool) {
  require_threshold(h);
  if (k_min > k_max) return;
  NeighborUpdater updater;
  const std::size_t first = k_min == 0 ? 0 : k_min - 1;
  const std::size_t last = bucket_cap(state, k_max);
  for (std::size_t level = first; level <= last; ++level) {
    const auto k = static_cast<std::uint32_t>(level);
    while (auto next = state.buckets.pop(level)) {
      const VertexId v = *next;
      if (state.set_lb[v]) {
        state.degree[v] = static_cast<std::uint32_t>(pool.primary().degree(g, state.mask, v, h));
        state.set_lb[v] = 0;
        state.buckets.push(v, bucket_cap(state, std::max(state.degree[v], k)));
        continue;
      }
      if (k >= k_min) {
        state.core[v] = k;
        state.finalized[v] = 1;
        state.finalize_order.push_back(v);
        state.set_lb[v] = 1;
      }
      updater.remove(g, h, k, v, state, pool);
    }
  }
}

CoreResult decompose_hbz(const Graph& g, std::uint32_t h, const DecomposeOptions& options) {
  require_threshold(h);
  const Stopwatch clock;
  const std::size_t n = g.num_vertices();
  TraversalPool pool(n, options.threads);
  PeelState state(n);

  const std::vector<std::uint32_t> initial = compute_h_degrees(g, h, pool);
  state.degree = initial;
  for (std::size_t v = 0; v < n; ++v) state.buckets.push(static_cast<VertexId>(v), initial[v]);

  std::vector<HopMember> neighbors;
  std::vector<VertexId> targets;
  std::vector<std::uint32_t> fresh;
  for (std::uint32_t k = 0; k <= n; ++k) {
    while (auto next = state.buckets.pop(k)) {
      const VertexId v = *next;
      state.core[v] = k;
      state.finalized[v] = 1;
      state.finalize_order.push_back(v);

      auto listed = pool.primary().neighborhood(g, state.mask, v, h);
      neighbors.assign(listed.begin(), listed.end());
      state.mask.kill(v);

      targets.clear();
      for (const HopMember& m : neighbors) targets.push_back(m.vertex);
      fresh.resize(targets.size());
      pool.degrees(g, state.mask, targets, h, fresh);
      for (std::size_t i = 0; i < targets.size(); ++i) {
        state.degree[targets[i]] = fresh[i];
        state.buckets.move(targets[i], std::max(fresh[i], k));
      }
    }
  }

  CoreResult result;
  result.h = h;
  result.core = std::move(state.core);
  result.peel_order = std::move(state.finalize_order);
  if (options.record_bounds) {
    result.bounds.emplace();
    result.bounds->h_degree = initial;
  }
  result.stats.distance_computations = pool.reached();
  result.stats.wall_seconds = clock.seconds();
  return result;
}

CoreResult decompose_hlb(const Graph& g, std::uint32_t h, const DecomposeOptions& options) {
  require_threshold(h);
  const Stopwatch clock;
  const std::size_t n = g.num_vertices();
  TraversalPool pool(n, options.threads);
  PeelState state(n);

  std::vector<std::uint32_t> lb1 = compute_lb1(g, h, pool);
  std::vector<std::uint32_t> lb2 = compute_lb2(g, h, lb1, pool);
  const std::uint64_t short_radius = pool.reached();
  for (std::size_t v = 0; v < n; ++v) {
    state.set_lb[v] = 1;
    state.buckets.push(static_cast<VertexId>(v), lb2[v]);
  }
  core_decomp_interval(g, h, 1, static_cast<std::uint32_t>(n), state, pool);

  CoreResult result;
  result.h = h;
  result.peel_order = peel_order_from(state);
  result.core = std::move(state.core);
  if (options.record_bounds) {
    result.bounds.emplace();
    result.bounds->lb1 = std::move(lb1);
    result.bounds->lb2 = std::move(lb2);
  }
  result.stats.distance_computations = pool.reached() - short_radius;
  result.stats.wall_seconds = clock.seconds();
  return result;
}

CoreResult decompose_hlbub(const Graph& g, std::uint32_t h, const DecomposeOptions& options) {
  require_threshold(h);
  if (options.partition_size < 1) throw ParameterError("partition size must be at least 1");
  const Stopwatch clock;
  const std::size_t n = g.num_vertices();
  TraversalPool pool(n, options.threads);
  PeelState state(n);

  const std::vector<std::uint32_t> h_degree = compute_h_degrees(g, h, pool);
  const std::uint64_t before_lb = pool.reached();
  std::vector<std::uint32_t> lb1 = compute_lb1(g, h, pool);
  std::vector<std::uint32_t> lb2 = compute_lb2(g, h, lb1, pool);
  const std::uint64_t short_radius = pool.reached() - before_lb;
  std::vector<std::uint32_t> ub = compute_ub(g, h, pool, h_degree);
  std::vector<std::uint32_t> lb3(n, 0);

  const std::uint32_t lb0 = n == 0 ? 0 : *std::min_element(lb2.begin(), lb2.end());
  const PartitionPlan plan = make_partition_plan(ub, lb0, options.partition_size);

  std::vector<VertexId> candidates;
  for (const CoreInterval& interval : plan.intervals) {
    candidates.clear();
    for (std::size_t v = 0; v < n; ++v) {
      if (ub[v] >= interval.k_min) candidates.push_back(static_cast<VertexId>(v));
    }
    ImprovedBounds improved = improve_lb(g, candidates, h, interval.k_min, lb2, pool);
    for (VertexId v : candidates) lb3[v] = std::max(lb3[v], improved.lb3[v]);

    state.mask = AliveMask::from_subset(n, improved.survivors);
    state.buckets.clear();
    const std::uint32_t floor = interval.k_min == 0 ? 0 : interval.k_min - 1;
    for (VertexId v : improved.survivors) {
      const std::uint32_t seed = std::max({state.finalized[v] ? state.core[v] : 0U, lb3[v], floor});
      state.buckets.push(v, std::min<std::size_t>(seed, n));
      state.set_lb[v] = 1;
    }
    core_decomp_interval(g, h, interval.k_min, interval.k_max, state, pool);
  }

  CoreResult result;
  result.h = h;
  result.peel_order = peel_order_from(state);
  result.core = std::move(state.core);
  if (options.record_bounds) {
    result.bounds.emplace();
    result.bounds->lb1 = std::move(lb1);
    result.bounds->lb2 = std::move(lb2);
    result.bounds->lb3 = std::move(lb3);
    result.bounds->ub = std::move(ub);
    result.bounds->h_degree = h_degree;
  }
  result.stats.distance_computations = pool.reached() - short_radius;
  result.stats.wall_seconds = clock.seconds();
  return result;
}

CoreResult decompose(const Graph& g, std::uint32_t h, Algorithm algorithm, const DecomposeOptions& options) {
  switch (algorithm) {
    case Algorithm::kBz:
      return decompose_hbz(g, h, options);
    case Algorithm::kLb:
      return decompose_hlb(g, h, options);
    case Algorithm::kLbUb:
      return decompose_hlbub(g, h, options);
  }
  throw ParameterError("unknown algorithm");
}

}  // namespace hcore
