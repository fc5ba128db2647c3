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
#include <limits>

#include "hcore/decomposition.hpp"
#include "hcore/errors.hpp"

namespace hcore {

namespace {

void require_threshold(std::uint32_t h) {
  if (h < 1) throw ParameterError("distance threshold h must be at least 1");
}

}  // namespace

std::vector<std::uint32_t> compute_h_degrees(const Graph& g, std::uint32_t h, TraversalPool& pool) {
  require_threshold(h);
  return pool.all_degrees(g, AliveMask(g.num_vertices()), h);
}

std::vector<std::uint32_t> compute_lb1(const Graph& g, std::uint32_t h, TraversalPool& pool) {
  require_threshold(h);
  if (h / 2 == 0) return std::vector<std::uint32_t>(g.num_vertices(), 0);
  return pool.all_degrees(g, AliveMask(g.num_vertices()), h / 2);
}

std::vector<std::uint32_t> compute_lb1(const Graph& g, std::uint32_t h) {
  TraversalPool pool(g.num_vertices(), 1);
  return compute_lb1(g, h, pool);
}

std::vector<std::uint32_t> compute_lb2(const Graph& g, std::uint32_t h, std::span<const std::uint32_t> lb1,
                                       TraversalPool& pool) {
  require_threshold(h);
  if (lb1.size() != g.num_vertices()) throw ContractError("LB1 vector does not match the graph");
  const AliveMask all(g.num_vertices());
  const std::uint32_t radius = (h + 1) / 2;
  std::vector<std::uint32_t> lb2(g.num_vertices(), 0);
  pool.for_each(g.num_vertices(), [&](HopBfs& bfs, std::size_t v) {
    std::uint32_t best = lb1[v];
    for (const HopMember& m : bfs.neighborhood(g, all, static_cast<VertexId>(v), radius)) {
      best = std::max(best, lb1[m.vertex]);
    }
    lb2[v] = best;
  });
  return lb2;
}

std::vector<std::uint32_t> compute_lb2(const Graph& g, std::uint32_t h, std::span<const std::uint32_t> lb1) {
  TraversalPool pool(g.num_vertices(), 1);
  return compute_lb2(g, h, lb1, pool);
}

std::vector<std::uint32_t> compute_ub(const Graph& g, std::uint32_t h, TraversalPool& pool,
                                      std::span<const std::uint32_t> h_degrees) {
  require_threshold(h);
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> ub_degree;
  if (h_degrees.empty()) {
    ub_degree = compute_h_degrees(g, h, pool);
  } else {
    if (h_degrees.size() != n) throw ContractError("h-degree vector does not match the graph");
    ub_degree.assign(h_degrees.begin(), h_degrees.end());
  }

  const AliveMask all(n);
  BucketQueue buckets(n, n + 1);
  for (std::size_t v = 0; v < n; ++v) buckets.push(static_cast<VertexId>(v), ub_degree[v]);

  std::vector<std::uint8_t> popped(n, 0);
  std::vector<std::uint32_t> ub(n, 0);
  HopBfs& bfs = pool.primary();
  for (std::uint32_t k = 0; k <= n; ++k) {
    while (auto next = buckets.pop(k)) {
      const VertexId v = *next;
      ub[v] = k;
      popped[v] = 1;
      for (const HopMember& m : bfs.neighborhood(g, all, v, h)) {
        const VertexId u = m.vertex;
        if (popped[u]) continue;
        if (ub_degree[u] > 0) --ub_degree[u];
        buckets.move(u, std::max(ub_degree[u], k));
      }
    }
  }
  return ub;
}

std::vector<std::uint32_t> compute_ub(const Graph& g, std::uint32_t h) {
  TraversalPool pool(g.num_vertices(), 1);
  return compute_ub(g, h, pool);
}

ImprovedBounds improve_lb(const Graph& g, std::span<const VertexId> subset, std::uint32_t h, std::uint32_t k,
                          std::span<const std::uint32_t> lb2, TraversalPool& pool) {
  require_threshold(h);
  const std::size_t n = g.num_vertices();
  if (lb2.size() != n) throw ContractError("LB2 vector does not match the graph");

  ImprovedBounds result;
  result.lb3.assign(n, 0);
  if (subset.empty()) return result;

  AliveMask mask = AliveMask::from_subset(n, subset);
  std::vector<std::uint32_t> induced(subset.size());
  pool.degrees(g, mask, subset, h, induced);

  std::vector<std::uint32_t> upper(n, 0);
  std::vector<std::uint8_t> queued(n, 0);
  std::vector<VertexId> doomed;
  std::uint32_t min_degree = std::numeric_limits<std::uint32_t>::max();
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const VertexId v = subset[i];
    upper[v] = induced[i];
    min_degree = std::min(min_degree, induced[i]);
    if (induced[i] < k && !queued[v]) {
      queued[v] = 1;
      doomed.push_back(v);
    }
  }
  result.min_degree = min_degree;
  for (VertexId v : subset) result.lb3[v] = std::max(lb2[v], min_degree);

  HopBfs& bfs = pool.primary();
  for (std::size_t head = 0; head < doomed.size(); ++head) {
    const VertexId v = doomed[head];
    for (const HopMember& m : bfs.neighborhood(g, mask, v, h)) {
      const VertexId u = m.vertex;
      if (upper[u] > 0) --upper[u];
      if (upper[u] < k && !queued[u]) {
        queued[u] = 1;
        doomed.push_back(u);
      }
    }
    mask.kill(v);
  }
  result.survivors = mask.members();
  return result;
}

ImprovedBounds improve_lb(const Graph& g, std::span<const VertexId> subset, std::uint32_t h, std::uint32_t k,
                          std::span<const std::uint32_t> lb2) {
  TraversalPool pool(g.num_vertices(), 1);
  return improve_lb(g, subset, h, k, lb2, pool);
}

}  // namespace hcore
