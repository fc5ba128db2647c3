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


#include <cstdint>

#include "hcore/applications.hpp"
#include "hcore/errors.hpp"
#include "hcore/h_bfs.hpp"

namespace hcore {

namespace {

std::uint64_t total_h_degree(const Graph& g, std::span<const VertexId> members, std::uint32_t h, HopBfs& bfs) {
  const AliveMask mask = AliveMask::from_subset(g.num_vertices(), members);
  std::uint64_t total = 0;
  for (VertexId v : members) total += bfs.degree(g, mask, v, h);
  return total;
}

}  // namespace

double average_h_degree(const Graph& g, std::span<const VertexId> members, std::uint32_t h) {
  if (h < 1) throw ParameterError("distance threshold h must be at least 1");
  if (members.empty()) return 0.0;
  HopBfs bfs(g.num_vertices());
  return static_cast<double>(total_h_degree(g, members, h, bfs)) / static_cast<double>(members.size());
}

DensestResult densest_h_core(const Graph& g, std::uint32_t h, const CoreResult& cores) {
  if (h < 1) throw ParameterError("distance threshold h must be at least 1");
  if (g.num_vertices() == 0) throw ContractError("densest subgraph needs a non-empty graph");
  if (cores.core.size() != g.num_vertices()) throw ContractError("core indices do not match the graph");

  HopBfs bfs(g.num_vertices());
  DensestResult best;
  std::uint64_t best_total = 0;
  for (std::uint32_t k : cores.core_values()) {
    std::vector<VertexId> members = cores.core_members(k);
    const std::uint64_t total = total_h_degree(g, members, h, bfs);
    // total / |members| >= best_total / |best|, compared exactly.
    if (best.members.empty() || total * best.members.size() >= best_total * members.size()) {
      best_total = total;
      best.core_index = k;
      best.members = std::move(members);
    }
  }
  best.density = static_cast<double>(best_total) / static_cast<double>(best.members.size());
  return best;
}

DensestResult densest_h_core(const Graph& g, std::uint32_t h, const DecomposeOptions& options, Algorithm algorithm) {
  return densest_h_core(g, h, decompose(g, h, algorithm, options));
}

}  // namespace hcore
