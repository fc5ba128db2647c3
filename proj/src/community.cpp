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

#include "hcore/applications.hpp"
#include "hcore/errors.hpp"
#include "hcore/h_bfs.hpp"

namespace hcore {

namespace {

/// Component of G[mask] containing q.front(), or empty when it misses part of q.
std::vector<VertexId> component_holding(const Graph& g, const AliveMask& mask, std::span<const VertexId> q,
                                        HopBfs& bfs) {
  for (VertexId v : q) {
    if (!mask.alive(v)) return {};
  }
  const auto unbounded = static_cast<std::uint32_t>(std::max<std::size_t>(g.num_vertices(), 1));
  std::vector<VertexId> component{q.front()};
  for (const HopMember& m : bfs.neighborhood(g, mask, q.front(), unbounded)) component.push_back(m.vertex);
  std::sort(component.begin(), component.end());
  for (VertexId v : q) {
    if (!std::binary_search(component.begin(), component.end(), v)) return {};
  }
  return component;
}

Community finish(const Graph& g, std::vector<VertexId> members, std::uint32_t h, std::uint32_t k, HopBfs& bfs) {
  Community c;
  c.core_index = k;
  const AliveMask mask = AliveMask::from_subset(g.num_vertices(), members);
  std::size_t min_degree = std::numeric_limits<std::size_t>::max();
  for (VertexId v : members) min_degree = std::min(min_degree, bfs.degree(g, mask, v, h));
  c.min_h_degree = static_cast<std::uint32_t>(min_degree);
  c.members = std::move(members);
  return c;
}

}  // namespace

Community cocktail_party(const Graph& g, std::span<const VertexId> q, std::uint32_t h, const CoreResult& cores) {
  if (h < 1) throw ParameterError("distance threshold h must be at least 1");
  if (q.empty()) throw ParameterError("query set is empty");
  const std::size_t n = g.num_vertices();
  for (VertexId v : q) {
    if (v >= n) throw ParameterError("query vertex out of range");
  }
  if (cores.core.size() != n) throw ContractError("core indices do not match the graph");

  std::uint32_t ceiling = std::numeric_limits<std::uint32_t>::max();
  for (VertexId v : q) ceiling = std::min(ceiling, cores.core[v]);

  HopBfs bfs(n);
  std::vector<std::uint32_t> levels = cores.core_values();
  std::reverse(levels.begin(), levels.end());
  for (std::uint32_t k : levels) {
    if (k > ceiling || k == 0) continue;
    const std::vector<VertexId> members = cores.core_members(k);
    const AliveMask mask = AliveMask::from_subset(n, members);
    std::vector<VertexId> component = component_holding(g, mask, q, bfs);
    if (!component.empty()) return finish(g, std::move(component), h, k, bfs);
  }

  std::vector<VertexId> component = component_holding(g, AliveMask(n), q, bfs);
  if (component.empty()) throw NoSolutionError("query vertices lie in different connected components");
  return finish(g, std::move(component), h, 0, bfs);
}

Community cocktail_party(const Graph& g, std::span<const VertexId> q, std::uint32_t h,
                         const DecomposeOptions& options, Algorithm algorithm) {
  return cocktail_party(g, q, h, decompose(g, h, algorithm, options));
}

}  // namespace hcore
