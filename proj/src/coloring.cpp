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

#include "hcore/applications.hpp"
#include "hcore/errors.hpp"
#include "hcore/h_bfs.hpp"

namespace hcore {

Coloring greedy_distance_h_coloring(const Graph& g, std::uint32_t h, const CoreResult& cores) {
  if (h < 1) throw ParameterError("distance threshold h must be at least 1");
  const std::size_t n = g.num_vertices();
  if (cores.peel_order.size() != n) throw ContractError("coloring needs a complete peeling order");

  constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);
  Coloring result;
  result.color.assign(n, kNone);
  std::vector<std::size_t> used_by(n + 1, n);
  const AliveMask all(n);
  HopBfs bfs(n);
  for (std::size_t i = n; i-- > 0;) {
    const VertexId v = cores.peel_order[i];
    if (v >= n || result.color[v] != kNone) throw ContractError("peeling order is not a permutation");
    for (const HopMember& m : bfs.neighborhood(g, all, v, h)) {
      const std::uint32_t c = result.color[m.vertex];
      if (c != kNone && c < used_by.size()) used_by[c] = i;
    }
    std::uint32_t c = 0;
    while (used_by[c] == i) ++c;
    result.color[v] = c;
    result.num_colors = std::max(result.num_colors, c + 1);
  }
  return result;
}

bool is_distance_h_coloring(const Graph& g, std::uint32_t h, std::span<const std::uint32_t> color) {
  if (h < 1) throw ParameterError("distance threshold h must be at least 1");
  if (color.size() != g.num_vertices()) throw ContractError("color vector does not match the graph");
  const AliveMask all(g.num_vertices());
  HopBfs bfs(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (const HopMember& m : bfs.neighborhood(g, all, v, h)) {
      if (color[m.vertex] == color[v]) return false;
    }
  }
  return true;
}

}  // namespace hcore
