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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hcore/alive_mask.hpp"
#include "hcore/graph.hpp"

namespace hcore {

struct HopMember {
  VertexId vertex;
  std::uint32_t distance;

  friend bool operator==(const HopMember&, const HopMember&) = default;
};

/// Vertices within distance [1, h] of `source` inside a masked induced subgraph.
struct HNeighborhood {
  VertexId source = 0;
  std::uint32_t h = 0;
  std::vector<HopMember> members;

  std::size_t size() const { return members.size(); }
};

/// Reusable h-bounded breadth-first traversal.
///
/// Visited marks are epoch stamps, so a traversal costs time proportional to
/// the part of the graph it touches rather than to n. One instance is not
/// thread-safe; give each worker its own. Every traversal adds the number of
/// vertices it reached to a running counter (the "distance computations"
/// statistic reported by the decomposition algorithms).
class HopBfs {
 public:
  explicit HopBfs(std::size_t n = 0) : stamp_(n, 0) {}

  /// Members in breadth-first order: ascending distance, neighbors scanned in
  /// ascending id. The span is valid until the next call on this instance.
  std::span<const HopMember> neighborhood(const Graph& g, const AliveMask& mask, VertexId source, std::uint32_t h);

  /// Size of the h-neighborhood without materializing it.
  std::size_t degree(const Graph& g, const AliveMask& mask, VertexId source, std::uint32_t h);

  std::uint64_t reached() const { return reached_; }
  void reset_reached() { reached_ = 0; }

 private:
  void begin(const Graph& g, VertexId source);

  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<HopMember> queue_;
  std::vector<VertexId> frontier_;
  std::uint64_t reached_ = 0;
};

/// h-neighborhood of a live `source`; throws ContractError if it is dead and
/// ParameterError if h < 1.
HNeighborhood h_bfs(const Graph& g, const AliveMask& mask, VertexId source, std::uint32_t h);

/// |h_bfs(g, mask, source, h)|, same preconditions.
std::size_t h_degree(const Graph& g, const AliveMask& mask, VertexId source, std::uint32_t h);

/// True iff the subgraph induced by `subset` has diameter at most h, i.e. the
/// subset is an h-club. Throws ContractError on an empty subset.
bool induced_diameter_leq(const Graph& g, std::span<const VertexId> subset, std::uint32_t h);

inline constexpr std::uint32_t kUnreachable = static_cast<std::uint32_t>(-1);

/// Unbounded BFS distances from `source` in the whole graph; kUnreachable
/// marks vertices in other components.
std::vector<std::uint32_t> single_source_distances(const Graph& g, VertexId source);

}  // namespace hcore
