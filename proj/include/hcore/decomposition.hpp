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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hcore/alive_mask.hpp"
#include "hcore/bucket_queue.hpp"
#include "hcore/graph.hpp"
#include "hcore/traversal_pool.hpp"

namespace hcore {

// (k,h)-core decomposition: for a distance threshold h, the (k,h)-core is the
// maximal vertex set C_k in which every vertex has at least k other members
// within distance h inside G[C_k]. The core index of v is the largest k with
// v in C_k. Three exact algorithms are provided:
//
//   kBz   - bucket peeling that recomputes the h-degree of every h-neighbor
//           of each removed vertex;
//   kLb   - the same peeling seeded with a lower bound on the core index, so
//           vertices whose bound has not been reached are never updated;
//   kLbUb - additionally computes an upper bound and processes disjoint core
//           ranges top-down, each on the subgraph of vertices whose upper
//           bound reaches the range.
//
// All three produce identical core indices for any worker count.

enum class Algorithm { kBz, kLb, kLbUb };

std::string_view to_string(Algorithm algorithm);
/// Parses "bz", "lb" or "lbub"; throws ParameterError otherwise.
Algorithm parse_algorithm(std::string_view name);

struct DecomposeOptions {
  std::size_t threads = 1;
  /// Number of distinct upper-bound values per interval (kLbUb only).
  std::size_t partition_size = 1;
  /// Keep per-vertex bound vectors in CoreResult::bounds.
  bool record_bounds = false;
};

/// Per-vertex bounds gathered during a run. A vector is empty when the
/// algorithm that produced the result does not compute that bound.
struct BoundDiagnostics {
  std::vector<std::uint32_t> lb1;
  std::vector<std::uint32_t> lb2;
  std::vector<std::uint32_t> lb3;
  std::vector<std::uint32_t> ub;
  std::vector<std::uint32_t> h_degree;
};

struct CoreStats {
  /// Sum of the sizes of all traversals bounded by h. The shorter-radius
  /// passes that produce LB1 and LB2 are not included.
  std::uint64_t distance_computations = 0;
  double wall_seconds = 0.0;
};

struct CoreResult {
  std::uint32_t h = 0;
  std::vector<std::uint32_t> core;
  /// A valid peeling order: each vertex has h-degree at most core(v) in the
  /// subgraph induced by itself and the vertices after it.
  std::vector<VertexId> peel_order;
  std::optional<BoundDiagnostics> bounds;
  CoreStats stats;

  /// h-degeneracy: the largest k with a non-empty (k,h)-core.
  std::uint32_t max_core() const;
  /// Number of distinct core-index values.
  std::size_t distinct_cores() const;
  /// Distinct core-index values, ascending.
  std::vector<std::uint32_t> core_values() const;
  /// C_k = {v : core(v) >= k}, ascending ids.
  std::vector<VertexId> core_members(std::uint32_t k) const;
};

/// How closely a per-vertex bound tracks the core index, over vertices with
/// core(v) > 0: mean of |bound(v) - core(v)| / core(v), and the fraction of
/// those vertices with bound(v) == core(v).
struct BoundAccuracy {
  double mean_relative_error = 0.0;
  double exact_fraction = 0.0;
  std::size_t vertices = 0;
};

BoundAccuracy bound_accuracy(std::span<const std::uint32_t> bound, std::span<const std::uint32_t> core);

// Bounds --------------------------------------------------------------------

/// h-degree of every vertex in the full graph.
std::vector<std::uint32_t> compute_h_degrees(const Graph& g, std::uint32_t h, TraversalPool& pool);

/// LB1(v): the floor(h/2)-degree of v in G (identically 0 for h = 1).
std::vector<std::uint32_t> compute_lb1(const Graph& g, std::uint32_t h, TraversalPool& pool);
std::vector<std::uint32_t> compute_lb1(const Graph& g, std::uint32_t h);

/// LB2(v): the largest LB1 among v and the vertices within ceil(h/2) of v.
std::vector<std::uint32_t> compute_lb2(const Graph& g, std::uint32_t h, std::span<const std::uint32_t> lb1,
                                       TraversalPool& pool);
std::vector<std::uint32_t> compute_lb2(const Graph& g, std::uint32_t h, std::span<const std::uint32_t> lb1);

/// UB(v): classic core index of v in the power graph G^h, computed without
/// materializing it (h-neighborhoods in G are re-listed at each pop and every
/// unpopped member loses exactly one unit). `h_degrees` may be supplied to
/// skip the initial degree pass.
std::vector<std::uint32_t> compute_ub(const Graph& g, std::uint32_t h, TraversalPool& pool,
                                      std::span<const std::uint32_t> h_degrees = {});
std::vector<std::uint32_t> compute_ub(const Graph& g, std::uint32_t h);

struct ImprovedBounds {
  /// Members of the input subset whose core index may still reach k.
  std::vector<VertexId> survivors;
  /// Indexed by vertex id; max(LB2(v), min h-degree inside G[subset]) for
  /// subset members, 0 elsewhere.
  std::vector<std::uint32_t> lb3;
  std::uint32_t min_degree = 0;
};

/// Tightens LB2 on `subset` and discards members whose h-degree upper bound
/// (initial induced h-degree minus one per deleted h-neighbor) drops below k.
ImprovedBounds improve_lb(const Graph& g, std::span<const VertexId> subset, std::uint32_t h, std::uint32_t k,
                          std::span<const std::uint32_t> lb2, TraversalPool& pool);
ImprovedBounds improve_lb(const Graph& g, std::span<const VertexId> subset, std::uint32_t h, std::uint32_t k,
                          std::span<const std::uint32_t> lb2);

// Interval peeling ------------------------------------------------------------

struct CoreInterval {
  std::uint32_t k_min = 0;
  std::uint32_t k_max = 0;

  friend bool operator==(const CoreInterval&, const CoreInterval&) = default;
};

/// Descending, contiguous core-index intervals, each covering `partition_size`
/// distinct upper-bound values; the lowest interval starts at lb0.
struct PartitionPlan {
  std::vector<CoreInterval> intervals;
  std::size_t partition_size = 1;
  std::vector<std::uint32_t> upper_bounds;  // distinct, descending
  std::uint32_t lb0 = 0;
};

/// Builds the interval plan from (possibly repeated) upper-bound values.
/// Throws ParameterError when partition_size < 1 and ContractError when lb0
/// exceeds the smallest upper bound.
PartitionPlan make_partition_plan(std::span<const std::uint32_t> upper_bounds, std::uint32_t lb0,
                                  std::size_t partition_size);

/// Mutable state shared by successive interval peels.
struct PeelState {
  explicit PeelState(std::size_t n);

  AliveMask mask;
  BucketQueue buckets;
  /// true: the vertex's bucket is a lower bound on its core index and its
  /// h-degree is not tracked; false: `degree` holds its current h-degree.
  std::vector<std::uint8_t> set_lb;
  std::vector<std::uint32_t> degree;
  std::vector<std::uint32_t> core;
  std::vector<std::uint8_t> finalized;
  std::vector<VertexId> finalize_order;
};

/// Assigns the core index of every live vertex whose index lies in
/// [k_min, k_max], peeling buckets k_min-1 .. k_max. Popping a set_lb vertex
/// computes its h-degree and re-buckets it; popping a tracked vertex at level
/// k >= k_min finalizes it at k. Either way a tracked vertex is then removed
/// and its tracked h-neighbors are updated: recomputed when they were closer
/// than h to it, decremented when exactly at distance h.
void core_decomp_interval(const Graph& g, std::uint32_t h, std::uint32_t k_min, std::uint32_t k_max,
                          PeelState& state, TraversalPool& pool);

// Decompositions ---------------------------------------------------------------

CoreResult decompose_hbz(const Graph& g, std::uint32_t h, const DecomposeOptions& options = {});
CoreResult decompose_hlb(const Graph& g, std::uint32_t h, const DecomposeOptions& options = {});
CoreResult decompose_hlbub(const Graph& g, std::uint32_t h, const DecomposeOptions& options = {});
CoreResult decompose(const Graph& g, std::uint32_t h, Algorithm algorithm, const DecomposeOptions& options = {});

enum class DeletionOrder { kAscending, kDescending, kShuffled };

/// Reference decomposition straight from the definition, for testing on small
/// graphs: each C_k is computed independently from the full vertex set by
/// deleting, one at a time, the first vertex (in `order`) whose h-degree in the
/// current induced subgraph is below k, recomputing all h-degrees from scratch
/// after every deletion. Shares no traversal code with the algorithms above.
/// The result carries no peeling order and no statistics.
CoreResult naive_core_decomposition(const Graph& g, std::uint32_t h, DeletionOrder order = DeletionOrder::kAscending,
                                    std::uint64_t seed = 0);

}  // namespace hcore
