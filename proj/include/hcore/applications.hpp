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
#include <string_view>
#include <vector>

#include "hcore/decomposition.hpp"
#include "hcore/graph.hpp"

namespace hcore {

// h-clubs --------------------------------------------------------------------

struct ClubCertificate {
  /// Ascending vertex ids.
  std::vector<VertexId> members;
  std::uint32_t h = 0;
  /// Set once the induced diameter of `members` has been checked to be <= h.
  bool verified = false;

  std::size_t size() const { return members.size(); }
};

/// True when G[subset] has diameter at most h. Throws ContractError on an
/// empty subset.
bool is_h_club(const Graph& g, std::span<const VertexId> subset, std::uint32_t h);

/// Maximum h-club by branch and bound. Only clubs with more than `lower`
/// vertices are searched for; when none exists the returned club is the
/// largest one met along the way and may be as small as a single vertex.
/// Exponential in the worst case.
ClubCertificate exact_h_club(const Graph& g, std::uint32_t h, std::size_t lower = 0);

struct MaxClubResult {
  ClubCertificate club;
  /// Core indices k whose core G[C_k] was handed to the exact solver, in order.
  std::vector<std::uint32_t> inspected_cores;
  std::uint32_t degeneracy = 0;
};

/// Maximum h-club, solving exactly on the cores G[C_k] from the innermost one
/// outwards and stopping once the best club found cannot be beaten by a club
/// living in a lower core.
MaxClubResult max_h_club(const Graph& g, std::uint32_t h, const CoreResult& cores);
MaxClubResult max_h_club(const Graph& g, std::uint32_t h, const DecomposeOptions& options = {},
                         Algorithm algorithm = Algorithm::kLbUb);

// Densest subgraph -----------------------------------------------------------

struct DensestResult {
  std::vector<VertexId> members;
  /// Average h-degree of G[members].
  double density = 0.0;
  std::uint32_t core_index = 0;
};

/// Average h-degree of the subgraph induced by `members` (0 for an empty set).
double average_h_degree(const Graph& g, std::span<const VertexId> members, std::uint32_t h);

/// The core C_k with the largest average h-degree; ties go to the larger k.
/// Throws ContractError on a graph without vertices.
DensestResult densest_h_core(const Graph& g, std::uint32_t h, const CoreResult& cores);
DensestResult densest_h_core(const Graph& g, std::uint32_t h, const DecomposeOptions& options = {},
                             Algorithm algorithm = Algorithm::kLbUb);

// Distance-h coloring ----------------------------------------------------------

struct Coloring {
  std::vector<std::uint32_t> color;
  std::uint32_t num_colors = 0;
};

/// Greedy coloring in reverse peeling order: each vertex gets the smallest
/// color not used by an already colored vertex within distance h in G.
/// Throws ContractError when `cores` carries no complete peeling order.
Coloring greedy_distance_h_coloring(const Graph& g, std::uint32_t h, const CoreResult& cores);

/// True when no two vertices within distance h in G share a color.
bool is_distance_h_coloring(const Graph& g, std::uint32_t h, std::span<const std::uint32_t> color);

// Community search -------------------------------------------------------------

struct Community {
  /// Ascending vertex ids.
  std::vector<VertexId> members;
  /// Smallest h-degree inside G[members].
  std::uint32_t min_h_degree = 0;
  /// The k whose core component was returned (0 for the plain component).
  std::uint32_t core_index = 0;
};

/// Connected vertex set containing every query vertex that maximizes the
/// minimum h-degree: the component holding q of the deepest core in which q
/// is connected. Throws ParameterError for an empty or out-of-range query and
/// NoSolutionError when q spans several components of G.
Community cocktail_party(const Graph& g, std::span<const VertexId> q, std::uint32_t h, const CoreResult& cores);
Community cocktail_party(const Graph& g, std::span<const VertexId> q, std::uint32_t h,
                         const DecomposeOptions& options = {}, Algorithm algorithm = Algorithm::kLbUb);

// Landmarks ----------------------------------------------------------------------

enum class LandmarkStrategy { kCore, kDegree, kRandom };

std::string_view to_string(LandmarkStrategy strategy);
/// Parses "core", "degree" or "random"; throws ParameterError otherwise.
LandmarkStrategy parse_landmark_strategy(std::string_view name);

struct LandmarkIndex {
  std::vector<VertexId> landmarks;
  /// distances[i][v] = d_G(landmarks[i], v), kUnreachable across components.
  std::vector<std::vector<std::uint32_t>> distances;
  std::size_t num_vertices = 0;
};

/// Picks `ell` landmarks.
///   kCore:   uniform sample without replacement from the innermost core,
///            continuing into the next core shell while fewer than ell;
///   kDegree: the ell largest h-degrees, ties by smaller id;
///   kRandom: uniform sample without replacement from all vertices.
/// Throws ParameterError when ell is 0 or exceeds the vertex count.
std::vector<VertexId> choose_landmarks(const Graph& g, std::uint32_t h, std::size_t ell, std::uint64_t seed,
                                       LandmarkStrategy strategy, const CoreResult& cores);
std::vector<VertexId> choose_landmarks(const Graph& g, std::uint32_t h, std::size_t ell, std::uint64_t seed,
                                       LandmarkStrategy strategy = LandmarkStrategy::kCore);

/// One full BFS per landmark.
LandmarkIndex build_landmark_index(const Graph& g, std::vector<VertexId> landmarks);

LandmarkIndex select_landmarks(const Graph& g, std::uint32_t h, std::size_t ell, std::uint64_t seed,
                               LandmarkStrategy strategy = LandmarkStrategy::kCore);

struct DistanceEstimate {
  std::uint32_t lower = 0;
  /// kUnreachable when no landmark reaches both endpoints.
  std::uint32_t upper = 0;
  /// (lower + upper) / 2, or +infinity when upper is kUnreachable.
  double estimate = 0.0;
};

/// Triangle-inequality bounds on d(s, t) over the landmarks reaching both.
/// Throws ParameterError when s or t is out of range.
DistanceEstimate estimate_distance(const LandmarkIndex& index, VertexId s, VertexId t);

}  // namespace hcore
