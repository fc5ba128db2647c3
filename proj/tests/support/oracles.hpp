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

// Reference implementations used only by tests. None of them share code with
// the library beyond the Graph container.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "hcore/graph.hpp"

namespace hcore::testing {

inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

using DistanceMatrix = std::vector<std::vector<std::uint32_t>>;

/// All-pairs distances in the subgraph induced by the vertices with alive[v].
/// Rows and columns of dead vertices stay kInf (diagonal included).
inline DistanceMatrix floyd_warshall(const Graph& g, const std::vector<bool>& alive) {
  const std::size_t n = g.num_vertices();
  DistanceMatrix d(n, std::vector<std::uint32_t>(n, kInf));
  for (std::size_t u = 0; u < n; ++u) {
    if (!alive[u]) continue;
    d[u][u] = 0;
    for (VertexId w : g.neighbors(static_cast<VertexId>(u)))
      if (alive[w]) d[u][w] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] == kInf) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (d[k][j] != kInf && d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    }
  return d;
}

inline DistanceMatrix floyd_warshall(const Graph& g) {
  return floyd_warshall(g, std::vector<bool>(g.num_vertices(), true));
}

/// Classic k-core indices by bin sort on degrees.
inline std::vector<std::uint32_t> textbook_kcore(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> deg(n);
  std::size_t max_deg = 0;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.degree(static_cast<VertexId>(v)));
    max_deg = std::max<std::size_t>(max_deg, deg[v]);
  }
  std::vector<std::size_t> bin(max_deg + 1, 0);
  for (std::size_t v = 0; v < n; ++v) ++bin[deg[v]];
  std::size_t start = 0;
  for (auto& b : bin) {
    const std::size_t count = b;
    b = start;
    start += count;
  }
  std::vector<std::size_t> pos(n);
  std::vector<VertexId> vert(n);
  for (std::size_t v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]];
    vert[pos[v]] = static_cast<VertexId>(v);
    ++bin[deg[v]];
  }
  for (std::size_t d = max_deg; d >= 1; --d) bin[d] = bin[d - 1];
  if (!bin.empty()) bin[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId v = vert[i];
    for (VertexId u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        const std::uint32_t du = deg[u];
        const std::size_t pu = pos[u];
        const std::size_t pw = bin[du];
        const VertexId w = vert[pw];
        if (u != w) {
          pos[u] = pw;
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return deg;
}

// Bitmask helpers for graphs with at most 64 vertices -----------------------

using Mask = std::uint64_t;

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.num_vertices(), 0);
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    for (VertexId u : g.neighbors(static_cast<VertexId>(v))) adj[v] |= Mask{1} << u;
  return adj;
}

/// Vertices of `set` within distance h of v inside G[set], v excluded.
inline Mask ball(const std::vector<Mask>& adj, Mask set, int v, std::uint32_t h) {
  Mask seen = Mask{1} << v;
  Mask frontier = seen;
  for (std::uint32_t step = 0; step < h && frontier; ++step) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= set & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen & ~(Mask{1} << v);
}

inline bool mask_is_club(const std::vector<Mask>& adj, Mask set, std::uint32_t h) {
  for (Mask s = set; s; s &= s - 1) {
    const int v = std::countr_zero(s);
    if ((ball(adj, set, v, h) | (Mask{1} << v)) != set) return false;
  }
  return true;
}

inline std::vector<VertexId> mask_members(Mask set) {
  std::vector<VertexId> out;
  for (Mask s = set; s; s &= s - 1) out.push_back(static_cast<VertexId>(std::countr_zero(s)));
  return out;
}

inline Mask mask_of(const std::vector<VertexId>& vertices) {
  Mask m = 0;
  for (VertexId v : vertices) m |= Mask{1} << v;
  return m;
}

namespace detail {

// Include/exclude enumeration; only a vertex within G-distance h of every chosen
// vertex may join, since an h-club is pairwise within h in G as well.
inline void club_search(const std::vector<Mask>& adj, const std::vector<Mask>& gball, std::uint32_t h, Mask chosen,
                        Mask candidates, std::size_t& best) {
  const auto chosen_size = static_cast<std::size_t>(std::popcount(chosen));
  if (chosen_size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
  if (candidates == 0) {
    if (mask_is_club(adj, chosen, h)) best = chosen_size;
    return;
  }
  const int v = std::countr_zero(candidates);
  const Mask rest = candidates & ~(Mask{1} << v);
  club_search(adj, gball, h, chosen | (Mask{1} << v), rest & gball[v], best);
  club_search(adj, gball, h, chosen, rest, best);
}

inline void clique_search(const std::vector<Mask>& adj, Mask chosen, Mask candidates, std::size_t& best) {
  const auto size = static_cast<std::size_t>(std::popcount(chosen));
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
  const int v = std::countr_zero(candidates);
  const Mask rest = candidates & ~(Mask{1} << v);
  clique_search(adj, chosen | (Mask{1} << v), rest & adj[v], best);
  clique_search(adj, chosen, rest, best);
}

}  // namespace detail

/// Size of a maximum h-club (n <= 64).
inline std::size_t exhaustive_max_club(const Graph& g, std::uint32_t h) {
  const auto adj = adjacency_masks(g);
  const std::size_t n = g.num_vertices();
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<Mask> gball(n);
  for (std::size_t v = 0; v < n; ++v) gball[v] = ball(adj, all, static_cast<int>(v), h);
  std::size_t best = 0;
  detail::club_search(adj, gball, h, 0, all, best);
  return best;
}

/// Size of a maximum clique (n <= 64).
inline std::size_t exhaustive_max_clique(const Graph& g) {
  const auto adj = adjacency_masks(g);
  const std::size_t n = g.num_vertices();
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::size_t best = 0;
  detail::clique_search(adj, 0, all, best);
  return best;
}

/// Average h-degree of G[set].
inline double mask_density(const std::vector<Mask>& adj, Mask set, std::uint32_t h) {
  if (set == 0) return 0.0;
  std::size_t total = 0;
  for (Mask s = set; s; s &= s - 1) total += std::popcount(ball(adj, set, std::countr_zero(s), h));
  return static_cast<double>(total) / std::popcount(set);
}

/// Maximum of the average h-degree over all non-empty subsets (n <= 20).
inline double exhaustive_densest(const Graph& g, std::uint32_t h) {
  const auto adj = adjacency_masks(g);
  const std::size_t n = g.num_vertices();
  double best = 0.0;
  for (Mask set = 1; set < (Mask{1} << n); ++set) best = std::max(best, mask_density(adj, set, h));
  return best;
}

/// Largest minimum h-degree over all subsets S containing q with G[S] connected,
/// or -1 when no such subset exists (n <= 20).
inline long exhaustive_cocktail_party(const Graph& g, const std::vector<VertexId>& q, std::uint32_t h) {
  const auto adj = adjacency_masks(g);
  const std::size_t n = g.num_vertices();
  const Mask required = mask_of(q);
  long best = -1;
  for (Mask set = 1; set < (Mask{1} << n); ++set) {
    if ((set & required) != required) continue;
    const int first = std::countr_zero(set);
    const Mask reach = ball(adj, set, first, static_cast<std::uint32_t>(n)) | (Mask{1} << first);
    if (reach != set) continue;
    long min_degree = std::numeric_limits<long>::max();
    for (Mask s = set; s; s &= s - 1) {
      const long d = std::popcount(ball(adj, set, std::countr_zero(s), h));
      min_degree = std::min(min_degree, d);
    }
    best = std::max(best, min_degree);
  }
  return best;
}

}  // namespace hcore::testing
