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
#include <numeric>

#include "hcore/applications.hpp"
#include "hcore/errors.hpp"
#include "hcore/h_bfs.hpp"

namespace hcore {

namespace {

/// Branch and bound over (candidates W, fixed F). Every club still sought lies
/// inside W, contains F and has more than best_size_ vertices.
class ClubSearch {
 public:
  ClubSearch(const Graph& g, std::uint32_t h, std::size_t lower)
      : g_(g), h_(h), bfs_(g.num_vertices()), mask_(g.num_vertices(), false), mark_(g.num_vertices(), 0),
        best_size_(lower) {}

  std::size_t best_size() const { return best_size_; }
  const std::vector<VertexId>& best() const { return best_; }

  /// Ball of radius h around v in G[alive], v included, ascending.
  std::vector<VertexId> ball(const AliveMask& alive, VertexId v) {
    std::vector<VertexId> out{v};
    for (const HopMember& m : bfs_.neighborhood(g_, alive, v, h_)) out.push_back(m.vertex);
    std::sort(out.begin(), out.end());
    return out;
  }

  void search(std::vector<VertexId> w, std::vector<VertexId> fixed) {
    std::vector<std::uint32_t> degree;
    for (;;) {
      if (w.size() <= best_size_) return;
      for (VertexId v : w) mask_.revive(v);
      degree.resize(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) degree[i] = static_cast<std::uint32_t>(bfs_.degree(g_, mask_, w[i], h_));

      std::vector<std::uint8_t> keep(w.size(), 1);
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (degree[i] + 1 <= best_size_) keep[i] = 0;
      }
      for (VertexId f : fixed) {
        const std::uint32_t tag = next_tag();
        mark_[f] = tag;
        for (const HopMember& m : bfs_.neighborhood(g_, mask_, f, h_)) mark_[m.vertex] = tag;
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (mark_[w[i]] != tag) keep[i] = 0;
        }
      }

      std::vector<VertexId> kept;
      std::vector<std::uint32_t> kept_degree;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (keep[i]) {
          kept.push_back(w[i]);
          kept_degree.push_back(degree[i]);
        }
      }
      if (kept.size() == w.size()) break;
      for (VertexId v : w) mask_.kill(v);
      for (VertexId f : fixed) {
        if (!std::binary_search(kept.begin(), kept.end(), f)) return;
      }
      w = std::move(kept);
    }

    const auto full = static_cast<std::uint32_t>(w.size() - 1);
    if (std::all_of(degree.begin(), degree.end(), [&](std::uint32_t d) { return d == full; })) {
      for (VertexId v : w) mask_.kill(v);
      best_ = w;
      best_size_ = w.size();
      return;
    }

    std::size_t pick = w.size();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (std::binary_search(fixed.begin(), fixed.end(), w[i])) continue;
      if (pick == w.size() || degree[i] < degree[pick]) pick = i;
    }
    const VertexId u = w[pick];
    std::vector<VertexId> with_u = ball(mask_, u);
    for (VertexId v : w) mask_.kill(v);

    std::vector<VertexId> without_u = w;
    without_u.erase(without_u.begin() + static_cast<std::ptrdiff_t>(pick));
    search(std::move(without_u), fixed);

    fixed.insert(std::upper_bound(fixed.begin(), fixed.end(), u), u);
    search(std::move(with_u), std::move(fixed));
  }

 private:
  std::uint32_t next_tag() {
    if (++tag_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      tag_ = 1;
    }
    return tag_;
  }

  const Graph& g_;
  std::uint32_t h_;
  HopBfs bfs_;
  AliveMask mask_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t tag_ = 0;
  std::size_t best_size_;
  std::vector<VertexId> best_;
};

std::vector<VertexId> all_vertices(const Graph& g) {
  std::vector<VertexId> all(g.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

/// Exact search given the core index of every vertex of g.
ClubCertificate solve_club(const Graph& g, std::uint32_t h, std::size_t lower, std::span<const std::uint32_t> core) {
  ClubCertificate cert;
  cert.h = h;
  const std::size_t n = g.num_vertices();
  if (n == 0) return cert;
  const std::vector<VertexId> all = all_vertices(g);
  if (induced_diameter_leq(g, all, h)) {
    cert.members = all;
    cert.verified = true;
    return cert;
  }

  TraversalPool pool(n, 1);
  const std::vector<std::uint32_t> degree = compute_h_degrees(g, h, pool);
  std::vector<VertexId> order = all;
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    if (core[a] != core[b]) return core[a] > core[b];
    if (degree[a] != degree[b]) return degree[a] > degree[b];
    return a < b;
  });

  ClubSearch search(g, h, lower);
  AliveMask remaining(n);
  for (VertexId v : order) {
    // A club with more than b vertices lies in the (b, h)-core.
    if (core[v] < search.best_size()) break;
    std::vector<VertexId> w = search.ball(remaining, v);
    std::erase_if(w, [&](VertexId u) { return core[u] < search.best_size(); });
    search.search(std::move(w), {v});
    remaining.kill(v);
  }

  cert.members = search.best();
  if (cert.members.empty()) cert.members = {order.front()};
  cert.verified = induced_diameter_leq(g, cert.members, h);
  return cert;
}

}  // namespace

bool is_h_club(const Graph& g, std::span<const VertexId> subset, std::uint32_t h) {
  if (h < 1) throw ParameterError("distance threshold h must be at least 1");
  return induced_diameter_leq(g, subset, h);
}

ClubCertificate exact_h_club(const Graph& g, std::uint32_t h, std::size_t lower) {
  if (h < 1) throw ParameterError("distance threshold h must be at least 1");
  const std::vector<VertexId> all = all_vertices(g);
  if (!all.empty() && induced_diameter_leq(g, all, h)) return ClubCertificate{all, h, true};
  const CoreResult cores = decompose_hlb(g, h);
  return solve_club(g, h, lower, cores.core);
}

MaxClubResult max_h_club(const Graph& g, std::uint32_t h, const CoreResult& cores) {
  if (h < 1) throw ParameterError("distance threshold h must be at least 1");
  if (cores.core.size() != g.num_vertices()) throw ContractError("core indices do not match the graph");
  MaxClubResult result;
  result.club.h = h;
  result.degeneracy = cores.max_core();
  if (g.num_vertices() == 0) return result;

  std::vector<VertexId> best;
  std::size_t previous_size = 0;
  std::uint32_t k = result.degeneracy;
  for (;;) {
    const std::vector<VertexId> members = cores.core_members(k);
    if (members.size() != previous_size) {
      previous_size = members.size();
      result.inspected_cores.push_back(k);
      std::vector<std::uint32_t> sub_core(members.size());
      for (std::size_t i = 0; i < members.size(); ++i) sub_core[i] = cores.core[members[i]];
      const ClubCertificate found = solve_club(g.induced(members), h, best.size(), sub_core);
      if (found.size() > best.size() && found.verified) {
        best.clear();
        for (VertexId local : found.members) best.push_back(members[local]);
        std::sort(best.begin(), best.end());
      }
    }
    if (best.size() > k || k == 0) break;
    k = std::min<std::uint32_t>(k - 1, static_cast<std::uint32_t>(best.size()));
  }

  result.club.members = std::move(best);
  result.club.verified = induced_diameter_leq(g, result.club.members, h);
  return result;
}

MaxClubResult max_h_club(const Graph& g, std::uint32_t h, const DecomposeOptions& options, Algorithm algorithm) {
  return max_h_club(g, h, decompose(g, h, algorithm, options));
}

}  // namespace hcore
