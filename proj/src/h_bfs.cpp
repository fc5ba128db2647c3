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

#include "hcore/h_bfs.hpp"

#include <algorithm>

#include "hcore/errors.hpp"

namespace hcore {

void HopBfs::begin(const Graph& g, VertexId source) {
  if (stamp_.size() < g.num_vertices()) stamp_.resize(g.num_vertices(), 0);
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  stamp_[source] = epoch_;
}

std::span<const HopMember> HopBfs::neighborhood(const Graph& g, const AliveMask& mask, VertexId source,
                                                std::uint32_t h) {
  begin(g, source);
  queue_.clear();
  if (h == 0) return {};

  for (VertexId w : g.neighbors(source)) {
    if (mask.alive(w) && stamp_[w] != epoch_) {
      stamp_[w] = epoch_;
      queue_.push_back({w, 1});
    }
  }
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const HopMember current = queue_[head];
    if (current.distance >= h) break;
    for (VertexId w : g.neighbors(current.vertex)) {
      if (mask.alive(w) && stamp_[w] != epoch_) {
        stamp_[w] = epoch_;
        queue_.push_back({w, current.distance + 1});
      }
    }
  }
  reached_ += queue_.size();
  return queue_;
}

std::size_t HopBfs::degree(const Graph& g, const AliveMask& mask, VertexId source, std::uint32_t h) {
  begin(g, source);
  frontier_.clear();
  if (h == 0) return 0;

  std::size_t count = 0;
  std::size_t level_begin = 0;
  frontier_.push_back(source);
  for (std::uint32_t depth = 1; depth <= h; ++depth) {
    const std::size_t level_end = frontier_.size();
    if (level_begin == level_end) break;
    const bool last = depth == h;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (VertexId w : g.neighbors(frontier_[i])) {
        if (mask.alive(w) && stamp_[w] != epoch_) {
          stamp_[w] = epoch_;
          ++count;
          if (!last) frontier_.push_back(w);
        }
      }
    }
    level_begin = level_end;
  }
  reached_ += count;
  return count;
}

namespace {

void check_query(const AliveMask& mask, VertexId source, std::uint32_t h) {
  if (h < 1) throw ParameterError("distance threshold h must be at least 1");
  if (source >= mask.size() || !mask.alive(source)) {
    throw ContractError("h-BFS source vertex " + std::to_string(source) + " is not alive");
  }
}

}  // namespace

HNeighborhood h_bfs(const Graph& g, const AliveMask& mask, VertexId source, std::uint32_t h) {
  check_query(mask, source, h);
  HopBfs bfs(g.num_vertices());
  auto members = bfs.neighborhood(g, mask, source, h);
  return HNeighborhood{source, h, {members.begin(), members.end()}};
}

std::size_t h_degree(const Graph& g, const AliveMask& mask, VertexId source, std::uint32_t h) {
  check_query(mask, source, h);
  HopBfs bfs(g.num_vertices());
  return bfs.degree(g, mask, source, h);
}

bool induced_diameter_leq(const Graph& g, std::span<const VertexId> subset, std::uint32_t h) {
  if (subset.empty()) throw ContractError("diameter check needs a non-empty vertex set");
  const AliveMask mask = AliveMask::from_subset(g.num_vertices(), subset);
  const std::size_t others = mask.alive_count() - 1;
  HopBfs bfs(g.num_vertices());
  for (std::size_t i = 0; i < mask.size(); ++i) {
    const auto v = static_cast<VertexId>(i);
    if (mask.alive(v) && bfs.degree(g, mask, v, h) != others) return false;
  }
  return true;
}

std::vector<std::uint32_t> single_source_distances(const Graph& g, VertexId source) {
  if (source >= g.num_vertices()) throw ParameterError("vertex id out of range");
  std::vector<std::uint32_t> dist(g.num_vertices(), kUnreachable);
  std::vector<VertexId> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    for (VertexId w : g.neighbors(x)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[x] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace hcore
