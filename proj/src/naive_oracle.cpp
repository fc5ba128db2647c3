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
#include <queue>
#include <random>

#include "hcore/decomposition.hpp"
#include "hcore/errors.hpp"

namespace hcore {

namespace {

// Plain BFS with a fresh distance array; intentionally independent of HopBfs.
std::size_t count_within(const Graph& g, const std::vector<bool>& alive, VertexId source, std::uint32_t h) {
  constexpr std::uint32_t kUnseen = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> dist(g.num_vertices(), kUnseen);
  std::queue<VertexId> queue;
  dist[source] = 0;
  queue.push(source);
  std::size_t count = 0;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop();
    if (dist[x] == h) continue;
    for (VertexId w : g.neighbors(x)) {
      if (alive[w] && dist[w] == kUnseen) {
        dist[w] = dist[x] + 1;
        ++count;
        queue.push(w);
      }
    }
  }
  return count;
}

}  // namespace

CoreResult naive_core_decomposition(const Graph& g, std::uint32_t h, DeletionOrder order, std::uint64_t seed) {
  if (h < 1) throw ParameterError("distance threshold h must be at least 1");
  const std::size_t n = g.num_vertices();

  std::vector<VertexId> sequence(n);
  std::iota(sequence.begin(), sequence.end(), 0);
  if (order == DeletionOrder::kDescending) {
    std::reverse(sequence.begin(), sequence.end());
  } else if (order == DeletionOrder::kShuffled) {
    std::mt19937_64 rng(seed);
    std::shuffle(sequence.begin(), sequence.end(), rng);
  }

  CoreResult result;
  result.h = h;
  result.core.assign(n, 0);
  for (std::uint32_t k = 1;; ++k) {
    std::vector<bool> alive(n, true);
    std::size_t alive_count = n;
    for (;;) {
      auto victim = std::find_if(sequence.begin(), sequence.end(), [&](VertexId v) {
        return alive[v] && count_within(g, alive, v, h) < k;
      });
      if (victim == sequence.end()) break;
      alive[*victim] = false;
      --alive_count;
    }
    if (alive_count == 0) break;
    for (std::size_t v = 0; v < n; ++v) {
      if (alive[v]) result.core[v] = k;
    }
  }
  return result;
}

}  // namespace hcore
