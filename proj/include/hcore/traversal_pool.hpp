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
#include "hcore/h_bfs.hpp"
#include "hcore/worker_pool.hpp"

namespace hcore {

/// A worker pool paired with one HopBfs scratch per worker.
///
/// Batched h-degree computations fan out over the workers; everything else
/// (neighborhood listing, bucket mutation) runs on the caller with the
/// worker-0 scratch. Results land in caller-provided per-index slots, so they
/// do not depend on the worker count.
class TraversalPool {
 public:
  TraversalPool(std::size_t num_vertices, std::size_t threads) : workers_(threads) {
    scratch_.reserve(workers_.size());
    for (std::size_t w = 0; w < workers_.size(); ++w) scratch_.emplace_back(num_vertices);
  }

  std::size_t threads() const { return workers_.size(); }
  HopBfs& primary() { return scratch_[0]; }

  /// Runs task(scratch, i) for i in [0, count) across the workers.
  template <class Task>
  void for_each(std::size_t count, Task&& task) {
    workers_.parallel_for(count, [&](std::size_t worker, std::size_t i) { task(scratch_[worker], i); });
  }

  /// out[i] = h-degree of sources[i] in the masked subgraph.
  void degrees(const Graph& g, const AliveMask& mask, std::span<const VertexId> sources, std::uint32_t h,
               std::span<std::uint32_t> out) {
    workers_.parallel_for(sources.size(), [&](std::size_t worker, std::size_t i) {
      out[i] = static_cast<std::uint32_t>(scratch_[worker].degree(g, mask, sources[i], h));
    });
  }

  /// out[v] = h-degree of every vertex v of g in the masked subgraph (0 for dead vertices).
  std::vector<std::uint32_t> all_degrees(const Graph& g, const AliveMask& mask, std::uint32_t h) {
    std::vector<std::uint32_t> out(g.num_vertices(), 0);
    workers_.parallel_for(g.num_vertices(), [&](std::size_t worker, std::size_t v) {
      const auto id = static_cast<VertexId>(v);
      if (mask.alive(id)) out[v] = static_cast<std::uint32_t>(scratch_[worker].degree(g, mask, id, h));
    });
    return out;
  }

  /// Total vertices reached by all traversals run through this pool.
  std::uint64_t reached() const {
    std::uint64_t total = 0;
    for (const auto& s : scratch_) total += s.reached();
    return total;
  }

 private:
  WorkerPool workers_;
  std::vector<HopBfs> scratch_;
};

}  // namespace hcore
