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

#include "hcore/graph.hpp"

namespace hcore {

/// Per-vertex liveness flags selecting the induced subgraph a traversal sees.
class AliveMask {
 public:
  AliveMask() = default;
  explicit AliveMask(std::size_t n, bool alive = true) : alive_(n, alive ? 1 : 0), count_(alive ? n : 0) {}

  static AliveMask from_subset(std::size_t n, std::span<const VertexId> subset) {
    AliveMask mask(n, false);
    for (VertexId v : subset) mask.revive(v);
    return mask;
  }

  std::size_t size() const { return alive_.size(); }
  std::size_t alive_count() const { return count_; }
  bool alive(VertexId v) const { return alive_[v] != 0; }

  void kill(VertexId v) {
    if (alive_[v]) {
      alive_[v] = 0;
      --count_;
    }
  }
  void revive(VertexId v) {
    if (!alive_[v]) {
      alive_[v] = 1;
      ++count_;
    }
  }

  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    out.reserve(count_);
    for (std::size_t v = 0; v < alive_.size(); ++v) {
      if (alive_[v]) out.push_back(static_cast<VertexId>(v));
    }
    return out;
  }

 private:
  std::vector<std::uint8_t> alive_;
  std::size_t count_ = 0;
};

}  // namespace hcore
