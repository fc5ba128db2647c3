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
#include <vector>

#include "hcore/graph.hpp"

namespace hcore {

/// Buckets of vertices indexed by an integer key in [0, num_buckets).
///
/// Each bucket is an intrusive doubly-linked FIFO list threaded through
/// per-vertex prev/next slots, so insertion, removal and moving a vertex to
/// an arbitrary bucket are O(1) regardless of how far the key jumps.
class BucketQueue {
 public:
  static constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

  BucketQueue() = default;
  BucketQueue(std::size_t num_vertices, std::size_t num_buckets) { reset(num_vertices, num_buckets); }

  void reset(std::size_t num_vertices, std::size_t num_buckets);
  void clear();

  std::size_t num_buckets() const { return head_.size(); }
  bool empty(std::size_t bucket) const { return head_[bucket] == kNone; }
  bool contains(VertexId v) const { return bucket_of_[v] != kNone; }
  /// Bucket currently holding v, or kNone.
  std::uint32_t bucket_of(VertexId v) const { return bucket_of_[v]; }
  std::size_t size() const { return size_; }

  /// Appends v to the tail of `bucket`; v must not be queued.
  void push(VertexId v, std::size_t bucket);
  void remove(VertexId v);
  /// Moves v to the tail of `bucket`. A vertex already in `bucket` keeps its place.
  void move(VertexId v, std::size_t bucket);
  /// Removes and returns the head of `bucket`.
  std::optional<VertexId> pop(std::size_t bucket);

 private:
  std::vector<std::uint32_t> head_;
  std::vector<std::uint32_t> tail_;
  std::vector<std::uint32_t> next_;
  std::vector<std::uint32_t> prev_;
  std::vector<std::uint32_t> bucket_of_;
  std::size_t size_ = 0;
};

}  // namespace hcore
