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

#include "hcore/bucket_queue.hpp"

#include <algorithm>

#include "hcore/errors.hpp"

namespace hcore {

void BucketQueue::reset(std::size_t num_vertices, std::size_t num_buckets) {
  head_.assign(num_buckets, kNone);
  tail_.assign(num_buckets, kNone);
  next_.assign(num_vertices, kNone);
  prev_.assign(num_vertices, kNone);
  bucket_of_.assign(num_vertices, kNone);
  size_ = 0;
}

void BucketQueue::clear() {
  std::fill(head_.begin(), head_.end(), kNone);
  std::fill(tail_.begin(), tail_.end(), kNone);
  std::fill(bucket_of_.begin(), bucket_of_.end(), kNone);
  size_ = 0;
}

void BucketQueue::push(VertexId v, std::size_t bucket) {
  if (bucket >= head_.size()) throw ContractError("bucket index out of range");
  const auto b = static_cast<std::uint32_t>(bucket);
  prev_[v] = tail_[b];
  next_[v] = kNone;
  if (tail_[b] == kNone) {
    head_[b] = v;
  } else {
    next_[tail_[b]] = v;
  }
  tail_[b] = v;
  bucket_of_[v] = b;
  ++size_;
}

void BucketQueue::remove(VertexId v) {
  const std::uint32_t b = bucket_of_[v];
  if (b == kNone) return;
  if (prev_[v] == kNone) {
    head_[b] = next_[v];
  } else {
    next_[prev_[v]] = next_[v];
  }
  if (next_[v] == kNone) {
    tail_[b] = prev_[v];
  } else {
    prev_[next_[v]] = prev_[v];
  }
  bucket_of_[v] = kNone;
  --size_;
}

void BucketQueue::move(VertexId v, std::size_t bucket) {
  if (bucket_of_[v] == bucket) return;
  remove(v);
  push(v, bucket);
}

std::optional<VertexId> BucketQueue::pop(std::size_t bucket) {
  const std::uint32_t v = head_[bucket];
  if (v == kNone) return std::nullopt;
  remove(v);
  return v;
}

}  // namespace hcore
