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

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace hcore {

/// Fixed set of worker threads executing index-parallel loops.
///
/// The calling thread participates as worker 0, so a pool of size 1 spawns no
/// threads. Indices are handed out dynamically; callers write results into
/// per-index slots and never depend on which worker ran an index.
class WorkerPool {
 public:
  using Task = std::function<void(std::size_t worker, std::size_t index)>;

  explicit WorkerPool(std::size_t workers = 1);
  ~WorkerPool();

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  std::size_t size() const { return threads_.size() + 1; }

  /// Runs task(worker, i) for every i in [0, count) and blocks until all are
  /// done. Loops shorter than `serial_cutoff` run inline on the caller. The
  /// first exception thrown by a task is rethrown here.
  void parallel_for(std::size_t count, const Task& task, std::size_t serial_cutoff = 16);

 private:
  void worker_loop(std::size_t worker);
  void drain(std::size_t worker);

  std::vector<std::thread> threads_;
  std::mutex mutex_;
  std::condition_variable wake_;
  std::condition_variable done_;
  std::size_t generation_ = 0;
  std::size_t busy_ = 0;
  bool stopping_ = false;

  const Task* task_ = nullptr;
  std::size_t count_ = 0;
  std::atomic<std::size_t> next_{0};
  std::exception_ptr error_;
};

}  // namespace hcore
