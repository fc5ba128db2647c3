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

// Small named graphs and seeded random graphs shared by the test suites.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hcore/graph.hpp"

namespace hcore::testing {

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

inline Graph clique_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

/// Center 0 joined to leaves 1..leaves.
inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

/// Triangle {0,1,2} with pendant vertex 3 hanging off 2.
inline Graph triangle_pendant() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}, {2, 3}};
  return Graph::from_edges(4, edges);
}

/// Triangles {0,1,2} and {3,4,5}, no edge between them.
inline Graph two_triangles() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  return Graph::from_edges(6, edges);
}

/// G(n, p) with a fixed seed.
inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

/// Deterministic family of random graphs: n in [n_min, n_max], p from `probabilities`.
inline std::vector<Graph> random_family(std::size_t count, std::size_t n_min, std::size_t n_max,
                                        const std::vector<double>& probabilities, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(n_min, n_max);
  std::vector<Graph> graphs;
  graphs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double p = probabilities[i % probabilities.size()];
    graphs.push_back(erdos_renyi(size(rng), p, rng()));
  }
  return graphs;
}

}  // namespace hcore::testing
