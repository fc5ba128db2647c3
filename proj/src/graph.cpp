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

#include "hcore/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "hcore/errors.hpp"

namespace hcore {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  }
  if (labels.size() != n) throw ContractError("label count does not match vertex count");

  std::vector<Edge> directed;
  directed.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw ContractError("edge endpoint out of range");
    if (u == v) continue;
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : directed) ++g.offsets_[u + 1];
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adjacency_.reserve(directed.size());
  for (auto [u, v] : directed) g.adjacency_.push_back(v);

  g.labels_ = std::move(labels);
  g.index_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!g.index_.emplace(g.labels_[v], static_cast<VertexId>(v)).second) {
      throw ContractError("duplicate vertex label '" + g.labels_[v] + "'");
    }
  }
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<VertexId> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Graph Graph::induced(std::span<const VertexId> subset) const {
  std::vector<VertexId> local(num_vertices(), static_cast<VertexId>(-1));
  std::vector<std::string> labels;
  labels.reserve(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    local[subset[i]] = static_cast<VertexId>(i);
    labels.push_back(labels_[subset[i]]);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (VertexId w : neighbors(subset[i])) {
      VertexId j = local[w];
      if (j != static_cast<VertexId>(-1) && i < j) edges.emplace_back(static_cast<VertexId>(i), j);
    }
  }
  const std::size_t n = subset.size();
  return from_edges(n, edges, std::move(labels));
}

Graph parse_edge_list(std::istream& in) {
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;

  auto intern = [&](std::string&& label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(std::move(label));
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r\f\v");
    if (first == std::string::npos || line[first] == '#' || line[first] == '%') continue;

    std::istringstream tokens(line);
    std::string a, b, extra;
    if (!(tokens >> a >> b) || (tokens >> extra)) {
      throw ParseError("expected exactly two vertex labels", line_no);
    }
    VertexId u = intern(std::move(a));
    VertexId v = intern(std::move(b));
    edges.emplace_back(u, v);
  }
  if (in.bad()) throw IoError("read failure");
  if (labels.empty()) throw ParseError("edge list contains no vertices", 0);
  const std::size_t n = labels.size();
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return parse_edge_list(in);
}

}  // namespace hcore
