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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hcore {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Internal ids are dense in [0, n). Every vertex carries the external label it
/// was read with; neighbor lists are sorted ascending, so traversals that scan
/// neighbors in list order are deterministic.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph over ids [0, n). Self-loops are dropped and duplicate or
  /// reversed edges collapsed. Labels default to the decimal ids.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {});

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return adjacency_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(VertexId u, VertexId v) const;

  const std::string& label(VertexId v) const { return labels_[v]; }
  std::optional<VertexId> find(std::string_view label) const;

  /// Subgraph induced by `subset`; vertex i of the result is subset[i] and keeps its label.
  Graph induced(std::span<const VertexId> subset) const;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
};

/// Reads a whitespace-separated edge list. Lines whose first non-blank
/// character is '#' or '%' and blank lines are skipped; labels are mapped to
/// internal ids in first-seen order. Throws ParseError on a line that does not
/// hold exactly two tokens or when no vertex is read.
Graph parse_edge_list(std::istream& in);

/// parse_edge_list over a file; throws IoError when the file cannot be opened.
Graph load_edge_list(const std::filesystem::path& path);

}  // namespace hcore
