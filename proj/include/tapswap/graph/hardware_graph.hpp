// Copyright 2026 The tapswap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tapswap/graph/graph.hpp"

namespace tapswap {

/** Dense n x n matrix of hop counts. */
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<int> values)
      : n_(n), values_(std::move(values)) {}

  int size() const { return n_; }
  int operator()(int i, int j) const {
    return values_[static_cast<std::size_t>(i) * n_ + j];
  }
  const int* row(int i) const {
    return values_.data() + static_cast<std::size_t>(i) * n_;
  }

 private:
  int n_ = 0;
  std::vector<int> values_;
};

/**
 * All-pairs hop counts by repeated BFS.
 *
 * Throws GraphError naming an unreachable pair when the graph is
 * disconnected.
 */
DistanceMatrix all_pairs_distances(const Graph& graph);

/** Connected hardware connectivity graph with cached distances. */
class HardwareGraph {
 public:
  HardwareGraph() = default;
  explicit HardwareGraph(Graph graph);

  const Graph& graph() const { return graph_; }
  int num_vertices() const { return graph_.num_vertices(); }
  const std::vector<Edge>& edges() const { return graph_.edges(); }
  const std::vector<int>& neighbours(int v) const {
    return graph_.neighbours(v);
  }
  bool adjacent(int u, int v) const { return graph_.adjacent(u, v); }

  int distance(int i, int j) const { return dist_(i, j); }
  const DistanceMatrix& distances() const { return dist_; }
  int diameter() const { return diameter_; }
  bool bipartite() const { return bipartite_; }
  int max_matching() const { return max_matching_; }

 private:
  Graph graph_;
  DistanceMatrix dist_;
  int diameter_ = 0;
  bool bipartite_ = true;
  int max_matching_ = 0;
};

/** Same vertices; {i,j} is an edge iff distance(i,j) <= d + 1. */
HardwareGraph relaxed_graph(const HardwareGraph& graph, int d);

namespace presets {
HardwareGraph line(int n);
HardwareGraph ring(int n);
/** 2 x n/2 mesh; vertex r * (n/2) + c. */
HardwareGraph ladder(int n);
HardwareGraph grid(int rows, int cols);
HardwareGraph complete(int n);
/** Vertex 0 is the centre. */
HardwareGraph star(int n);
}  // namespace presets

/** Parses `line:n`, `ring:n`, `ladder:n`, `grid:rxc`, `complete:n`, `star:n`. */
HardwareGraph parse_preset(std::string_view spec);

/**
 * Graph file: first (non-comment) line holds n, then one `i j` edge per line.
 * `#` starts a comment.
 */
HardwareGraph parse_graph_file(std::string_view text);
std::string write_graph_file(const HardwareGraph& graph);

/** Preset spec if it parses as one, otherwise a path to a graph file. */
HardwareGraph load_graph(const std::string& spec_or_path);

}  // namespace tapswap
