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

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tapswap {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Unordered vertex pair, normalised so that u < v. */
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(int x) const { return u == x || v == x; }
  int other(int x) const { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Simple undirected graph on vertices 0..n-1.
 *
 * Immutable after construction. Duplicate edges collapse; self loops and
 * out-of-range endpoints are rejected.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);
  Graph(int num_vertices, std::span<const Edge> edges);
  Graph(int num_vertices, std::initializer_list<std::pair<int, int>> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  /** Edges sorted lexicographically. */
  const std::vector<Edge>& edges() const { return edges_; }
  /** Neighbours of v in ascending order. */
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const {
    return u != v && adj_matrix_[static_cast<std::size_t>(u) * n_ + v];
  }

  /** Index of the edge {u,v} in edges(), or -1. */
  int edge_index(int u, int v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<char> adj_matrix_;
};

/** Hop distances from source; -1 marks unreachable vertices. */
std::vector<int> bfs_distances(const Graph& graph, int source);

/** Same, but with the vertex `removed` deleted from the graph. */
std::vector<int> bfs_distances_without(
    const Graph& graph, int source, std::span<const int> removed);

bool is_connected(const Graph& graph);
bool is_bipartite(const Graph& graph);

/** Size of a maximum matching (exhaustive; intended for small graphs). */
int max_matching_size(const Graph& graph);

/** Graph with one vertex per edge, adjacent iff the edges share an endpoint. */
Graph line_graph(const Graph& graph);

/**
 * Independent set built greedily by ascending degree, ties broken by vertex
 * id.
 */
std::vector<int> greedy_independent_set(const Graph& graph);

/** Greedy independent set scanning the vertices in the given order. */
std::vector<int> greedy_independent_set(
    const Graph& graph, std::span<const int> order);

bool is_independent_set(const Graph& graph, std::span<const int> vertices);

}  // namespace tapswap
