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

#include "tapswap/graph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace tapswap {

namespace {

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw GraphError(
        "vertex " + std::to_string(v) + " out of range for " +
        std::to_string(n) + " vertices");
  }
}

}  // namespace

Graph::Graph(int num_vertices) : Graph(num_vertices, std::span<const Edge>{}) {}

Graph::Graph(int num_vertices, std::span<const Edge> edges)
    : n_(num_vertices),
      adj_(static_cast<std::size_t>(std::max(num_vertices, 0))),
      adj_matrix_(
          static_cast<std::size_t>(std::max(num_vertices, 0)) *
              static_cast<std::size_t>(std::max(num_vertices, 0)),
          0) {
  if (num_vertices < 0) throw GraphError("negative vertex count");
  for (const Edge& e : edges) {
    check_vertex(n_, e.u);
    check_vertex(n_, e.v);
    if (e.u == e.v) {
      throw GraphError("self loop on vertex " + std::to_string(e.u));
    }
    char& slot = adj_matrix_[static_cast<std::size_t>(e.u) * n_ + e.v];
    if (slot) continue;
    slot = 1;
    adj_matrix_[static_cast<std::size_t>(e.v) * n_ + e.u] = 1;
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph::Graph(int num_vertices, std::initializer_list<std::pair<int, int>> edges)
    : Graph(num_vertices, [&] {
        std::vector<Edge> list;
        for (auto [a, b] : edges) {
          if (a == b) {
            throw GraphError("self loop on vertex " + std::to_string(a));
          }
          list.emplace_back(a, b);
        }
        return list;
      }()) {}

int Graph::edge_index(int u, int v) const {
  const Edge key(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::vector<int> bfs_distances(const Graph& graph, int source) {
  return bfs_distances_without(graph, source, {});
}

std::vector<int> bfs_distances_without(
    const Graph& graph, int source, std::span<const int> removed) {
  std::vector<int> dist(graph.num_vertices(), -1);
  for (int r : removed) dist[r] = -2;
  if (dist[source] == -2) {
    std::replace(dist.begin(), dist.end(), -2, -1);
    return dist;
  }
  std::queue<int> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int w : graph.neighbours(u)) {
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  std::replace(dist.begin(), dist.end(), -2, -1);
  return dist;
}

bool is_connected(const Graph& graph) {
  if (graph.num_vertices() == 0) return true;
  const auto dist = bfs_distances(graph, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_bipartite(const Graph& graph) {
  std::vector<int> colour(graph.num_vertices(), -1);
  for (int s = 0; s < graph.num_vertices(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<int> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int w : graph.neighbours(u)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          frontier.push(w);
        } else if (colour[w] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

// Edmonds' blossom algorithm, O(V^3).
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g),
        n_(g.num_vertices()),
        match_(n_, -1),
        parent_(n_),
        base_(n_),
        used_(n_),
        blossom_(n_) {}

  int run() {
    int size = 0;
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      // Cheap greedy start.
      for (int w : g_.neighbours(v)) {
        if (match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          ++size;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int end = find_path(v);
      if (end == -1) continue;
      ++size;
      while (end != -1) {
        const int pv = parent_[end];
        const int ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
    return size;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : g_.neighbours(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, blossom_;
};

}  // namespace

int max_matching_size(const Graph& graph) {
  return BlossomMatcher(graph).run();
}

Graph line_graph(const Graph& graph) {
  const auto& edges = graph.edges();
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      if (a.contains(b.u) || a.contains(b.v)) {
        out.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return Graph(static_cast<int>(edges.size()), out);
}

std::vector<int> greedy_independent_set(const Graph& graph) {
  std::vector<int> order(graph.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return graph.degree(a) < graph.degree(b);
  });
  return greedy_independent_set(graph, order);
}

std::vector<int> greedy_independent_set(
    const Graph& graph, std::span<const int> order) {
  std::vector<char> blocked(graph.num_vertices(), 0);
  std::vector<int> chosen;
  for (int v : order) {
    if (blocked[v]) continue;
    chosen.push_back(v);
    blocked[v] = 1;
    for (int w : graph.neighbours(v)) blocked[w] = 1;
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

bool is_independent_set(const Graph& graph, std::span<const int> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] ||
          graph.adjacent(vertices[i], vertices[j])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace tapswap
