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

#include "tapswap/graph/subgraph_isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace tapswap {

namespace {

class Matcher {
 public:
  Matcher(
      const Graph& pattern, const Graph& host, bool induced,
      std::size_t budget)
      : pattern_(pattern), host_(host), induced_(induced), budget_(budget) {}

  SgiResult run(const std::vector<int>& vertices) {
    if (vertices.empty()) return SgiResult::kYes;
    if (static_cast<int>(vertices.size()) > host_.num_vertices()) {
      return SgiResult::kNo;
    }
    if (pattern_.num_edges() > host_.num_edges()) return SgiResult::kNo;
    if (!degrees_dominated(vertices)) return SgiResult::kNo;
    build_order(vertices);
    image_.assign(pattern_.num_vertices(), -1);
    host_used_.assign(host_.num_vertices(), 0);
    if (extend(0)) return SgiResult::kYes;
    return exhausted_ ? SgiResult::kUndecided : SgiResult::kNo;
  }

 private:
  bool degrees_dominated(const std::vector<int>& vertices) const {
    std::vector<int> pd, hd;
    for (int v : vertices) pd.push_back(pattern_.degree(v));
    for (int v = 0; v < host_.num_vertices(); ++v) {
      hd.push_back(host_.degree(v));
    }
    std::sort(pd.rbegin(), pd.rend());
    std::sort(hd.rbegin(), hd.rend());
    for (std::size_t i = 0; i < pd.size(); ++i) {
      if (pd[i] > hd[i]) return false;
    }
    return true;
  }

  // Next vertex: most already-ordered neighbours, then highest degree, then
  // lowest id.
  void build_order(const std::vector<int>& vertices) {
    const int n = pattern_.num_vertices();
    std::vector<char> in_set(n, 0), placed(n, 0);
    std::vector<int> links(n, 0);
    for (int v : vertices) in_set[v] = 1;
    order_.clear();
    while (order_.size() < vertices.size()) {
      int best = -1;
      for (int v : vertices) {
        if (placed[v]) continue;
        if (best == -1 || links[v] > links[best] ||
            (links[v] == links[best] &&
             pattern_.degree(v) > pattern_.degree(best))) {
          best = v;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
      for (int w : pattern_.neighbours(best)) {
        if (in_set[w]) ++links[w];
      }
    }
    const std::size_t k = order_.size();
    anchor_.assign(k, -1);
    earlier_adj_.assign(k, {});
    earlier_non_adj_.assign(k, {});
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (pattern_.adjacent(order_[i], order_[j])) {
          earlier_adj_[i].push_back(order_[j]);
          if (anchor_[i] == -1) anchor_[i] = order_[j];
        } else {
          earlier_non_adj_[i].push_back(order_[j]);
        }
      }
    }
  }

  bool feasible(std::size_t depth, int candidate) const {
    const int p = order_[depth];
    if (host_used_[candidate] || host_.degree(candidate) < pattern_.degree(p)) {
      return false;
    }
    for (int q : earlier_adj_[depth]) {
      if (!host_.adjacent(candidate, image_[q])) return false;
    }
    if (induced_) {
      for (int q : earlier_non_adj_[depth]) {
        if (host_.adjacent(candidate, image_[q])) return false;
      }
    }
    return true;
  }

  bool try_candidate(std::size_t depth, int candidate) {
    if (!feasible(depth, candidate)) return false;
    if (++expansions_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const int p = order_[depth];
    image_[p] = candidate;
    host_used_[candidate] = 1;
    if (extend(depth + 1)) return true;
    host_used_[candidate] = 0;
    image_[p] = -1;
    return false;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int anchor = anchor_[depth];
    if (anchor != -1) {
      for (int c : host_.neighbours(image_[anchor])) {
        if (try_candidate(depth, c)) return true;
        if (exhausted_) return false;
      }
    } else {
      for (int c = 0; c < host_.num_vertices(); ++c) {
        if (try_candidate(depth, c)) return true;
        if (exhausted_) return false;
      }
    }
    return false;
  }

  const Graph& pattern_;
  const Graph& host_;
  bool induced_;
  std::size_t budget_;
  std::size_t expansions_ = 0;
  bool exhausted_ = false;
  std::vector<int> order_;
  std::vector<int> anchor_;
  std::vector<std::vector<int>> earlier_adj_;
  std::vector<std::vector<int>> earlier_non_adj_;
  std::vector<int> image_;
  std::vector<char> host_used_;
};

}  // namespace

SgiResult node_induced_subgraph_isomorphic(
    const Graph& pattern, const Graph& host, std::size_t budget) {
  std::vector<int> vertices(pattern.num_vertices());
  for (int v = 0; v < pattern.num_vertices(); ++v) vertices[v] = v;
  return Matcher(pattern, host, true, budget).run(vertices);
}

SgiResult edge_induced_subgraph_isomorphic(
    const Graph& pattern, const Graph& host, std::size_t budget) {
  std::vector<int> vertices;
  for (int v = 0; v < pattern.num_vertices(); ++v) {
    if (pattern.degree(v) > 0) vertices.push_back(v);
  }
  return Matcher(pattern, host, false, budget).run(vertices);
}

SgiResult line_graph_sgi(
    const Graph& pattern, const Graph& host, std::size_t budget) {
  return node_induced_subgraph_isomorphic(
      line_graph(pattern), line_graph(host), budget);
}

}  // namespace tapswap
