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

#include <vector>

#include "tapswap/graph/gate_set.hpp"
#include "tapswap/graph/hardware_graph.hpp"

namespace tapswap::detail {

/**
 * Resumable backtracking over placements of `tokens` onto the allowed
 * vertices such that each gate of `layer` lands on an edge. Gate endpoints
 * come first in the search order; each placement is produced once.
 */
class PlacementEnumerator {
 public:
  PlacementEnumerator(
      const HardwareGraph& graph, const GateSet& layer,
      const std::vector<int>& tokens, const std::vector<char>& allowed,
      int num_tokens)
      : graph_(&graph), allowed_(allowed), position_(num_tokens, -1),
        used_(graph.num_vertices(), 0) {
    std::vector<char> in_gate(num_tokens, 0);
    for (const TokenPair& p : layer) {
      order_.push_back(p.first);
      anchor_.push_back(-1);
      order_.push_back(p.second);
      anchor_.push_back(static_cast<int>(order_.size()) - 2);
      in_gate[p.first] = in_gate[p.second] = 1;
    }
    for (int t : tokens) {
      if (!in_gate[t]) {
        order_.push_back(t);
        anchor_.push_back(-1);
      }
    }
    for (int v = 0; v < graph.num_vertices(); ++v) {
      if (allowed_[v]) vertices_.push_back(v);
    }
    cursor_.assign(order_.size() + 1, 0);
    vertex_.assign(order_.size(), -1);
  }

  /** Token positions (-1 for tokens outside the enumeration). */
  const std::vector<int>& position() const { return position_; }

  bool next() {
    if (done_) return false;
    std::size_t k;
    if (!started_) {
      started_ = true;
      k = 0;
      cursor_[0] = 0;
    } else {
      if (order_.empty()) {
        done_ = true;
        return false;
      }
      k = order_.size() - 1;
      unplace(k);
    }
    while (true) {
      if (k == order_.size()) return true;
      if (advance(k)) {
        ++k;
        if (k < order_.size()) cursor_[k] = 0;
        continue;
      }
      if (k == 0) break;
      --k;
      unplace(k);
    }
    done_ = true;
    return false;
  }

 private:
  const std::vector<int>& candidates(std::size_t k) const {
    if (anchor_[k] >= 0) return graph_->neighbours(vertex_[anchor_[k]]);
    return vertices_;
  }

  bool advance(std::size_t k) {
    const auto& cand = candidates(k);
    while (cursor_[k] < cand.size()) {
      const int v = cand[cursor_[k]++];
      if (used_[v] || !allowed_[v]) continue;
      used_[v] = 1;
      vertex_[k] = v;
      position_[order_[k]] = v;
      return true;
    }
    return false;
  }

  void unplace(std::size_t k) {
    used_[vertex_[k]] = 0;
    position_[order_[k]] = -1;
    vertex_[k] = -1;
  }

  const HardwareGraph* graph_;
  std::vector<char> allowed_;
  std::vector<int> order_;
  std::vector<int> anchor_;
  std::vector<int> vertices_;
  std::vector<std::size_t> cursor_;
  std::vector<int> vertex_;
  std::vector<int> position_;
  std::vector<char> used_;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace tapswap::detail
