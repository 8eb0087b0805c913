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

#include <chrono>
#include <memory>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tapswap/graph/allocation.hpp"
#include "tapswap/graph/gate_set.hpp"
#include "tapswap/graph/hardware_graph.hpp"
#include "tapswap/graph/subgraph_isomorphism.hpp"

namespace tapswap {

/** A layer cannot be placed on the hardware graph. */
class InfeasibleInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TapOptions {
  /** Largest hop count any token may move between consecutive layers. */
  std::optional<int> distance_limit;
  /** Freeze tokens without two-qubit gates on the vertices left over by the
   *  initial placement of the active tokens. */
  bool active_only = false;
  std::optional<std::chrono::duration<double>> time_limit;
  /** Wall-clock budget for cut generation. */
  std::chrono::duration<double> cut_time_limit{10.0};
  std::size_t sgi_budget = kDefaultSgiBudget;
  bool use_cuts = true;
  /** Cap on search nodes per stage; setting it makes results heuristic. */
  std::optional<std::size_t> beam_width;
  /** Deterministic cap on node expansions. */
  std::optional<std::size_t> max_expansions;
};

/**
 * Token allocation instance. Tokens 0..n-1 with n the vertex count; tokens
 * without gates are inactive padding.
 */
class TapInstance {
 public:
  TapInstance(
      const HardwareGraph& graph, std::vector<GateSet> layers,
      TapOptions options = {});

  const HardwareGraph& graph() const { return graph_; }
  int num_tokens() const { return graph_.num_vertices(); }
  const std::vector<GateSet>& layers() const { return layers_; }
  std::size_t num_layers() const { return layers_.size(); }
  const TapOptions& options() const { return options_; }
  TapOptions& options() { return options_; }

  /** Tokens occurring in some gate, ascending. */
  const std::vector<int>& active_tokens() const { return active_; }
  bool is_active(int token) const { return active_mask_[token]; }

  /**
   * Vertices the active tokens are confined to under active_only: a BFS
   * ball around a central vertex. All vertices otherwise.
   */
  const std::vector<int>& active_region() const { return region_; }
  /** Vertex of each frozen token under active_only, -1 for active ones. */
  const std::vector<int>& frozen_vertex() const { return frozen_; }

 private:
  HardwareGraph graph_;
  std::vector<GateSet> layers_;
  TapOptions options_;
  std::vector<int> active_;
  std::vector<char> active_mask_;
  std::vector<int> region_;
  std::vector<int> frozen_;
};

/**
 * Lazy enumeration of the allocations under which every gate of one layer
 * sits on a hardware edge. Gate endpoints are placed first, then the
 * remaining tokens. Frozen tokens stay put under active_only.
 */
class FeasibleAllocations {
 public:
  FeasibleAllocations(const TapInstance& instance, std::size_t layer);
  std::optional<Allocation> next();

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/** Throws InfeasibleInstance if a layer exceeds the maximum matching. */
FeasibleAllocations feasible_allocations(
    const TapInstance& instance, std::size_t layer);

}  // namespace tapswap
