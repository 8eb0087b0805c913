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
#include <cstdint>
#include <vector>

#include "tapswap/tap/tap_instance.hpp"

namespace tapswap {

/**
 * Lower bound from a connectivity graph that does not embed into the d-th
 * relaxed graph. Layers are 1-based; the cut constrains the movement
 * between layers t0 and t1.
 */
struct SgiCut {
  std::size_t t0 = 0;
  std::size_t t1 = 0;
  std::vector<int> tokens;
  int d = 0;

  /** Movement of `tokens` alone is at least this much. */
  int rhs_restricted() const { return d + 1; }
  /** Summed movement of all tokens is at least this much. */
  int rhs_all() const { return 2 * (d + 1); }
};

/**
 * Windows in increasing width, earliest first within a width. Each window
 * gets the largest d for which its gates provably do not embed; cuts
 * already implied by a sub-window are skipped.
 */
std::vector<SgiCut> generate_sgi_cuts(const TapInstance& instance);

/**
 * Doubled-cost lower bounds: bounds[s] limits the movement after 0-based
 * stage s, from the best set of cuts that do not share a transition.
 */
std::vector<std::int64_t> cut_bounds(
    std::size_t num_layers, const std::vector<SgiCut>& cuts);

struct TapSolution {
  /** One allocation per layer. */
  std::vector<Allocation> allocations;
  /** Summed hop counts of all tokens over all transitions. */
  std::int64_t doubled_cost = 0;
  bool optimal = false;
  /** Proven lower bound on doubled_cost. */
  std::int64_t doubled_lower_bound = 0;
  std::size_t nodes_expanded = 0;
  std::size_t num_cuts = 0;

  double cost() const { return static_cast<double>(doubled_cost) / 2.0; }
  std::int64_t lower_bound_on_swaps() const { return (doubled_cost + 1) / 2; }
};

/** Movement of all tokens between two allocations. */
std::int64_t transition_cost(
    const HardwareGraph& graph, const Allocation& from, const Allocation& to);

/**
 * Exact shortest path over (layer, allocation) states with partial
 * expansion. Tokens without gates are treated as interchangeable: a state
 * records only the active tokens and idle movement is priced by a minimum
 * cost assignment, which leaves the optimum unchanged.
 *
 * Throws InfeasibleInstance when some layer cannot be placed.
 */
TapSolution solve_tap(const TapInstance& instance);
TapSolution solve_tap(
    const TapInstance& instance, const std::vector<SgiCut>& cuts);

/** Min-cost assignment; cost[i][j] for row i and column j. */
std::vector<int> min_cost_assignment(
    const std::vector<std::vector<std::int64_t>>& cost);

}  // namespace tapswap
