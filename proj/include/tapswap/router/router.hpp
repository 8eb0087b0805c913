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
#include <vector>

#include "tapswap/circuit/circuit.hpp"
#include "tapswap/graph/allocation.hpp"
#include "tapswap/graph/hardware_graph.hpp"
#include "tapswap/swap/token_swap.hpp"
#include "tapswap/tap/tap_solver.hpp"

namespace tapswap {

struct RouteOptions {
  TapOptions tap;
  /** Exact token swapping per transition instead of the approximation. */
  bool exact_swaps = false;
  ExactLimits swap_limits;
  /** Solve the transitions concurrently. */
  bool parallel = true;
};

/** Exact token swapping is only attempted up to this many vertices. */
inline constexpr int kExactSwapMaxVertices = 16;

struct RoutedCircuit {
  /** Over all hardware vertices; tokens past the circuit's are padding. */
  Allocation initial_allocation;
  Allocation final_allocation;
  std::vector<RoutedOp> stream;
  std::vector<SwapSequence> per_transition_swaps;
  /** Per transition: the swap sequence is proven shortest. */
  std::vector<bool> swaps_optimal;
  TapSolution tap;
  RoutingMetrics metrics;

  bool tap_optimal() const { return tap.optimal; }
  bool all_swaps_optimal() const;
  RoutedProgram program() const;
};

/**
 * Layers the circuit, solves the allocation problem, solves token swapping
 * between consecutive allocations and emits the retargeted gates with the
 * swaps in between. A one-qubit gate goes out right after the layer of its
 * token's preceding two-qubit gate.
 *
 * Throws InfeasibleInstance for a layer the hardware cannot hold and
 * CircuitError when the circuit has more tokens than the graph vertices.
 */
RoutedCircuit route(
    const Circuit& circuit, const HardwareGraph& graph,
    const RouteOptions& options = {});

struct Verification {
  bool ok = true;
  /** First divergence when !ok. */
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

/**
 * Replays the program tracking token positions: every two-qubit operation
 * must sit on an edge, and the gates must consume the original circuit in
 * an order that keeps each token's gates in sequence.
 */
Verification verify_routed(
    const Circuit& original, const RoutedProgram& program,
    const HardwareGraph& graph);
/** Also checks the replayed final placement against final_allocation. */
Verification verify_routed(
    const Circuit& original, const RoutedCircuit& routed,
    const HardwareGraph& graph);

/** `swaps=`, `depth_in=`, `depth_out=`, `status=` and detail lines. */
std::string metrics_block(const RoutedCircuit& routed);

}  // namespace tapswap
