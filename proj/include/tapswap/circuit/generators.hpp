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

#include <cstdint>
#include <vector>

#include "tapswap/circuit/circuit.hpp"
#include "tapswap/graph/hardware_graph.hpp"

namespace tapswap {

struct ZeroSwapInstance {
  Circuit circuit;
  /** hidden_vertex[q]: vertex of token q in the construction. */
  std::vector<int> hidden_vertex;
};

/**
 * Circuit with a zero-swap routing by construction: a random token
 * placement is fixed and each layer draws `gates_per_layer` random
 * vertex-disjoint hardware edges. Throws CircuitError if the graph has no
 * matching of that size.
 */
ZeroSwapInstance gen_zero_swap(
    const HardwareGraph& graph, int depth, int gates_per_layer,
    std::uint64_t seed);

/**
 * Quantum-volume style circuit: `depth` layers, each a random matching of
 * floor(width/2) token pairs.
 */
Circuit gen_qv(int width, int depth, std::uint64_t seed);

}  // namespace tapswap
