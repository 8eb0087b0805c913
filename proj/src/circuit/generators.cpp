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

#include "tapswap/circuit/generators.hpp"

#include <numeric>

#include "tapswap/util/random.hpp"

namespace tapswap {

namespace {

// Random vertex-disjoint edge set of the requested size: edges are tried in
// shuffled order with backtracking, so a matching is found whenever one
// exists.
bool pick_matching(
    const std::vector<Edge>& edges, std::size_t from, int needed,
    std::vector<char>& used, std::vector<Edge>& chosen) {
  if (needed == 0) return true;
  for (std::size_t i = from; i < edges.size(); ++i) {
    if (static_cast<int>(edges.size() - i) < needed) return false;
    const Edge& e = edges[i];
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    chosen.push_back(e);
    if (pick_matching(edges, i + 1, needed - 1, used, chosen)) return true;
    chosen.pop_back();
    used[e.u] = used[e.v] = 0;
  }
  return false;
}

}  // namespace

ZeroSwapInstance gen_zero_swap(
    const HardwareGraph& graph, int depth, int gates_per_layer,
    std::uint64_t seed) {
  if (depth < 0) throw CircuitError("depth must be non-negative");
  if (gates_per_layer < 0) {
    throw CircuitError("gates per layer must be non-negative");
  }
  if (gates_per_layer > graph.max_matching()) {
    throw CircuitError(
        "hardware graph has no matching of size " +
        std::to_string(gates_per_layer) + " (maximum " +
        std::to_string(graph.max_matching()) + ")");
  }
  const int n = graph.num_vertices();
  SplitMix64 rng(seed);
  ZeroSwapInstance out;
  out.hidden_vertex.resize(n);
  std::iota(out.hidden_vertex.begin(), out.hidden_vertex.end(), 0);
  rng.shuffle(out.hidden_vertex);
  std::vector<int> token_at(n);
  for (int q = 0; q < n; ++q) token_at[out.hidden_vertex[q]] = q;

  out.circuit = Circuit(n);
  std::vector<Edge> edges = graph.edges();
  for (int layer = 0; layer < depth; ++layer) {
    rng.shuffle(edges);
    std::vector<char> used(n, 0);
    std::vector<Edge> chosen;
    pick_matching(edges, 0, gates_per_layer, used, chosen);
    for (const Edge& e : chosen) {
      int a = token_at[e.u];
      int b = token_at[e.v];
      if (rng.below(2)) std::swap(a, b);
      out.circuit.add_two_qubit_gate(a, b, "CX");
    }
  }
  return out;
}

Circuit gen_qv(int width, int depth, std::uint64_t seed) {
  if (width < 2) throw CircuitError("QV width must be at least 2");
  if (depth < 0) throw CircuitError("depth must be non-negative");
  SplitMix64 rng(seed);
  Circuit circuit(width);
  std::vector<int> tokens(width);
  std::iota(tokens.begin(), tokens.end(), 0);
  for (int layer = 0; layer < depth; ++layer) {
    rng.shuffle(tokens);
    for (int k = 0; k + 1 < width; k += 2) {
      circuit.add_two_qubit_gate(tokens[k], tokens[k + 1], "SU4");
    }
  }
  return circuit;
}

}  // namespace tapswap
