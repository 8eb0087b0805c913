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

#include "tapswap/router/router.hpp"

#include <deque>
#include <future>
#include <sstream>

namespace tapswap {

bool RoutedCircuit::all_swaps_optimal() const {
  for (bool b : swaps_optimal) {
    if (!b) return false;
  }
  return true;
}

RoutedProgram RoutedCircuit::program() const {
  return {initial_allocation.size(), initial_allocation.to_vertex(), stream};
}

namespace {

struct TransitionResult {
  SwapSequence swaps;
  bool optimal = false;
};

TransitionResult solve_transition(
    const HardwareGraph& graph, const Allocation& from, const Allocation& to,
    const RouteOptions& options) {
  const SwapInstance inst(graph, from, to);
  if (options.exact_swaps && graph.num_vertices() <= kExactSwapMaxVertices) {
    ExactResult r = exact_solve(inst, options.swap_limits);
    return {std::move(r.sequence), r.optimal};
  }
  SwapSequence seq = approx_solve(inst);
  // Matching a lower bound still proves optimality.
  const bool tight = static_cast<int>(seq.size()) ==
                     combined_lower_bound(inst, candidate_independent_sets(graph));
  return {std::move(seq), tight};
}

}  // namespace

RoutedCircuit route(
    const Circuit& circuit, const HardwareGraph& graph,
    const RouteOptions& options) {
  const int n = graph.num_vertices();
  if (circuit.num_tokens() > n) {
    throw CircuitError(
        "circuit has " + std::to_string(circuit.num_tokens()) +
        " qubits but the hardware graph only " + std::to_string(n));
  }
  const LayerSequence layering = layer_gates(circuit);
  RoutedCircuit out;
  const TapInstance instance(graph, layering.layers, options.tap);
  out.tap = solve_tap(instance);
  std::vector<Allocation> alloc = out.tap.allocations;
  if (alloc.empty()) alloc.push_back(Allocation::identity(n));

  const std::size_t transitions = alloc.size() - 1;
  std::vector<TransitionResult> results(transitions);
  if (options.parallel && transitions > 1) {
    std::vector<std::future<TransitionResult>> jobs;
    for (std::size_t t = 0; t < transitions; ++t) {
      jobs.push_back(std::async(std::launch::async, solve_transition,
                                std::cref(graph), std::cref(alloc[t]),
                                std::cref(alloc[t + 1]), std::cref(options)));
    }
    for (std::size_t t = 0; t < transitions; ++t) results[t] = jobs[t].get();
  } else {
    for (std::size_t t = 0; t < transitions; ++t) {
      results[t] = solve_transition(graph, alloc[t], alloc[t + 1], options);
    }
  }

  // slot[g]: layer after which gate g is emitted, -1 before the first.
  const auto& gates = circuit.gates();
  std::vector<int> slot(gates.size(), -1);
  for (std::size_t t = 0; t < layering.size(); ++t) {
    for (std::size_t g : layering.origin[t]) slot[g] = static_cast<int>(t);
  }
  std::vector<int> last_layer(circuit.num_tokens(), -1);
  for (std::size_t g = 0; g < gates.size(); ++g) {
    if (gates[g].two_qubit()) {
      for (int q : gates[g].operands) last_layer[q] = slot[g];
    } else {
      slot[g] = last_layer[gates[g].operands[0]];
    }
  }
  std::vector<std::vector<std::size_t>> by_slot(alloc.size() + 1);
  for (std::size_t g = 0; g < gates.size(); ++g) by_slot[slot[g] + 1].push_back(g);

  for (std::size_t s = 0; s <= alloc.size(); ++s) {
    const Allocation& a = alloc[s == 0 ? 0 : s - 1];
    for (std::size_t g : by_slot[s]) {
      const Gate& gate = gates[g];
      RoutedOp op;
      op.origin = g;
      op.label = gate.label;
      if (gate.two_qubit()) {
        op.kind = RoutedOp::Kind::kGate2;
        op.vertices = {a.vertex_of(gate.operands[0]), a.vertex_of(gate.operands[1])};
      } else {
        op.kind = RoutedOp::Kind::kGate1;
        const int v = a.vertex_of(gate.operands[0]);
        op.vertices = {v, v};
      }
      out.stream.push_back(std::move(op));
    }
    if (s >= 1 && s - 1 < transitions) {
      for (const Swap& sw : results[s - 1].swaps.swaps) {
        RoutedOp op;
        op.kind = RoutedOp::Kind::kSwap;
        op.vertices = sw;
        out.stream.push_back(std::move(op));
      }
    }
  }
  for (TransitionResult& r : results) {
    out.swaps_optimal.push_back(r.optimal);
    out.per_transition_swaps.push_back(std::move(r.swaps));
  }
  out.initial_allocation = alloc.front();
  out.final_allocation = alloc.back();
  out.metrics = compute_metrics(circuit, out.stream);
  return out;
}

Verification verify_routed(
    const Circuit& original, const RoutedProgram& program,
    const HardwareGraph& graph) {
  auto fail = [](std::string msg) { return Verification{false, std::move(msg)}; };
  const int n = graph.num_vertices();
  if (program.num_vertices != n) {
    return fail("program has " + std::to_string(program.num_vertices) +
                " vertices, graph has " + std::to_string(n));
  }
  if (static_cast<int>(program.initial_vertex.size()) < original.num_tokens()) {
    return fail("initial allocation misses circuit qubits");
  }
  std::vector<int> token_at(n, -1);
  for (std::size_t q = 0; q < program.initial_vertex.size(); ++q) {
    const int v = program.initial_vertex[q];
    if (v < 0 || v >= n || token_at[v] != -1) {
      return fail("initial allocation is not injective at token " +
                  std::to_string(q));
    }
    token_at[v] = static_cast<int>(q);
  }
  const int m = original.num_tokens();
  const auto& gates = original.gates();
  std::vector<std::deque<std::size_t>> pending(m);
  for (std::size_t g = 0; g < gates.size(); ++g) {
    pending[gates[g].operands[0]].push_back(g);
    if (gates[g].two_qubit()) pending[gates[g].operands[1]].push_back(g);
  }
  for (std::size_t k = 0; k < program.ops.size(); ++k) {
    const RoutedOp& op = program.ops[k];
    const std::string where = "op " + std::to_string(k) + ": ";
    const auto [u, v] = op.vertices;
    if (u < 0 || u >= n || v < 0 || v >= n) return fail(where + "vertex out of range");
    if (op.kind != RoutedOp::Kind::kGate1 && !graph.adjacent(u, v)) {
      return fail(where + "vertices " + std::to_string(u) + " and " +
                  std::to_string(v) + " are not adjacent");
    }
    if (op.kind == RoutedOp::Kind::kSwap) {
      std::swap(token_at[u], token_at[v]);
      continue;
    }
    const int a = token_at[u];
    const int b = token_at[v];
    if (a < 0 || a >= m || (op.kind == RoutedOp::Kind::kGate2 && (b < 0 || b >= m))) {
      return fail(where + "gate acts on a padding qubit");
    }
    if (pending[a].empty()) return fail(where + "qubit " + std::to_string(a) + " has no gates left");
    const std::size_t g = pending[a].front();
    const Gate& expect = gates[g];
    const bool two = op.kind == RoutedOp::Kind::kGate2;
    if (expect.two_qubit() != two || expect.label != op.label ||
        expect.operands[0] != a || (two && expect.operands[1] != b) ||
        (two && (pending[b].empty() || pending[b].front() != g))) {
      return fail(where + "expected gate " + std::to_string(g) + " of the input");
    }
    pending[a].pop_front();
    if (two) pending[b].pop_front();
  }
  for (int q = 0; q < m; ++q) {
    if (!pending[q].empty()) {
      return fail("gate " + std::to_string(pending[q].front()) +
                  " of the input is never applied");
    }
  }
  return {};
}

Verification verify_routed(
    const Circuit& original, const RoutedCircuit& routed,
    const HardwareGraph& graph) {
  const RoutedProgram program = routed.program();
  Verification v = verify_routed(original, program, graph);
  if (!v) return v;
  Allocation replay = routed.initial_allocation;
  for (const RoutedOp& op : routed.stream) {
    if (op.kind == RoutedOp::Kind::kSwap) {
      replay.swap_vertices(op.vertices[0], op.vertices[1]);
    }
  }
  if (!(replay == routed.final_allocation)) {
    return {false, "final placement differs from the last allocation"};
  }
  return v;
}

std::string metrics_block(const RoutedCircuit& routed) {
  const RoutingMetrics& m = routed.metrics;
  const bool optimal = routed.tap_optimal() && routed.all_swaps_optimal();
  std::ostringstream out;
  out << "swaps=" << m.swaps_added << '\n'
      << "depth_in=" << m.depth_in << '\n'
      << "depth_out=" << m.depth_out << '\n'
      << "status=" << (optimal ? "optimal" : "heuristic") << '\n'
      << "tap_status=" << (routed.tap_optimal() ? "optimal" : "heuristic")
      << '\n'
      << "swap_status="
      << (routed.all_swaps_optimal() ? "optimal" : "heuristic") << '\n'
      << "tap_cost=" << routed.tap.cost() << '\n'
      << "tap_lower_bound=" << (routed.tap.doubled_lower_bound + 1) / 2 << '\n'
      << "gates_in=" << m.two_qubit_gates_in << '\n'
      << "gates_out=" << m.two_qubit_gates_out_decomposed << '\n';
  return out.str();
}

}  // namespace tapswap
