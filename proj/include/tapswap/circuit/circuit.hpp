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

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tapswap/graph/gate_set.hpp"

namespace tapswap {

class CircuitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Malformed circuit or routed-circuit text; carries the 1-based line. */
class ParseError : public CircuitError {
 public:
  ParseError(int line, const std::string& message)
      : CircuitError("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class GateKind { kOneQubit, kTwoQubit };

struct Gate {
  GateKind kind = GateKind::kOneQubit;
  std::array<int, 2> operands{0, 0};
  std::string label;

  bool two_qubit() const { return kind == GateKind::kTwoQubit; }
  friend bool operator==(const Gate&, const Gate&) = default;
};

/** Ordered gate list over tokens 0..num_tokens-1. Gate semantics are opaque. */
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int num_tokens);

  int num_tokens() const { return num_tokens_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t two_qubit_count() const;

  void add_one_qubit_gate(int token, std::string label);
  void add_two_qubit_gate(int a, int b, std::string label);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int num_tokens_ = 0;
  std::vector<Gate> gates_;
};

/**
 * Grammar: `q <num_tokens>`, then `g1 <t> <label>` or `g2 <t1> <t2> <label>`
 * per line. `#` starts a comment; the label is the rest of the line.
 */
Circuit parse_circuit(std::string_view text);
std::string write_circuit(const Circuit& circuit);

/** Two-qubit gates grouped into vertex-disjoint layers. */
struct LayerSequence {
  std::vector<GateSet> layers;
  /** origin[t][k]: index in Circuit::gates() of layers[t][k]. */
  std::vector<std::vector<std::size_t>> origin;

  std::size_t size() const { return layers.size(); }
  bool empty() const { return layers.empty(); }
};

/**
 * As-soon-as-possible packing: each two-qubit gate goes one layer after the
 * latest layer used by either operand. One-qubit gates are ignored.
 */
LayerSequence layer_gates(const Circuit& circuit);

struct RoutedOp {
  enum class Kind { kGate1, kGate2, kSwap };
  Kind kind = Kind::kGate1;
  /** Physical vertices. */
  std::array<int, 2> vertices{0, 0};
  std::string label;
  /** Index of the source gate; unused for swaps. */
  std::size_t origin = 0;

  friend bool operator==(const RoutedOp&, const RoutedOp&) = default;
};

/** Text-level view of a routed circuit. */
struct RoutedProgram {
  int num_vertices = 0;
  /** initial_vertex[q]: vertex of circuit token q before the first op. */
  std::vector<int> initial_vertex;
  std::vector<RoutedOp> ops;
};

/**
 * `alloc t:v ...` header, then the circuit grammar over physical vertices
 * plus `swap <v1> <v2>` lines.
 */
std::string write_routed(const RoutedProgram& program);
RoutedProgram parse_routed(std::string_view text);

struct RoutingMetrics {
  std::size_t swaps_added = 0;
  std::size_t two_qubit_gates_in = 0;
  /** Swaps counted as one native two-qubit gate each. */
  std::size_t two_qubit_gates_out = 0;
  /** Swaps counted as three two-qubit gates each. */
  std::size_t two_qubit_gates_out_decomposed = 0;
  std::size_t depth_in = 0;
  std::size_t depth_out = 0;
  double relative_gate_increase = 0.0;
  double relative_gate_increase_native = 0.0;
  double relative_depth_increase = 0.0;
};

/**
 * Depth applies ASAP layering to the two-qubit gates of each stream, a swap
 * occupying one layer.
 */
RoutingMetrics compute_metrics(
    const Circuit& input, std::span<const RoutedOp> routed);

/** Number of layers of the greedy schedule of a sequence of vertex pairs. */
std::size_t asap_depth(std::span<const std::array<int, 2>> pairs);

}  // namespace tapswap
