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

#include <catch_amalgamated.hpp>

#include "oracles/tap_oracles.hpp"
#include "tapswap/circuit/generators.hpp"
#include "tapswap/router/router.hpp"

namespace tapswap {
namespace {

constexpr const char* kTwoSwapCircuit =
    "q 4\n"
    "g1 0 H\n"
    "g2 0 1 CX\n"
    "g2 1 2 CX\n"
    "g1 3 T\n"
    "g2 0 3 CX\n"
    "g2 2 3 CX\n";

void check_edges(const RoutedCircuit& r, const HardwareGraph& g) {
  for (const RoutedOp& op : r.stream) {
    if (op.kind != RoutedOp::Kind::kGate1) {
      REQUIRE(g.adjacent(op.vertices[0], op.vertices[1]));
    }
  }
}

TEST_CASE("two-swap example routes with two swaps") {
  const auto line = presets::line(4);
  const Circuit c = parse_circuit(kTwoSwapCircuit);
  const auto r = route(c, line);
  check_edges(r, line);
  CHECK(verify_routed(c, r, line));
  CHECK(r.metrics.swaps_added <= 2);
  CHECK(static_cast<std::int64_t>(r.metrics.swaps_added) >=
        r.tap.lower_bound_on_swaps());
  CHECK(r.tap.optimal);
  CHECK(r.metrics.two_qubit_gates_in == 4);
  CHECK(r.per_transition_swaps.size() == 2);
}

TEST_CASE("circuit without two-qubit gates is unchanged") {
  Circuit c(3);
  c.add_one_qubit_gate(0, "H");
  c.add_one_qubit_gate(2, "X");
  const auto g = presets::line(5);
  const auto r = route(c, g);
  CHECK(r.metrics.swaps_added == 0);
  REQUIRE(r.stream.size() == 2);
  CHECK(r.stream[0].label == "H");
  CHECK(r.stream[1].label == "X");
  CHECK(r.stream[0].vertices[0] == r.initial_allocation.vertex_of(0));
  CHECK(verify_routed(c, r, g));
}

TEST_CASE("too many qubits or too many gates is an error") {
  const auto g = presets::star(4);
  CHECK_THROWS_AS(route(Circuit(5), g), CircuitError);
  Circuit c(4);
  c.add_two_qubit_gate(0, 1, "CX");
  c.add_two_qubit_gate(2, 3, "CX");
  CHECK_THROWS_AS(route(c, g), InfeasibleInstance);
}

TEST_CASE("zero-swap circuits need no swaps") {
  for (const auto& g : {presets::line(6), presets::ring(6)}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto inst = gen_zero_swap(g, 4, 2, seed);
      const auto r = route(inst.circuit, g);
      CHECK(r.metrics.swaps_added == 0);
      CHECK(verify_routed(inst.circuit, r, g));
    }
  }
}

TEST_CASE("random circuits verify and respect the allocation bound") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int width = 4 + static_cast<int>(seed % 2);
    const auto g = seed % 3 == 0 ? presets::ring(width) : presets::line(width);
    const Circuit c = gen_qv(width, 3, seed);
    RouteOptions opts;
    opts.parallel = seed % 2 == 0;
    const auto r = route(c, g, opts);
    check_edges(r, g);
    const auto v = verify_routed(c, r, g);
    INFO(v.diagnostic);
    CHECK(v);
    CHECK(static_cast<std::int64_t>(r.metrics.swaps_added) >=
          r.tap.lower_bound_on_swaps());
  }
}

TEST_CASE("exact swaps never exceed approximate swaps") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = presets::ring(5);
    const Circuit c = gen_qv(5, 3, seed);
    RouteOptions exact;
    exact.exact_swaps = true;
    const auto a = route(c, g);
    const auto e = route(c, g, exact);
    CHECK(verify_routed(c, e, g));
    CHECK(e.metrics.swaps_added <= a.metrics.swaps_added);
    CHECK(e.all_swaps_optimal());
  }
}

TEST_CASE("verification finds tampering") {
  const auto line = presets::line(4);
  const Circuit c = parse_circuit(kTwoSwapCircuit);
  const auto r = route(c, line);
  REQUIRE(verify_routed(c, r, line));
  {
    auto bad = r;
    const auto it = std::find_if(bad.stream.begin(), bad.stream.end(),
                                 [](const RoutedOp& op) {
                                   return op.kind == RoutedOp::Kind::kSwap;
                                 });
    REQUIRE(it != bad.stream.end());
    bad.stream.erase(it);
    const auto v = verify_routed(c, bad, line);
    CHECK_FALSE(v);
    CHECK_FALSE(v.diagnostic.empty());
  }
  {
    auto bad = r;
    bad.stream.pop_back();
    CHECK_FALSE(verify_routed(c, bad, line));
  }
  {
    auto bad = r.program();
    for (auto& op : bad.ops) {
      if (op.kind == RoutedOp::Kind::kGate2) {
        op.label = "CZ";
        break;
      }
    }
    CHECK_FALSE(verify_routed(c, bad, line));
  }
}

TEST_CASE("identity routing of a conformant circuit verifies") {
  const auto g = presets::line(3);
  Circuit c(3);
  c.add_two_qubit_gate(0, 1, "CX");
  c.add_one_qubit_gate(1, "H");
  c.add_two_qubit_gate(1, 2, "CX");
  RoutedProgram p{3, {0, 1, 2}, {}};
  p.ops.push_back({RoutedOp::Kind::kGate2, {0, 1}, "CX", 0});
  p.ops.push_back({RoutedOp::Kind::kGate1, {1, 1}, "H", 1});
  p.ops.push_back({RoutedOp::Kind::kGate2, {1, 2}, "CX", 2});
  CHECK(verify_routed(c, p, g));
  // Text round trip keeps it valid.
  CHECK(verify_routed(c, parse_routed(write_routed(p)), g));
}

TEST_CASE("one-qubit gates follow their token") {
  const auto g = presets::line(4);
  Circuit c(4);
  c.add_two_qubit_gate(0, 3, "CX");
  c.add_one_qubit_gate(0, "H");
  c.add_two_qubit_gate(0, 1, "CX");
  c.add_two_qubit_gate(0, 2, "CX");
  c.add_one_qubit_gate(3, "T");
  const auto r = route(c, g);
  const auto v = verify_routed(c, r, g);
  INFO(v.diagnostic);
  CHECK(v);
}

TEST_CASE("metrics block") {
  const auto line = presets::line(4);
  const auto r = route(parse_circuit(kTwoSwapCircuit), line);
  const std::string block = metrics_block(r);
  CHECK(block.find("swaps=" + std::to_string(r.metrics.swaps_added) + "\n") !=
        std::string::npos);
  CHECK(block.find("depth_in=") != std::string::npos);
  CHECK(block.find("depth_out=") != std::string::npos);
  CHECK((block.find("status=optimal\n") != std::string::npos ||
         block.find("status=heuristic\n") != std::string::npos));
}

}  // namespace
}  // namespace tapswap
