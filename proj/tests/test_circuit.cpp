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

#include <set>

#include "tapswap/circuit/circuit.hpp"
#include "tapswap/circuit/generators.hpp"
#include "tapswap/graph/hardware_graph.hpp"

namespace tapswap {
namespace {

Circuit fig1_circuit() {
  return parse_circuit(
      "q 4\n"
      "g1 0 H\n"
      "g2 0 1 CX\n"
      "g2 1 2 CX\n"
      "g1 3 T\n"
      "g2 0 3 CX\n"
      "g2 2 3 CX\n");
}

// Checks disjointness and that the flattened origin order keeps the
// relative order of gates sharing a token.
void check_layering(const Circuit& c, const LayerSequence& seq) {
  std::vector<std::size_t> seen_layer(c.gates().size(), 0);
  std::size_t total = 0;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    CHECK(is_disjoint(seq.layers[t]));
    REQUIRE(seq.layers[t].size() == seq.origin[t].size());
    for (std::size_t k = 0; k < seq.layers[t].size(); ++k) {
      const Gate& g = c.gates()[seq.origin[t][k]];
      CHECK(g.two_qubit());
      CHECK(seq.layers[t][k] == TokenPair{g.operands[0], g.operands[1]});
      seen_layer[seq.origin[t][k]] = t + 1;
      ++total;
    }
  }
  CHECK(total == c.two_qubit_count());
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    for (std::size_t j = i + 1; j < c.gates().size(); ++j) {
      const Gate& a = c.gates()[i];
      const Gate& b = c.gates()[j];
      if (!a.two_qubit() || !b.two_qubit()) continue;
      const bool share = a.operands[0] == b.operands[0] ||
                         a.operands[0] == b.operands[1] ||
                         a.operands[1] == b.operands[0] ||
                         a.operands[1] == b.operands[1];
      if (share) CHECK(seen_layer[i] < seen_layer[j]);
    }
  }
}

}  // namespace

TEST_CASE("Parse circuits") {
  const Circuit c = parse_circuit("q 4\ng2 0 1 CX\ng1 2 H\n");
  CHECK(c.num_tokens() == 4);
  REQUIRE(c.gates().size() == 2);
  CHECK(c.gates()[0].two_qubit());
  CHECK(c.gates()[0].label == "CX");
  CHECK(c.gates()[1].operands[0] == 2);
  CHECK(c.gates()[1].label == "H");

  const Circuit labels = parse_circuit("q 2\ng1 0 rz(0.25) extra  words  # c\n");
  CHECK(labels.gates()[0].label == "rz(0.25) extra  words");

  const Circuit empty = parse_circuit("# nothing\nq 3\n");
  CHECK(empty.gates().empty());
  CHECK(layer_gates(empty).empty());

  const Circuit fig1 = fig1_circuit();
  std::vector<TokenPair> pairs;
  for (const Gate& g : fig1.gates()) {
    if (g.two_qubit()) pairs.push_back({g.operands[0], g.operands[1]});
  }
  CHECK(pairs == std::vector<TokenPair>{{0, 1}, {1, 2}, {0, 3}, {2, 3}});
}

TEST_CASE("Parse errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_circuit(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("q 2\ng2 0 2 CX\n") == 2);
  CHECK(line_of("q 2\n\ng2 1 1 CX\n") == 3);
  CHECK(line_of("q 2\nfoo 1\n") == 2);
  CHECK(line_of("g1 0 H\n") == 1);
  CHECK(line_of("q 2\ng2 0\n") == 2);
  CHECK(line_of("q x\n") == 1);
  CHECK(line_of("") == 1);
}

TEST_CASE("Circuit text round trip") {
  const Circuit c = fig1_circuit();
  CHECK(parse_circuit(write_circuit(c)) == c);
  const Circuit qv = gen_qv(6, 4, 3);
  CHECK(parse_circuit(write_circuit(qv)) == qv);
}

TEST_CASE("Layering") {
  const auto seq = layer_gates(fig1_circuit());
  REQUIRE(seq.size() == 3);
  CHECK(seq.layers[0] == GateSet{{0, 1}});
  CHECK(seq.layers[1] == GateSet{{1, 2}, {0, 3}});
  CHECK(seq.layers[2] == GateSet{{2, 3}});
  check_layering(fig1_circuit(), seq);

  const Circuit disjoint = parse_circuit("q 6\ng2 0 1 a\ng2 2 3 b\ng2 4 5 c\n");
  CHECK(layer_gates(disjoint).size() == 1);

  const Circuit chain = parse_circuit("q 4\ng2 0 1 a\ng2 1 2 b\ng2 2 3 c\n");
  CHECK(layer_gates(chain).size() == 3);
  const Circuit reordered = parse_circuit("q 4\ng2 0 1 a\ng2 2 3 c\ng2 1 2 b\n");
  const auto two = layer_gates(reordered);
  REQUIRE(two.size() == 2);
  CHECK(two.layers[0] == GateSet{{0, 1}, {2, 3}});
  CHECK(two.origin[1] == std::vector<std::size_t>{2});
}

TEST_CASE("Layering invariants on random circuits") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Circuit c = gen_qv(7, 5, seed);
    // Drop gates in a seed-dependent pattern so layers are uneven.
    Circuit thinned(7);
    for (std::size_t i = 0; i < c.gates().size(); ++i) {
      if ((i + seed) % 3 == 0) continue;
      const Gate& g = c.gates()[i];
      thinned.add_two_qubit_gate(g.operands[0], g.operands[1], g.label);
      thinned.add_one_qubit_gate(g.operands[0], "H");
    }
    check_layering(thinned, layer_gates(thinned));
  }
}

TEST_CASE("Zero-swap generator") {
  const auto line4 = presets::line(4);
  const auto inst = gen_zero_swap(line4, 3, 1, 11);
  CHECK(inst.circuit.two_qubit_count() == 3);
  for (const Gate& g : inst.circuit.gates()) {
    CHECK(line4.adjacent(
        inst.hidden_vertex[g.operands[0]], inst.hidden_vertex[g.operands[1]]));
  }
  CHECK(gen_zero_swap(line4, 0, 2, 1).circuit.gates().empty());

  const auto ring8 = presets::ring(8);
  const auto full = gen_zero_swap(ring8, 5, 4, 2);
  CHECK(full.circuit.two_qubit_count() == 20);
  CHECK_THROWS_AS(gen_zero_swap(ring8, 5, 5, 2), CircuitError);
  CHECK_THROWS_AS(gen_zero_swap(presets::star(5), 2, 2, 2), CircuitError);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto grid = presets::grid(3, 3);
    const auto z = gen_zero_swap(grid, 6, 4, seed);
    for (const Gate& g : z.circuit.gates()) {
      CHECK(grid.adjacent(
          z.hidden_vertex[g.operands[0]], z.hidden_vertex[g.operands[1]]));
    }
    CHECK(z.circuit.two_qubit_count() == 24);
  }
}

TEST_CASE("QV generator") {
  const Circuit qv = gen_qv(8, 8, 1);
  CHECK(qv.two_qubit_count() == 32);
  const auto seq = layer_gates(qv);
  CHECK(seq.size() == 8);
  for (const auto& layer : seq.layers) CHECK(layer.size() == 4);

  const Circuit tiny = gen_qv(2, 1, 5);
  REQUIRE(tiny.gates().size() == 1);
  const auto ops = tiny.gates()[0].operands;
  CHECK(std::set<int>{ops[0], ops[1]} == std::set<int>{0, 1});

  const Circuit odd = gen_qv(5, 2, 9);
  CHECK(odd.two_qubit_count() == 4);
  for (std::size_t i = 0; i < 4; i += 2) {
    std::set<int> touched;
    for (std::size_t k = i; k < i + 2; ++k) {
      touched.insert(odd.gates()[k].operands[0]);
      touched.insert(odd.gates()[k].operands[1]);
    }
    CHECK(touched.size() == 4);
  }

  CHECK(write_circuit(gen_qv(8, 8, 1)) == write_circuit(gen_qv(8, 8, 1)));
  CHECK_FALSE(write_circuit(gen_qv(8, 8, 1)) == write_circuit(gen_qv(8, 8, 2)));
  CHECK_THROWS_AS(gen_qv(1, 3, 0), CircuitError);
}

TEST_CASE("Routed program text round trip") {
  RoutedProgram p;
  p.num_vertices = 4;
  p.initial_vertex = {3, 2, 1, 0};
  p.ops = {
      {RoutedOp::Kind::kGate1, {3, 3}, "H", 0},
      {RoutedOp::Kind::kGate2, {3, 2}, "CX", 1},
      {RoutedOp::Kind::kSwap, {0, 1}, "", 0},
      {RoutedOp::Kind::kGate2, {1, 2}, "CX", 2},
  };
  const std::string text = write_routed(p);
  CHECK(text.rfind("alloc 0:3 1:2 2:1 3:0\nq 4\n", 0) == 0);
  const RoutedProgram back = parse_routed(text);
  CHECK(back.initial_vertex == p.initial_vertex);
  CHECK(back.num_vertices == 4);
  CHECK(back.ops == p.ops);
  CHECK_THROWS_AS(parse_routed("q 4\n"), ParseError);
  CHECK_THROWS_AS(parse_routed("alloc 0:1\nq 2\nswap 0 5\n"), ParseError);
}

TEST_CASE("Routing metrics") {
  const Circuit fig1 = fig1_circuit();
  std::vector<RoutedOp> plain;
  std::size_t idx = 0;
  for (const Gate& g : fig1.gates()) {
    plain.push_back(
        {g.two_qubit() ? RoutedOp::Kind::kGate2 : RoutedOp::Kind::kGate1,
         g.operands, g.label, idx++});
  }
  const auto m0 = compute_metrics(fig1, plain);
  CHECK(m0.swaps_added == 0);
  CHECK(m0.relative_gate_increase == 0.0);
  CHECK(m0.relative_depth_increase == 0.0);
  CHECK(m0.depth_in == 3);

  auto with_swaps = plain;
  with_swaps.insert(with_swaps.begin() + 3, {RoutedOp::Kind::kSwap, {0, 1}, "", 0});
  with_swaps.insert(with_swaps.begin() + 6, {RoutedOp::Kind::kSwap, {0, 1}, "", 0});
  const auto m = compute_metrics(fig1, with_swaps);
  CHECK(m.swaps_added == 2);
  CHECK(m.two_qubit_gates_in == 4);
  CHECK(m.two_qubit_gates_out == m.two_qubit_gates_in + m.swaps_added);
  CHECK(m.two_qubit_gates_out_decomposed ==
        m.two_qubit_gates_in + 3 * m.swaps_added);
  CHECK(m.relative_gate_increase == Catch::Approx(6.0 / 4.0));

  const Circuit one = parse_circuit("q 4\ng2 0 1 CX\n");
  const std::vector<RoutedOp> disjoint{
      {RoutedOp::Kind::kSwap, {2, 3}, "", 0},
      {RoutedOp::Kind::kGate2, {0, 1}, "CX", 0}};
  CHECK(compute_metrics(one, disjoint).depth_out == 1);
  const std::vector<RoutedOp> shared{
      {RoutedOp::Kind::kSwap, {1, 2}, "", 0},
      {RoutedOp::Kind::kGate2, {0, 1}, "CX", 0}};
  CHECK(compute_metrics(one, shared).depth_out == 2);

  const Circuit none = parse_circuit("q 2\ng1 0 H\n");
  const auto mn = compute_metrics(none, {});
  CHECK(mn.relative_gate_increase == 0.0);
  CHECK(mn.depth_in == 0);
}

}  // namespace tapswap
