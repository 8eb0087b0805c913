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

#include "tapswap/circuit/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace tapswap {

Circuit::Circuit(int num_tokens) : num_tokens_(num_tokens) {
  if (num_tokens < 0) throw CircuitError("negative token count");
}

std::size_t Circuit::two_qubit_count() const {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(), [](const Gate& g) { return g.two_qubit(); }));
}

void Circuit::add_one_qubit_gate(int token, std::string label) {
  if (token < 0 || token >= num_tokens_) {
    throw CircuitError("token " + std::to_string(token) + " out of range");
  }
  gates_.push_back({GateKind::kOneQubit, {token, token}, std::move(label)});
}

void Circuit::add_two_qubit_gate(int a, int b, std::string label) {
  for (int t : {a, b}) {
    if (t < 0 || t >= num_tokens_) {
      throw CircuitError("token " + std::to_string(t) + " out of range");
    }
  }
  if (a == b) {
    throw CircuitError(
        "two-qubit gate on a single token " + std::to_string(a));
  }
  gates_.push_back({GateKind::kTwoQubit, {a, b}, std::move(label)});
}

namespace {

struct Line {
  std::vector<std::string_view> fields;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits off the first `count` whitespace-separated fields; the remainder
// (trimmed) is returned as the label.
bool split_fields(
    std::string_view text, std::size_t count,
    std::vector<std::string_view>& fields, std::string_view& rest) {
  fields.clear();
  std::size_t pos = 0;
  while (fields.size() < count) {
    pos = text.find_first_not_of(" \t\r", pos);
    if (pos == std::string_view::npos) return false;
    const auto end = std::min(text.find_first_of(" \t\r", pos), text.size());
    fields.push_back(text.substr(pos, end - pos));
    pos = end;
  }
  rest = trim(text.substr(std::min(pos, text.size())));
  return true;
}

int parse_index(std::string_view s, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 0) {
    throw ParseError(line, "invalid index '" + std::string(s) + "'");
  }
  return value;
}

std::string_view first_field(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r");
  if (pos == std::string_view::npos) return {};
  const auto end = std::min(text.find_first_of(" \t\r", pos), text.size());
  return text.substr(pos, end - pos);
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (!line.empty()) fn(line, line_no);
    if (end == text.size()) break;
    start = end + 1;
  }
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  Circuit circuit;
  bool have_header = false;
  for_each_line(text, [&](std::string_view line, int line_no) {
    std::vector<std::string_view> f;
    std::string_view rest;
    const auto kw = first_field(line);
    if (!have_header) {
      if (kw != "q" || !split_fields(line, 2, f, rest) || !rest.empty()) {
        throw ParseError(line_no, "expected header 'q <num_tokens>'");
      }
      circuit = Circuit(parse_index(f[1], line_no));
      have_header = true;
      return;
    }
    try {
      if (kw == "g1") {
        if (!split_fields(line, 2, f, rest)) {
          throw ParseError(line_no, "expected 'g1 <t> <label>'");
        }
        circuit.add_one_qubit_gate(parse_index(f[1], line_no), std::string(rest));
      } else if (kw == "g2") {
        if (!split_fields(line, 3, f, rest)) {
          throw ParseError(line_no, "expected 'g2 <t1> <t2> <label>'");
        }
        circuit.add_two_qubit_gate(
            parse_index(f[1], line_no), parse_index(f[2], line_no),
            std::string(rest));
      } else {
        throw ParseError(line_no, "unknown statement '" + std::string(kw) + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const CircuitError& e) {
      throw ParseError(line_no, e.what());
    }
  });
  if (!have_header) throw ParseError(1, "missing header 'q <num_tokens>'");
  return circuit;
}

namespace {

void write_label(std::ostringstream& out, const std::string& label) {
  if (!label.empty()) out << ' ' << label;
  out << '\n';
}

}  // namespace

std::string write_circuit(const Circuit& circuit) {
  std::ostringstream out;
  out << "q " << circuit.num_tokens() << '\n';
  for (const Gate& g : circuit.gates()) {
    if (g.two_qubit()) {
      out << "g2 " << g.operands[0] << ' ' << g.operands[1];
    } else {
      out << "g1 " << g.operands[0];
    }
    write_label(out, g.label);
  }
  return out.str();
}

LayerSequence layer_gates(const Circuit& circuit) {
  LayerSequence seq;
  std::vector<std::size_t> last(circuit.num_tokens(), 0);
  const auto& gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (!g.two_qubit()) continue;
    const int a = g.operands[0];
    const int b = g.operands[1];
    const std::size_t layer = std::max(last[a], last[b]) + 1;
    if (seq.layers.size() < layer) {
      seq.layers.resize(layer);
      seq.origin.resize(layer);
    }
    seq.layers[layer - 1].push_back({a, b});
    seq.origin[layer - 1].push_back(i);
    last[a] = last[b] = layer;
  }
  return seq;
}

std::string write_routed(const RoutedProgram& program) {
  std::ostringstream out;
  out << "alloc";
  for (std::size_t q = 0; q < program.initial_vertex.size(); ++q) {
    out << ' ' << q << ':' << program.initial_vertex[q];
  }
  out << '\n' << "q " << program.num_vertices << '\n';
  for (const RoutedOp& op : program.ops) {
    switch (op.kind) {
      case RoutedOp::Kind::kGate1:
        out << "g1 " << op.vertices[0];
        write_label(out, op.label);
        break;
      case RoutedOp::Kind::kGate2:
        out << "g2 " << op.vertices[0] << ' ' << op.vertices[1];
        write_label(out, op.label);
        break;
      case RoutedOp::Kind::kSwap:
        out << "swap " << op.vertices[0] << ' ' << op.vertices[1] << '\n';
        break;
    }
  }
  return out.str();
}

RoutedProgram parse_routed(std::string_view text) {
  RoutedProgram program;
  enum { kAlloc, kHeader, kBody } state = kAlloc;
  std::size_t gate_counter = 0;
  for_each_line(text, [&](std::string_view line, int line_no) {
    const auto kw = first_field(line);
    std::vector<std::string_view> f;
    std::string_view rest;
    if (state == kAlloc) {
      if (kw != "alloc") throw ParseError(line_no, "expected 'alloc' header");
      std::istringstream fields{std::string(line.substr(5))};
      std::vector<int> vertex;
      for (std::string pair; fields >> pair;) {
        const auto colon = pair.find(':');
        if (colon == std::string::npos) {
          throw ParseError(line_no, "expected '<token>:<vertex>'");
        }
        const int t = parse_index(std::string_view(pair).substr(0, colon), line_no);
        const int v = parse_index(std::string_view(pair).substr(colon + 1), line_no);
        if (t != static_cast<int>(vertex.size())) {
          throw ParseError(line_no, "allocation tokens must be listed in order");
        }
        vertex.push_back(v);
      }
      program.initial_vertex = std::move(vertex);
      state = kHeader;
      return;
    }
    if (state == kHeader) {
      if (kw != "q" || !split_fields(line, 2, f, rest) || !rest.empty()) {
        throw ParseError(line_no, "expected header 'q <num_vertices>'");
      }
      program.num_vertices = parse_index(f[1], line_no);
      for (int v : program.initial_vertex) {
        if (v >= program.num_vertices) {
          throw ParseError(line_no, "allocation vertex out of range");
        }
      }
      state = kBody;
      return;
    }
    RoutedOp op;
    if (kw == "g1") {
      if (!split_fields(line, 2, f, rest)) {
        throw ParseError(line_no, "expected 'g1 <v> <label>'");
      }
      op.kind = RoutedOp::Kind::kGate1;
      op.vertices = {parse_index(f[1], line_no), parse_index(f[1], line_no)};
      op.label = std::string(rest);
      op.origin = gate_counter++;
    } else if (kw == "g2" || kw == "swap") {
      if (!split_fields(line, 3, f, rest)) {
        throw ParseError(line_no, "expected two vertices");
      }
      op.vertices = {parse_index(f[1], line_no), parse_index(f[2], line_no)};
      if (kw == "swap") {
        if (!rest.empty()) throw ParseError(line_no, "unexpected text after swap");
        op.kind = RoutedOp::Kind::kSwap;
      } else {
        op.kind = RoutedOp::Kind::kGate2;
        op.label = std::string(rest);
        op.origin = gate_counter++;
      }
      if (op.vertices[0] == op.vertices[1]) {
        throw ParseError(line_no, "operands must differ");
      }
    } else {
      throw ParseError(line_no, "unknown statement '" + std::string(kw) + "'");
    }
    for (int v : op.vertices) {
      if (v >= program.num_vertices) {
        throw ParseError(line_no, "vertex out of range");
      }
    }
    program.ops.push_back(std::move(op));
  });
  if (state != kBody) throw ParseError(1, "missing 'alloc' or 'q' header");
  return program;
}

std::size_t asap_depth(std::span<const std::array<int, 2>> pairs) {
  std::vector<std::size_t> last;
  std::size_t depth = 0;
  for (const auto& p : pairs) {
    const auto hi = static_cast<std::size_t>(std::max(p[0], p[1]));
    if (last.size() <= hi) last.resize(hi + 1, 0);
    const std::size_t layer = std::max(last[p[0]], last[p[1]]) + 1;
    last[p[0]] = last[p[1]] = layer;
    depth = std::max(depth, layer);
  }
  return depth;
}

namespace {

double relative(std::size_t out, std::size_t in) {
  if (in == 0) return 0.0;
  return (static_cast<double>(out) - static_cast<double>(in)) /
         static_cast<double>(in);
}

}  // namespace

RoutingMetrics compute_metrics(
    const Circuit& input, std::span<const RoutedOp> routed) {
  RoutingMetrics m;
  std::vector<std::array<int, 2>> in_pairs;
  for (const Gate& g : input.gates()) {
    if (g.two_qubit()) in_pairs.push_back(g.operands);
  }
  std::vector<std::array<int, 2>> out_pairs;
  std::size_t gates2 = 0;
  for (const RoutedOp& op : routed) {
    if (op.kind == RoutedOp::Kind::kGate1) continue;
    out_pairs.push_back(op.vertices);
    if (op.kind == RoutedOp::Kind::kSwap) {
      ++m.swaps_added;
    } else {
      ++gates2;
    }
  }
  m.two_qubit_gates_in = in_pairs.size();
  m.two_qubit_gates_out = gates2 + m.swaps_added;
  m.two_qubit_gates_out_decomposed = gates2 + 3 * m.swaps_added;
  m.depth_in = asap_depth(in_pairs);
  m.depth_out = asap_depth(out_pairs);
  m.relative_gate_increase =
      relative(m.two_qubit_gates_out_decomposed, m.two_qubit_gates_in);
  m.relative_gate_increase_native =
      relative(m.two_qubit_gates_out, m.two_qubit_gates_in);
  m.relative_depth_increase = relative(m.depth_out, m.depth_in);
  return m;
}

}  // namespace tapswap
