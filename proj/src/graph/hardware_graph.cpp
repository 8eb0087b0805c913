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

#include "tapswap/graph/hardware_graph.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace tapswap {

DistanceMatrix all_pairs_distances(const Graph& graph) {
  const int n = graph.num_vertices();
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s) {
    const auto row = bfs_distances(graph, s);
    for (int t = 0; t < n; ++t) {
      if (row[t] < 0) {
        throw GraphError(
            "graph is disconnected: no path between vertices " +
            std::to_string(s) + " and " + std::to_string(t));
      }
    }
    values.insert(values.end(), row.begin(), row.end());
  }
  return DistanceMatrix(n, std::move(values));
}

HardwareGraph::HardwareGraph(Graph graph)
    : graph_(std::move(graph)), dist_(all_pairs_distances(graph_)) {
  const int n = graph_.num_vertices();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) diameter_ = std::max(diameter_, dist_(i, j));
  }
  bipartite_ = is_bipartite(graph_);
  max_matching_ = max_matching_size(graph_);
}

HardwareGraph relaxed_graph(const HardwareGraph& graph, int d) {
  if (d < 0) throw GraphError("relaxation level must be non-negative");
  std::vector<Edge> edges;
  const int n = graph.num_vertices();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (graph.distance(i, j) <= d + 1) edges.emplace_back(i, j);
    }
  }
  return HardwareGraph(Graph(n, edges));
}

namespace presets {

HardwareGraph line(int n) {
  if (n < 1) throw GraphError("line needs at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return HardwareGraph(Graph(n, edges));
}

HardwareGraph ring(int n) {
  if (n < 3) throw GraphError("ring needs at least three vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return HardwareGraph(Graph(n, edges));
}

HardwareGraph grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw GraphError("grid dimensions must be >= 1");
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return HardwareGraph(Graph(rows * cols, edges));
}

HardwareGraph ladder(int n) {
  if (n < 2 || n % 2 != 0) {
    throw GraphError("ladder needs an even vertex count >= 2");
  }
  return grid(2, n / 2);
}

HardwareGraph complete(int n) {
  if (n < 1) throw GraphError("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return HardwareGraph(Graph(n, edges));
}

HardwareGraph star(int n) {
  if (n < 2) throw GraphError("star needs at least two vertices");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return HardwareGraph(Graph(n, edges));
}

}  // namespace presets

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw GraphError(
        "invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

HardwareGraph parse_preset(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw GraphError("not a graph preset: '" + std::string(spec) + "'");
  }
  const auto kind = spec.substr(0, colon);
  const auto arg = spec.substr(colon + 1);
  if (kind == "grid") {
    const auto x = arg.find('x');
    if (x == std::string_view::npos) {
      throw GraphError("grid preset must look like grid:RxC");
    }
    return presets::grid(
        parse_int(arg.substr(0, x), "grid rows"),
        parse_int(arg.substr(x + 1), "grid columns"));
  }
  const int n = parse_int(arg, "preset size");
  if (kind == "line") return presets::line(n);
  if (kind == "ring") return presets::ring(n);
  if (kind == "ladder") return presets::ladder(n);
  if (kind == "complete") return presets::complete(n);
  if (kind == "star") return presets::star(n);
  throw GraphError("unknown graph preset '" + std::string(kind) + "'");
}

HardwareGraph parse_graph_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& msg) {
    throw GraphError("line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    try {
      if (n < 0) {
        if (tokens.size() != 1) fail("expected vertex count");
        n = parse_int(tokens[0], "vertex count");
        if (n < 1) fail("vertex count must be positive");
        continue;
      }
      if (tokens.size() != 2) fail("expected an edge 'i j'");
      const int a = parse_int(tokens[0], "vertex id");
      const int b = parse_int(tokens[1], "vertex id");
      if (a < 0 || a >= n || b < 0 || b >= n) fail("vertex id out of range");
      if (a == b) fail("self loop");
      edges.emplace_back(a, b);
    } catch (const GraphError& e) {
      const std::string what = e.what();
      if (what.rfind("line ", 0) == 0) throw;
      fail(what);
    }
  }
  if (n < 0) throw GraphError("graph file is empty");
  return HardwareGraph(Graph(n, edges));
}

std::string write_graph_file(const HardwareGraph& graph) {
  std::ostringstream out;
  out << graph.num_vertices() << '\n';
  for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

HardwareGraph load_graph(const std::string& spec_or_path) {
  if (!std::filesystem::exists(spec_or_path) &&
      spec_or_path.find(':') != std::string::npos) {
    return parse_preset(spec_or_path);
  }
  std::ifstream in(spec_or_path);
  if (!in) throw GraphError("cannot open graph file '" + spec_or_path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_file(buffer.str());
}

}  // namespace tapswap
