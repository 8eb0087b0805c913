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

#include "tapswap/graph/gate_set.hpp"

#include <algorithm>
#include <string>

namespace tapswap {

bool is_disjoint(std::span<const TokenPair> pairs) {
  std::vector<int> seen;
  seen.reserve(pairs.size() * 2);
  for (const auto& p : pairs) {
    seen.push_back(p.first);
    seen.push_back(p.second);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

ConnectivityGraph connectivity_graph(std::span<const TokenPair> pairs) {
  ConnectivityGraph out;
  for (const auto& p : pairs) {
    if (p.first == p.second) {
      throw GraphError(
          "token pair (" + std::to_string(p.first) + "," +
          std::to_string(p.second) + ") acts on a single token");
    }
    out.tokens.push_back(p.first);
    out.tokens.push_back(p.second);
  }
  std::sort(out.tokens.begin(), out.tokens.end());
  out.tokens.erase(
      std::unique(out.tokens.begin(), out.tokens.end()), out.tokens.end());
  auto index = [&](int token) {
    return static_cast<int>(
        std::lower_bound(out.tokens.begin(), out.tokens.end(), token) -
        out.tokens.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& p : pairs) edges.emplace_back(index(p.first), index(p.second));
  out.graph = Graph(static_cast<int>(out.tokens.size()), edges);
  return out;
}

}  // namespace tapswap
