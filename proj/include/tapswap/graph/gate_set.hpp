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

#include <span>
#include <vector>

#include "tapswap/graph/graph.hpp"

namespace tapswap {

/** Ordered pair of distinct logical tokens acted on by one two-qubit gate. */
struct TokenPair {
  int first = 0;
  int second = 0;

  friend bool operator==(const TokenPair&, const TokenPair&) = default;
};

/** Gates of one layer; pairs must be vertex-disjoint. */
using GateSet = std::vector<TokenPair>;

bool is_disjoint(std::span<const TokenPair> pairs);

/** Connectivity graph of a set of token pairs. */
struct ConnectivityGraph {
  /** Vertex k of `graph` stands for token `tokens[k]`. */
  Graph graph;
  std::vector<int> tokens;
};

/**
 * Vertices are the tokens occurring in any pair (ascending), edges the
 * undirected pairs. Throws GraphError on a pair (q,q).
 */
ConnectivityGraph connectivity_graph(std::span<const TokenPair> pairs);

}  // namespace tapswap
