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

#include <cstddef>

#include "tapswap/graph/graph.hpp"

namespace tapswap {

/** Outcome of a budgeted isomorphism search. */
enum class SgiResult { kYes, kNo, kUndecided };

inline constexpr std::size_t kDefaultSgiBudget = 1'000'000;

/**
 * True iff some node-induced subgraph of `host` is isomorphic to `pattern`.
 *
 * VF2-style backtracking: pattern vertices are matched in a connectivity
 * preserving, degree-sorted order and candidates are checked for both
 * adjacency and non-adjacency against already matched vertices. Each
 * candidate assignment counts against `budget`; running out yields
 * kUndecided.
 */
SgiResult node_induced_subgraph_isomorphic(
    const Graph& pattern, const Graph& host,
    std::size_t budget = kDefaultSgiBudget);

/**
 * True iff some edge-induced subgraph of `host` is isomorphic to `pattern`.
 *
 * Isolated pattern vertices are ignored. Equivalent to an injective vertex
 * map that sends every pattern edge onto a host edge.
 */
SgiResult edge_induced_subgraph_isomorphic(
    const Graph& pattern, const Graph& host,
    std::size_t budget = kDefaultSgiBudget);

/**
 * Node-induced search on the two line graphs.
 *
 * Agrees with edge_induced_subgraph_isomorphic except where a triangle and
 * a claw trade places (both have a triangle as line graph), so a kYes here is
 * not a proof of embeddability. A kNo is.
 */
SgiResult line_graph_sgi(
    const Graph& pattern, const Graph& host,
    std::size_t budget = kDefaultSgiBudget);

}  // namespace tapswap
