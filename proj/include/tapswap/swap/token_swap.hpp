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
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "tapswap/graph/allocation.hpp"
#include "tapswap/graph/hardware_graph.hpp"

namespace tapswap {

class SwapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Swap of the tokens at two vertices. */
using Swap = std::array<int, 2>;

/**
 * Token swapping instance over a hardware graph. Allocations map tokens to
 * vertices and must both have one token per vertex.
 */
class SwapInstance {
 public:
  SwapInstance(const HardwareGraph& graph, Allocation start, Allocation target);

  const HardwareGraph& graph() const { return *graph_; }
  const Allocation& start() const { return start_; }
  const Allocation& target() const { return target_; }
  int size() const { return start_.size(); }

 private:
  const HardwareGraph* graph_;
  Allocation start_;
  Allocation target_;
};

struct SwapSequence {
  std::vector<Swap> swaps;
  /** Layer count of the greedy parallel schedule. */
  std::size_t depth = 0;

  std::size_t size() const { return swaps.size(); }
};

/**
 * Exchanges the tokens at the two vertices of each swap, in order. With a
 * graph, a swap on a non-edge throws SwapError.
 */
Allocation apply_swaps(
    const Allocation& alloc, std::span<const Swap> swaps,
    const HardwareGraph* edge_check = nullptr);

/** Greedy list schedule; swaps sharing a vertex keep their order. */
std::size_t schedule_depth(std::span<const Swap> swaps);

enum class ApproxVariant {
  /**
   * Starts away from the previous chain and prefers neighbours closing the
   * smallest cycle, then neighbours avoiding dead ends.
   */
  kModified,
  /** Random unsatisfied start and random distance-decreasing step. */
  kOriginal,
};

struct ApproxOptions {
  ApproxVariant variant = ApproxVariant::kModified;
  /** Only used by kOriginal. */
  std::uint64_t seed = 0;
};

/**
 * Walk-based approximation: repeatedly walks along distance-decreasing
 * neighbours from an unsatisfied vertex and performs the happy swap chain
 * of the closed cycle, or one unhappy swap at a dead end.
 */
SwapSequence approx_solve(
    const SwapInstance& instance, const ApproxOptions& options = {});

/** ceil(sum of token displacements / 2). */
int distance_lower_bound(const SwapInstance& instance);

/**
 * Distance bound plus one per blocking vertex. Blocking sets are built
 * greedily per unsatisfied token (largest displacement first) and each
 * added vertex is kept only if the detour condition still holds for the
 * enlarged set; sets are kept pairwise disjoint.
 */
int blocking_lower_bound(const SwapInstance& instance);

/** Blocking sets chosen by blocking_lower_bound, indexed by token. */
std::vector<std::vector<int>> blocking_sets(const SwapInstance& instance);

/**
 * n - r + 2q, with r the cycle count (fix points included) of the
 * vertex permutation and q the non-trivial cycles inside the independent
 * set. Throws SwapError if the set is not independent.
 */
int split_graph_lower_bound(
    const SwapInstance& instance, std::span<const int> independent_set);

/** Parity every solution length must have: (n - r) mod 2. */
int forced_parity(const SwapInstance& instance);

/** Raises bound by one if its parity is not the forced one. */
int parity_adjust(const SwapInstance& instance, int bound);

/** Greedy-by-degree set plus `random_restarts` seeded random-order sets. */
std::vector<std::vector<int>> candidate_independent_sets(
    const HardwareGraph& graph, int random_restarts = 3);

/**
 * parity_adjust(max(blocking, split over the candidate sets)). Admissible.
 */
int combined_lower_bound(
    const SwapInstance& instance,
    std::span<const std::vector<int>> independent_sets);

struct ExactLimits {
  std::optional<std::chrono::duration<double>> time_limit;
  std::optional<std::size_t> max_nodes;
};

struct ExactResult {
  SwapSequence sequence;
  bool optimal = false;
  /** Proven lower bound on the optimum; equals the length when optimal. */
  int lower_bound = 0;
  std::size_t nodes_expanded = 0;
};

/**
 * Best-first branch and bound in the Cayley graph with h given by
 * combined_lower_bound. The incumbent comes from approx_solve at the root
 * and at expanded nodes whose bound decreased.
 */
ExactResult exact_solve(
    const SwapInstance& instance, const ExactLimits& limits = {});

/** Largest instance size brute_force_opt accepts. */
inline constexpr int kBruteForceMaxVertices = 8;

/** BFS distance in the Cayley graph. Throws SwapError above the guard. */
int brute_force_opt(const SwapInstance& instance);

}  // namespace tapswap
