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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tapswap/graph/allocation.hpp"

namespace tapswap::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kInfeasible = 2,
  kLimitReached = 3,
};

/** Entry point behind the `tapswap` binary; argv[0] is the program name. */
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

/**
 * Swap-instance file: `graph: <preset or path>`, `start: t:v ...` and
 * `target: t:v ...`, one per line, `#` comments. Relative graph paths are
 * resolved against `base_dir`.
 */
struct SwapFile {
  std::string graph;
  Allocation start;
  Allocation target;
};
SwapFile parse_swap_file(std::string_view text);

/** `t:v` pairs with t = 0, 1, ... in order. */
Allocation parse_allocation(std::string_view text);

struct BenchSuite {
  std::string graph = "line:8";
  /** "qv" or "zero-swap". */
  std::string kind = "qv";
  int depth_min = 4;
  int depth_max = 8;
  int instances = 10;
  /** zero-swap only; 0 means half the vertex count. */
  int gates_per_layer = 0;
  std::uint64_t seed = 1;
  std::size_t sgi_budget = 100'000;
  bool exact_swaps = false;
};

struct BenchRow {
  int depth = 0;
  int instances = 0;
  double swaps_mean = 0, swaps_std = 0;
  double tap_cost_mean = 0;
  double gate_increase_mean = 0, gate_increase_std = 0;
  double depth_increase_mean = 0, depth_increase_std = 0;
  int tap_optimal = 0;
  int verified = 0;
};

/** Runs without wall-clock limits so that results only depend on the seed. */
std::vector<BenchRow> run_bench(const BenchSuite& suite);
std::string bench_csv(const std::vector<BenchRow>& rows);
std::string bench_table(const std::vector<BenchRow>& rows);

}  // namespace tapswap::cli
