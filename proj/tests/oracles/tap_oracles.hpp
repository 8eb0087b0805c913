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

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "tapswap/graph/gate_set.hpp"
#include "tapswap/graph/hardware_graph.hpp"
#include "tapswap/util/random.hpp"

namespace tapswap::oracles {

/** Every token->vertex bijection under which the layer's gates are edges. */
inline std::vector<std::vector<int>> brute_feasible(
    const HardwareGraph& g, const GateSet& layer) {
  std::vector<int> perm(g.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (const TokenPair& p : layer) {
      if (!g.adjacent(perm[p.first], perm[p.second])) ok = false;
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/**
 * Minimum summed movement over all sequences of feasible bijections, by
 * dynamic programming over the full allocation lists. nullopt if some
 * layer (or the distance limit) admits no sequence.
 */
inline std::optional<std::int64_t> brute_tap(
    const HardwareGraph& g, const std::vector<GateSet>& layers,
    std::optional<int> distance_limit = std::nullopt) {
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  if (layers.empty()) return 0;
  auto prev_states = brute_feasible(g, layers[0]);
  std::vector<std::int64_t> prev(prev_states.size(), 0);
  for (std::size_t t = 1; t < layers.size(); ++t) {
    auto states = brute_feasible(g, layers[t]);
    std::vector<std::int64_t> cur(states.size(), kInf);
    for (std::size_t a = 0; a < prev_states.size(); ++a) {
      if (prev[a] >= kInf) continue;
      for (std::size_t b = 0; b < states.size(); ++b) {
        std::int64_t move = 0;
        bool ok = true;
        for (std::size_t q = 0; q < states[b].size(); ++q) {
          const int d = g.distance(prev_states[a][q], states[b][q]);
          if (distance_limit && d > *distance_limit) ok = false;
          move += d;
        }
        if (ok) cur[b] = std::min(cur[b], prev[a] + move);
      }
    }
    prev_states = std::move(states);
    prev = std::move(cur);
  }
  const auto best = std::min_element(prev.begin(), prev.end());
  if (best == prev.end() || *best >= kInf) return std::nullopt;
  return *best;
}

/** Uniform random set of disjoint token pairs of the given size. */
inline GateSet random_layer(int num_tokens, int gates, SplitMix64& rng) {
  std::vector<int> tokens(num_tokens);
  std::iota(tokens.begin(), tokens.end(), 0);
  rng.shuffle(tokens);
  GateSet layer;
  for (int k = 0; k < gates; ++k) {
    layer.push_back({tokens[2 * k], tokens[2 * k + 1]});
  }
  return layer;
}

}  // namespace tapswap::oracles
