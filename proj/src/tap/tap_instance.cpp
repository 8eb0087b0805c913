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

#include "tapswap/tap/tap_instance.hpp"

#include <algorithm>
#include <deque>

#include "placement.hpp"

namespace tapswap {

TapInstance::TapInstance(
    const HardwareGraph& graph, std::vector<GateSet> layers,
    TapOptions options)
    : graph_(graph), layers_(std::move(layers)), options_(options) {
  const int n = graph.num_vertices();
  active_mask_.assign(n, 0);
  for (std::size_t t = 0; t < layers_.size(); ++t) {
    for (const TokenPair& p : layers_[t]) {
      for (int q : {p.first, p.second}) {
        if (q < 0 || q >= n) {
          throw InfeasibleInstance(
              "token " + std::to_string(q) + " exceeds the " +
              std::to_string(n) + " hardware vertices");
        }
        active_mask_[q] = 1;
      }
      if (p.first == p.second) {
        throw std::invalid_argument("gate acts twice on one token");
      }
    }
    if (!is_disjoint(layers_[t])) {
      throw std::invalid_argument(
          "layer " + std::to_string(t + 1) + " is not vertex-disjoint");
    }
  }
  if (options_.distance_limit && *options_.distance_limit < 0) {
    throw std::invalid_argument("distance limit must be non-negative");
  }
  for (int q = 0; q < n; ++q) {
    if (active_mask_[q]) active_.push_back(q);
  }
  frozen_.assign(n, -1);
  if (!options_.active_only) {
    region_.resize(n);
    for (int v = 0; v < n; ++v) region_[v] = v;
    return;
  }
  // BFS ball around the vertex of smallest eccentricity.
  int centre = 0;
  int best = n + 1;
  for (int v = 0; v < n; ++v) {
    int ecc = 0;
    for (int w = 0; w < n; ++w) ecc = std::max(ecc, graph.distance(v, w));
    if (ecc < best) {
      best = ecc;
      centre = v;
    }
  }
  std::vector<char> seen(n, 0);
  std::deque<int> queue{centre};
  seen[centre] = 1;
  while (!queue.empty() && region_.size() < active_.size()) {
    const int v = queue.front();
    queue.pop_front();
    region_.push_back(v);
    for (int w : graph.neighbours(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::sort(region_.begin(), region_.end());
  std::vector<char> in_region(n, 0);
  for (int v : region_) in_region[v] = 1;
  int next_vertex = 0;
  for (int q = 0; q < n; ++q) {
    if (active_mask_[q]) continue;
    while (in_region[next_vertex]) ++next_vertex;
    frozen_[q] = next_vertex++;
  }
}

struct FeasibleAllocations::Impl {
  Impl(const TapInstance& inst, std::size_t layer)
      : frozen(inst.frozen_vertex()) {
    const int n = inst.num_tokens();
    std::vector<char> allowed(n, 1);
    std::vector<int> tokens;
    for (int q = 0; q < n; ++q) {
      if (frozen[q] >= 0) {
        allowed[frozen[q]] = 0;
      } else {
        tokens.push_back(q);
      }
    }
    enumerator.emplace(
        inst.graph(), inst.layers()[layer], tokens, allowed, n);
  }

  std::vector<int> frozen;
  std::optional<detail::PlacementEnumerator> enumerator;
};

FeasibleAllocations::FeasibleAllocations(
    const TapInstance& instance, std::size_t layer)
    : impl_(std::make_shared<Impl>(instance, layer)) {}

std::optional<Allocation> FeasibleAllocations::next() {
  if (!impl_->enumerator->next()) return std::nullopt;
  std::vector<int> to_vertex = impl_->enumerator->position();
  for (std::size_t q = 0; q < to_vertex.size(); ++q) {
    if (impl_->frozen[q] >= 0) to_vertex[q] = impl_->frozen[q];
  }
  return Allocation(std::move(to_vertex));
}

FeasibleAllocations feasible_allocations(
    const TapInstance& instance, std::size_t layer) {
  if (layer >= instance.num_layers()) {
    throw std::out_of_range("layer index out of range");
  }
  const auto gates = static_cast<int>(instance.layers()[layer].size());
  if (gates > instance.graph().max_matching()) {
    throw InfeasibleInstance(
        "layer " + std::to_string(layer + 1) + " has " +
        std::to_string(gates) + " gates but the hardware graph matches at most " +
        std::to_string(instance.graph().max_matching()));
  }
  return FeasibleAllocations(instance, layer);
}

}  // namespace tapswap
