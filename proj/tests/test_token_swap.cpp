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

#include "oracles/swap_oracles.hpp"
#include "tapswap/swap/token_swap.hpp"

namespace tapswap {
namespace {

SwapInstance make(const HardwareGraph& g, std::vector<int> from,
                  std::vector<int> to) {
  return SwapInstance(g, Allocation::from_vertex_tokens(std::move(from)),
                      Allocation::from_vertex_tokens(std::move(to)));
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool solves(const SwapInstance& inst, const SwapSequence& seq) {
  return apply_swaps(inst.start(), seq.swaps, &inst.graph()) == inst.target();
}

std::vector<HardwareGraph> small_graphs() {
  return {presets::line(5), presets::ring(5), presets::ladder(6),
          presets::complete(4), presets::star(5), presets::grid(2, 2),
          presets::line(6), presets::ring(6)};
}

}  // namespace

TEST_CASE("Applying swaps") {
  // Tokens q0..q3 at vertices 3,2,1,0 on the 4-line.
  const Allocation a({3, 2, 1, 0});
  const Swap s{0, 1};
  const Allocation once = apply_swaps(a, std::span(&s, 1));
  CHECK(once == Allocation({3, 2, 0, 1}));
  const std::vector<Swap> twice{{0, 1}, {0, 1}};
  CHECK(apply_swaps(a, twice) == a);
  CHECK(apply_swaps(a, {}) == a);
  const auto line4 = presets::line(4);
  const std::vector<Swap> bad{{0, 2}};
  CHECK_THROWS_AS(apply_swaps(a, bad, &line4), SwapError);
  CHECK_NOTHROW(apply_swaps(a, bad));
}

TEST_CASE("Schedule depth") {
  CHECK(schedule_depth({}) == 0);
  const std::vector<Swap> disjoint{{0, 1}, {2, 3}};
  CHECK(schedule_depth(disjoint) == 1);
  const std::vector<Swap> chain{{0, 1}, {1, 2}};
  CHECK(schedule_depth(chain) == 2);
  const std::vector<Swap> mixed{{0, 1}, {1, 2}, {3, 4}, {0, 1}};
  CHECK(schedule_depth(mixed) == 3);
}

TEST_CASE("Instance validation") {
  const auto line3 = presets::line(3);
  CHECK_THROWS_AS(
      SwapInstance(line3, Allocation::identity(2), Allocation::identity(3)),
      SwapError);
}

TEST_CASE("Approximation basics") {
  const auto ring5 = presets::ring(5);
  CHECK(approx_solve(make(ring5, identity_perm(5), identity_perm(5))).size() == 0);
  const auto inst = make(ring5, {1, 2, 3, 4, 0}, identity_perm(5));
  const auto seq = approx_solve(inst);
  CHECK(solves(inst, seq));
  CHECK(seq.depth == schedule_depth(seq.swaps));
  CHECK(seq.size() == 4);
}

TEST_CASE("Approximation is feasible and within factor four") {
  SplitMix64 rng(31);
  for (const auto& g : small_graphs()) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto from = oracles::random_permutation(g.num_vertices(), rng);
      const auto to = oracles::random_permutation(g.num_vertices(), rng);
      const auto inst = make(g, from, to);
      const int opt = oracles::swap_distance(g, from, to);
      for (auto variant : {ApproxVariant::kModified, ApproxVariant::kOriginal}) {
        const auto seq = approx_solve(inst, {variant, rng()});
        REQUIRE(solves(inst, seq));
        CHECK(static_cast<int>(seq.size()) <= 4 * opt);
        CHECK(static_cast<int>(seq.size()) >= opt);
      }
    }
  }
}

TEST_CASE("Approximation is optimal on lines") {
  SplitMix64 rng(8);
  for (int n = 2; n <= 10; ++n) {
    const auto g = presets::line(n);
    for (int trial = 0; trial < 40; ++trial) {
      const auto from = oracles::random_permutation(n, rng);
      const auto to = oracles::random_permutation(n, rng);
      const auto seq = approx_solve(make(g, from, to));
      CHECK(static_cast<int>(seq.size()) ==
            oracles::line_swap_distance(from, to));
    }
  }
}

TEST_CASE("Approximation terminates on larger graphs") {
  SplitMix64 rng(12);
  for (const auto& g :
       {presets::grid(4, 4), presets::ring(16), presets::ladder(16),
        presets::grid(3, 5), presets::star(9), presets::complete(9)}) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto inst = make(g, oracles::random_permutation(g.num_vertices(), rng),
                             oracles::random_permutation(g.num_vertices(), rng));
      for (auto variant : {ApproxVariant::kModified, ApproxVariant::kOriginal}) {
        const auto seq = approx_solve(inst, {variant, rng()});
        CHECK(solves(inst, seq));
        CHECK(static_cast<int>(seq.size()) >= distance_lower_bound(inst));
      }
    }
  }
}

TEST_CASE("Distance bound examples") {
  const auto line4 = presets::line(4);
  CHECK(distance_lower_bound(make(line4, identity_perm(4), identity_perm(4))) == 0);
  CHECK(distance_lower_bound(make(line4, {1, 0, 2, 3}, identity_perm(4))) == 1);
  const auto tri = presets::complete(3);
  const auto rot = make(tri, {1, 2, 0}, identity_perm(3));
  CHECK(distance_lower_bound(rot) == 2);
  CHECK(oracles::swap_distance(tri, {1, 2, 0}, identity_perm(3)) == 2);
}

TEST_CASE("Blocking bound examples") {
  const auto line4 = presets::line(4);
  CHECK(blocking_lower_bound(make(line4, identity_perm(4), identity_perm(4))) == 0);
  // End tokens trade places across two satisfied middle vertices.
  const auto ends = make(line4, {3, 1, 2, 0}, identity_perm(4));
  const int plain = distance_lower_bound(ends);
  const int blocking = blocking_lower_bound(ends);
  const int opt = oracles::swap_distance(line4, {3, 1, 2, 0}, identity_perm(4));
  CHECK(plain == 3);
  CHECK(plain < blocking);
  CHECK(blocking <= opt);
  CHECK(opt == 5);

  // Every vertex unsatisfied: no blocking vertices at all.
  const auto ring5 = presets::ring(5);
  const auto rot = make(ring5, {1, 2, 3, 4, 0}, identity_perm(5));
  CHECK(blocking_lower_bound(rot) == distance_lower_bound(rot));
}

TEST_CASE("Blocking sets satisfy the detour and disjointness conditions") {
  SplitMix64 rng(77);
  for (const auto& g : small_graphs()) {
    for (int trial = 0; trial < 40; ++trial) {
      const int n = g.num_vertices();
      auto from = identity_perm(n);
      // Mostly satisfied instances so that blocking vertices exist.
      const int a = static_cast<int>(rng.below(n));
      const int b = static_cast<int>(rng.below(n));
      std::swap(from[a], from[b]);
      const auto inst = make(g, from, identity_perm(n));
      const auto sets = blocking_sets(inst);
      std::vector<int> owner(n, -1);
      for (int q = 0; q < n; ++q) {
        const int s = inst.start().vertex_of(q);
        const int t = inst.target().vertex_of(q);
        for (int v : sets[q]) {
          CHECK(owner[v] == -1);
          owner[v] = q;
          CHECK(inst.start().token_at(v) == inst.target().token_at(v));
          const int removed[] = {v};
          const int detour = bfs_distances_without(g.graph(), s, removed)[t];
          if (detour >= 0) {
            CHECK(detour >= g.distance(s, t) +
                                2 * static_cast<int>(sets[q].size()));
          }
        }
      }
    }
  }
}

TEST_CASE("Split graph bound examples") {
  const auto line4 = presets::line(4);
  CHECK(split_graph_lower_bound(make(line4, identity_perm(4), identity_perm(4)),
                                std::vector<int>{0, 2}) == 0);
  const auto adjacent = make(line4, {1, 0, 2, 3}, identity_perm(4));
  CHECK(split_graph_lower_bound(adjacent, std::vector<int>{0, 2}) == 1);
  CHECK(oracles::swap_distance(line4, {1, 0, 2, 3}, identity_perm(4)) == 1);

  const auto star4 = presets::star(4);
  const auto leaves = make(star4, {0, 2, 1, 3}, identity_perm(4));
  CHECK(split_graph_lower_bound(leaves, std::vector<int>{1, 2, 3}) == 3);
  CHECK(oracles::swap_distance(star4, {0, 2, 1, 3}, identity_perm(4)) == 3);
  CHECK(distance_lower_bound(leaves) == 2);

  CHECK_THROWS_AS(split_graph_lower_bound(adjacent, std::vector<int>{0, 1}),
                  SwapError);
}

TEST_CASE("Parity adjustment") {
  const auto line4 = presets::line(4);
  const auto id = make(line4, identity_perm(4), identity_perm(4));
  CHECK(parity_adjust(id, 0) == 0);
  CHECK(parity_adjust(make(line4, {1, 0, 2, 3}, identity_perm(4)), 0) == 1);
  const auto tri = presets::complete(3);
  const auto rot = make(tri, {1, 2, 0}, identity_perm(3));
  CHECK(parity_adjust(rot, 1) == 2);
  CHECK(parity_adjust(rot, 2) == 2);
}

TEST_CASE("Bounds are admissible and parity is forced") {
  SplitMix64 rng(404);
  for (const auto& g : small_graphs()) {
    const auto sets = candidate_independent_sets(g);
    for (const auto& s : sets) CHECK(is_independent_set(g.graph(), s));
    for (int trial = 0; trial < 60; ++trial) {
      const auto from = oracles::random_permutation(g.num_vertices(), rng);
      const auto to = oracles::random_permutation(g.num_vertices(), rng);
      const auto inst = make(g, from, to);
      const int opt = oracles::swap_distance(g, from, to);
      CHECK(distance_lower_bound(inst) <= opt);
      CHECK(blocking_lower_bound(inst) >= distance_lower_bound(inst));
      CHECK(blocking_lower_bound(inst) <= opt);
      for (const auto& s : sets) CHECK(split_graph_lower_bound(inst, s) <= opt);
      CHECK(combined_lower_bound(inst, sets) <= opt);
      const int sign = oracles::permutation_sign(from, to);
      CHECK(opt % 2 == (1 - sign) / 2);
      CHECK(forced_parity(inst) == opt % 2);
    }
  }
}

TEST_CASE("Exact solver matches the oracle") {
  SplitMix64 rng(2718);
  for (const auto& g : small_graphs()) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto from = oracles::random_permutation(g.num_vertices(), rng);
      const auto to = oracles::random_permutation(g.num_vertices(), rng);
      const auto inst = make(g, from, to);
      const auto result = exact_solve(inst);
      REQUIRE(result.optimal);
      CHECK(solves(inst, result.sequence));
      const int opt = oracles::swap_distance(g, from, to);
      CHECK(static_cast<int>(result.sequence.size()) == opt);
      CHECK(result.lower_bound == opt);
      CHECK(static_cast<int>(result.sequence.size()) % 2 == forced_parity(inst));
      CHECK(brute_force_opt(inst) == opt);
    }
  }
  const auto line4 = presets::line(4);
  CHECK(exact_solve(make(line4, identity_perm(4), identity_perm(4))).sequence.size() == 0);
  CHECK(exact_solve(make(line4, {0, 2, 1, 3}, identity_perm(4))).sequence.size() == 1);
}

TEST_CASE("Exact solver under a node limit returns a flagged incumbent") {
  const auto g = presets::grid(3, 3);
  SplitMix64 rng(5);
  const auto inst = make(g, oracles::random_permutation(9, rng),
                         oracles::random_permutation(9, rng));
  ExactLimits limits;
  limits.max_nodes = 1;
  const auto result = exact_solve(inst, limits);
  CHECK(solves(inst, result.sequence));
  CHECK(result.lower_bound <= static_cast<int>(result.sequence.size()));
  if (!result.optimal) {
    CHECK(result.lower_bound >= distance_lower_bound(inst));
  }
}

TEST_CASE("Brute force oracle") {
  const auto ring5 = presets::ring(5);
  CHECK(brute_force_opt(make(ring5, identity_perm(5), identity_perm(5))) == 0);
  CHECK(brute_force_opt(make(ring5, {1, 0, 2, 3, 4}, identity_perm(5))) == 1);
  const auto rot = make(ring5, {1, 2, 3, 4, 0}, identity_perm(5));
  CHECK(brute_force_opt(rot) == 4);
  CHECK(split_graph_lower_bound(rot, std::vector<int>{}) == 4);
  CHECK_THROWS_AS(
      brute_force_opt(make(presets::line(9), identity_perm(9), identity_perm(9))),
      SwapError);
}

TEST_CASE("Blocking and split bounds complement each other") {
  // Share of instances where each bound is the stronger one, on a sparse
  // and on a dense family.
  auto share = [](const HardwareGraph& g, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const auto sets = candidate_independent_sets(g);
    int blocking_wins = 0;
    int split_wins = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int n = g.num_vertices();
      auto from = identity_perm(n);
      const int swaps = 1 + static_cast<int>(rng.below(3));
      for (int k = 0; k < swaps; ++k) {
        std::swap(from[rng.below(n)], from[rng.below(n)]);
      }
      const auto inst = make(g, from, identity_perm(n));
      int split = 0;
      for (const auto& s : sets) split = std::max(split, split_graph_lower_bound(inst, s));
      const int blocking = blocking_lower_bound(inst);
      if (blocking > split) ++blocking_wins;
      if (split > blocking) ++split_wins;
    }
    return std::pair{blocking_wins, split_wins};
  };
  const auto [line_b, line_s] = share(presets::line(8), 1);
  const auto [clique_b, clique_s] = share(presets::complete(8), 1);
  CHECK(line_b > clique_b);
  CHECK(clique_s > line_s);
}

}  // namespace tapswap
