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

#include "tapswap/swap/token_swap.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>

#include "tapswap/util/random.hpp"

namespace tapswap {

SwapInstance::SwapInstance(
    const HardwareGraph& graph, Allocation start, Allocation target)
    : graph_(&graph), start_(std::move(start)), target_(std::move(target)) {
  if (start_.size() != graph.num_vertices() ||
      target_.size() != graph.num_vertices()) {
    throw SwapError(
        "allocations must place one token on each of the " +
        std::to_string(graph.num_vertices()) + " vertices");
  }
}

Allocation apply_swaps(
    const Allocation& alloc, std::span<const Swap> swaps,
    const HardwareGraph* edge_check) {
  Allocation out = alloc;
  for (const Swap& s : swaps) {
    if (s[0] < 0 || s[1] < 0 || s[0] >= out.size() || s[1] >= out.size()) {
      throw SwapError("swap on an invalid vertex");
    }
    if (edge_check && !edge_check->adjacent(s[0], s[1])) {
      throw SwapError(
          "swap (" + std::to_string(s[0]) + "," + std::to_string(s[1]) +
          ") is not a hardware edge");
    }
    out.swap_vertices(s[0], s[1]);
  }
  return out;
}

std::size_t schedule_depth(std::span<const Swap> swaps) {
  std::vector<std::size_t> last;
  std::size_t depth = 0;
  for (const Swap& s : swaps) {
    const auto hi = static_cast<std::size_t>(std::max(s[0], s[1]));
    if (last.size() <= hi) last.resize(hi + 1, 0);
    const std::size_t layer = std::max(last[s[0]], last[s[1]]) + 1;
    last[s[0]] = last[s[1]] = layer;
    depth = std::max(depth, layer);
  }
  return depth;
}

namespace {

class Walker {
 public:
  Walker(const SwapInstance& inst, const ApproxOptions& options)
      : graph_(inst.graph()),
        n_(inst.size()),
        tok_(inst.start().to_token()),
        goal_(inst.target().to_vertex()),
        options_(options),
        rng_(options.seed) {}

  std::vector<Swap> run() {
    std::vector<char> touched(n_, 0);
    // Generous bound; the walk has never come close to it in testing.
    const std::size_t guard =
        64 * static_cast<std::size_t>(n_) * n_ * (n_ + 1) + 64;
    while (true) {
      const int start = pick_start(touched);
      if (start < 0) break;
      const std::size_t before = swaps_.size();
      walk_from(start);
      std::fill(touched.begin(), touched.end(), 0);
      for (std::size_t i = before; i < swaps_.size(); ++i) {
        touched[swaps_[i][0]] = touched[swaps_[i][1]] = 1;
      }
      if (swaps_.size() > guard) {
        throw std::logic_error("token swapping walk failed to terminate");
      }
    }
    return std::move(swaps_);
  }

 private:
  bool satisfied(int v) const { return goal_[tok_[v]] == v; }
  int remaining(int v) const { return graph_.distance(v, goal_[tok_[v]]); }
  bool decreasing(int v, int w) const {
    return graph_.distance(w, goal_[tok_[v]]) < remaining(v);
  }

  void swap(int u, int v) {
    std::swap(tok_[u], tok_[v]);
    swaps_.push_back({u, v});
  }

  int pick_start(const std::vector<char>& touched) {
    if (options_.variant == ApproxVariant::kOriginal) {
      std::vector<int> open;
      for (int v = 0; v < n_; ++v) {
        if (!satisfied(v)) open.push_back(v);
      }
      if (open.empty()) return -1;
      return open[rng_.below(open.size())];
    }
    int fallback = -1;
    for (int v = 0; v < n_; ++v) {
      if (satisfied(v)) continue;
      if (!touched[v]) return v;
      if (fallback < 0) fallback = v;
    }
    return fallback;
  }

  // Unsatisfied vertices from which an endless distance-decreasing walk
  // over unsatisfied vertices exists.
  std::vector<char> alive_vertices() const {
    std::vector<char> alive(n_, 0);
    for (int v = 0; v < n_; ++v) alive[v] = !satisfied(v);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n_; ++v) {
        if (!alive[v]) continue;
        bool out = false;
        for (int w : graph_.neighbours(v)) {
          if (alive[w] && decreasing(v, w)) {
            out = true;
            break;
          }
        }
        if (!out) {
          alive[v] = 0;
          changed = true;
        }
      }
    }
    return alive;
  }

  // Length of the shortest cycle through the walk suffix reachable from w
  // along distance-decreasing arcs, or -1.
  int cycle_via(int w, const std::vector<int>& walk,
                const std::vector<int>& pos) const {
    std::vector<int> depth(n_, -1);
    std::deque<int> queue{w};
    depth[w] = 0;
    int best = -1;
    const int len = static_cast<int>(walk.size());
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      if (best >= 0 && depth[x] + 1 >= best) continue;
      for (int y : graph_.neighbours(x)) {
        if (!decreasing(x, y)) continue;
        if (pos[y] >= 0) {
          const int cycle = len - pos[y] + depth[x] + 1;
          if (best < 0 || cycle < best) best = cycle;
        } else if (!satisfied(y) && depth[y] < 0) {
          depth[y] = depth[x] + 1;
          queue.push_back(y);
        }
      }
    }
    return best;
  }

  int choose_next(int v, const std::vector<int>& walk,
                  const std::vector<int>& pos,
                  const std::vector<char>& alive) {
    std::vector<int> options;
    for (int w : graph_.neighbours(v)) {
      if (decreasing(v, w)) options.push_back(w);
    }
    if (options_.variant == ApproxVariant::kOriginal) {
      return options[rng_.below(options.size())];
    }
    // Rank (category, cycle length, id): 0 closes a cycle with the walk,
    // 1 keeps the walk alive, 2 heads into a dead end.
    int best = -1;
    std::array<int, 3> best_key{};
    for (int w : options) {
      std::array<int, 3> key{2, 0, w};
      if (pos[w] >= 0) {
        key = {0, static_cast<int>(walk.size()) - pos[w], w};
      } else if (!satisfied(w)) {
        const int cycle = cycle_via(w, walk, pos);
        if (cycle >= 0) {
          key = {0, cycle, w};
        } else if (alive[w]) {
          key = {1, 0, w};
        }
      }
      if (best < 0 || key < best_key) {
        best = w;
        best_key = key;
      }
    }
    return best;
  }

  void walk_from(int start) {
    const auto alive = options_.variant == ApproxVariant::kModified
                           ? alive_vertices()
                           : std::vector<char>{};
    std::vector<int> walk{start};
    std::vector<int> pos(n_, -1);
    pos[start] = 0;
    while (true) {
      const int v = walk.back();
      const int w = choose_next(v, walk, pos, alive);
      if (pos[w] >= 0) {
        const std::vector<int> cycle(walk.begin() + pos[w], walk.end());
        for (std::size_t i = cycle.size() - 1; i > 0; --i) {
          swap(cycle[i - 1], cycle[i]);
        }
        return;
      }
      if (satisfied(w)) {
        swap(v, w);
        return;
      }
      pos[w] = static_cast<int>(walk.size());
      walk.push_back(w);
    }
  }

  const HardwareGraph& graph_;
  int n_;
  std::vector<int> tok_;
  std::vector<int> goal_;
  ApproxOptions options_;
  SplitMix64 rng_;
  std::vector<Swap> swaps_;
};

}  // namespace

SwapSequence approx_solve(
    const SwapInstance& instance, const ApproxOptions& options) {
  SwapSequence out;
  out.swaps = Walker(instance, options).run();
  out.depth = schedule_depth(out.swaps);
  return out;
}

namespace {

int total_displacement(const SwapInstance& inst) {
  int sum = 0;
  for (int q = 0; q < inst.size(); ++q) {
    sum += inst.graph().distance(
        inst.start().vertex_of(q), inst.target().vertex_of(q));
  }
  return sum;
}

// Cycles of v -> start(target^-1(v)).
struct CycleInfo {
  int count = 0;
  std::vector<std::vector<int>> nontrivial;
};

CycleInfo vertex_cycles(const SwapInstance& inst) {
  const int n = inst.size();
  CycleInfo info;
  std::vector<char> seen(n, 0);
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    ++info.count;
    std::vector<int> cycle;
    for (int x = v; !seen[x];
         x = inst.start().vertex_of(inst.target().token_at(x))) {
      seen[x] = 1;
      cycle.push_back(x);
    }
    if (cycle.size() > 1) info.nontrivial.push_back(std::move(cycle));
  }
  return info;
}

}  // namespace

int distance_lower_bound(const SwapInstance& instance) {
  return (total_displacement(instance) + 1) / 2;
}

std::vector<std::vector<int>> blocking_sets(const SwapInstance& instance) {
  const HardwareGraph& g = instance.graph();
  const int n = instance.size();
  const auto& start = instance.start();
  const auto& target = instance.target();
  std::vector<int> tokens;
  for (int q = 0; q < n; ++q) {
    if (start.vertex_of(q) != target.vertex_of(q)) tokens.push_back(q);
  }
  auto disp = [&](int q) {
    return g.distance(start.vertex_of(q), target.vertex_of(q));
  };
  std::stable_sort(tokens.begin(), tokens.end(),
                   [&](int a, int b) { return disp(a) > disp(b); });

  std::vector<char> used(n, 0);
  std::vector<std::vector<int>> sets(n);
  for (int q : tokens) {
    const int s = start.vertex_of(q);
    const int t = target.vertex_of(q);
    const int d = g.distance(s, t);
    std::vector<int> candidates;
    for (int v = 0; v < n; ++v) {
      const bool happy = start.token_at(v) == target.token_at(v);
      if (happy && !used[v] && g.distance(s, v) + g.distance(v, t) == d) {
        candidates.push_back(v);
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      return g.distance(s, a) < g.distance(s, b);
    });
    std::vector<int>& blocking = sets[q];
    for (int v : candidates) {
      blocking.push_back(v);
      const int need = d + 2 * static_cast<int>(blocking.size());
      bool ok = true;
      for (int b : blocking) {
        const int removed[] = {b};
        const int detour = bfs_distances_without(g.graph(), s, removed)[t];
        if (detour >= 0 && detour < need) {
          ok = false;
          break;
        }
      }
      if (!ok) blocking.pop_back();
    }
    for (int v : blocking) used[v] = 1;
  }
  return sets;
}

int blocking_lower_bound(const SwapInstance& instance) {
  int extra = 0;
  for (const auto& set : blocking_sets(instance)) {
    extra += static_cast<int>(set.size());
  }
  return distance_lower_bound(instance) + extra;
}

int split_graph_lower_bound(
    const SwapInstance& instance, std::span<const int> independent_set) {
  for (int v : independent_set) {
    if (v < 0 || v >= instance.size()) {
      throw SwapError("independent set vertex out of range");
    }
  }
  if (!is_independent_set(instance.graph().graph(), independent_set)) {
    throw SwapError("vertex set is not independent");
  }
  std::vector<char> in_set(instance.size(), 0);
  for (int v : independent_set) in_set[v] = 1;
  const CycleInfo info = vertex_cycles(instance);
  int inside = 0;
  for (const auto& cycle : info.nontrivial) {
    if (std::all_of(cycle.begin(), cycle.end(),
                    [&](int v) { return in_set[v]; })) {
      ++inside;
    }
  }
  return instance.size() - info.count + 2 * inside;
}

int forced_parity(const SwapInstance& instance) {
  return (instance.size() - vertex_cycles(instance).count) % 2;
}

int parity_adjust(const SwapInstance& instance, int bound) {
  if (bound < 0) throw SwapError("bound must be non-negative");
  return bound % 2 == forced_parity(instance) ? bound : bound + 1;
}

std::vector<std::vector<int>> candidate_independent_sets(
    const HardwareGraph& graph, int random_restarts) {
  std::vector<std::vector<int>> sets{greedy_independent_set(graph.graph())};
  std::vector<int> order(graph.num_vertices());
  for (int r = 0; r < random_restarts; ++r) {
    std::iota(order.begin(), order.end(), 0);
    SplitMix64 rng(0x5eed0000u + static_cast<std::uint64_t>(r));
    rng.shuffle(order);
    auto set = greedy_independent_set(graph.graph(), order);
    if (std::find(sets.begin(), sets.end(), set) == sets.end()) {
      sets.push_back(std::move(set));
    }
  }
  return sets;
}

int combined_lower_bound(
    const SwapInstance& instance,
    std::span<const std::vector<int>> independent_sets) {
  int bound = blocking_lower_bound(instance);
  for (const auto& set : independent_sets) {
    bound = std::max(bound, split_graph_lower_bound(instance, set));
  }
  return parity_adjust(instance, bound);
}

namespace {

std::string key_of(const std::vector<int>& tok) {
  return std::string(tok.begin(), tok.end());
}

struct SearchNode {
  int parent;
  Swap swap;
  int g;
  int h;
  std::vector<int> tok;
};

struct QueueEntry {
  int f;
  int g;
  std::size_t seq;
  int node;
  // Min f, then deeper nodes, then first inserted.
  bool operator<(const QueueEntry& o) const {
    if (f != o.f) return f > o.f;
    if (g != o.g) return g < o.g;
    return seq > o.seq;
  }
};

}  // namespace

ExactResult exact_solve(
    const SwapInstance& instance, const ExactLimits& limits) {
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  const HardwareGraph& graph = instance.graph();
  const auto sets = candidate_independent_sets(graph);
  const auto& target = instance.target();
  const std::string goal = key_of(target.to_token());

  auto bound_at = [&](const std::vector<int>& tok) {
    const SwapInstance sub(graph, Allocation::from_vertex_tokens(tok), target);
    return combined_lower_bound(sub, sets);
  };
  auto approx_from = [&](const std::vector<int>& tok) {
    const SwapInstance sub(graph, Allocation::from_vertex_tokens(tok), target);
    return approx_solve(sub).swaps;
  };

  std::vector<SearchNode> arena;
  auto path_to = [&](int node) {
    std::vector<Swap> path;
    for (int x = node; arena[x].parent >= 0; x = arena[x].parent) {
      path.push_back(arena[x].swap);
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  ExactResult result;
  std::vector<Swap> best = approx_from(instance.start().to_token());
  int upper = static_cast<int>(best.size());

  const auto& root_tok = instance.start().to_token();
  const int h0 = bound_at(root_tok);
  arena.push_back({-1, {0, 0}, 0, h0, root_tok});
  std::priority_queue<QueueEntry> open;
  std::size_t seq = 0;
  open.push({h0, 0, seq++, 0});
  std::unordered_map<std::string, int> best_g{{key_of(root_tok), 0}};

  bool complete = true;
  int frontier_bound = upper;
  while (!open.empty()) {
    const QueueEntry top = open.top();
    if (top.f >= upper) break;
    if (limits.max_nodes && result.nodes_expanded >= *limits.max_nodes) {
      complete = false;
      frontier_bound = top.f;
      break;
    }
    if (limits.time_limit && (result.nodes_expanded & 63) == 0 &&
        Clock::now() - started > *limits.time_limit) {
      complete = false;
      frontier_bound = top.f;
      break;
    }
    open.pop();
    const int id = top.node;
    const int g = arena[id].g;
    if (best_g[key_of(arena[id].tok)] < g) continue;
    ++result.nodes_expanded;
    for (const Edge& e : graph.edges()) {
      std::vector<int> tok = arena[id].tok;
      std::swap(tok[e.u], tok[e.v]);
      const std::string key = key_of(tok);
      auto it = best_g.find(key);
      if (it != best_g.end() && it->second <= g + 1) continue;
      best_g[key] = g + 1;
      if (key == goal) {
        if (g + 1 < upper) {
          upper = g + 1;
          best = path_to(id);
          best.push_back({e.u, e.v});
        }
        continue;
      }
      const int h = bound_at(tok);
      if (g + 1 + h >= upper) continue;
      if (h < arena[id].h) {
        auto tail = approx_from(tok);
        if (g + 1 + static_cast<int>(tail.size()) < upper) {
          upper = g + 1 + static_cast<int>(tail.size());
          best = path_to(id);
          best.push_back({e.u, e.v});
          best.insert(best.end(), tail.begin(), tail.end());
        }
      }
      arena.push_back({id, {e.u, e.v}, g + 1, h, std::move(tok)});
      open.push({g + 1 + h, g + 1, seq++, static_cast<int>(arena.size()) - 1});
    }
  }

  result.sequence.swaps = std::move(best);
  result.sequence.depth = schedule_depth(result.sequence.swaps);
  result.optimal = complete;
  result.lower_bound =
      complete ? upper : std::max(h0, std::min(frontier_bound, upper));
  return result;
}

int brute_force_opt(const SwapInstance& instance) {
  const int n = instance.size();
  if (n > kBruteForceMaxVertices) {
    throw SwapError(
        "brute force refused: " + std::to_string(n) + " vertices exceed " +
        std::to_string(kBruteForceMaxVertices));
  }
  auto encode = [n](const std::vector<int>& tok) {
    std::uint32_t code = 0;
    for (int v = 0; v < n; ++v) code = code * 8 + static_cast<std::uint32_t>(tok[v]);
    return code;
  };
  const std::uint32_t goal = encode(instance.target().to_token());
  std::vector<int> tok = instance.start().to_token();
  std::unordered_map<std::uint32_t, int> dist{{encode(tok), 0}};
  std::deque<std::vector<int>> queue{tok};
  if (encode(tok) == goal) return 0;
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    const int d = dist[encode(cur)];
    for (const Edge& e : instance.graph().edges()) {
      std::swap(cur[e.u], cur[e.v]);
      const std::uint32_t code = encode(cur);
      if (dist.emplace(code, d + 1).second) {
        if (code == goal) return d + 1;
        queue.push_back(cur);
      }
      std::swap(cur[e.u], cur[e.v]);
    }
  }
  throw SwapError("target allocation unreachable");
}

}  // namespace tapswap
