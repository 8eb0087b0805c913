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

#include "tapswap/tap/tap_solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <queue>
#include <string>
#include <unordered_map>

#include "placement.hpp"

namespace tapswap {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

}  // namespace

std::vector<int> min_cost_assignment(
    const std::vector<std::vector<std::int64_t>>& cost) {
  // Hungarian method with potentials, 1-based internally.
  const int n = static_cast<int>(cost.size());
  if (n == 0) return {};
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      std::int64_t delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

std::int64_t transition_cost(
    const HardwareGraph& graph, const Allocation& from, const Allocation& to) {
  std::int64_t sum = 0;
  for (int q = 0; q < from.size(); ++q) {
    sum += graph.distance(from.vertex_of(q), to.vertex_of(q));
  }
  return sum;
}

std::vector<SgiCut> generate_sgi_cuts(const TapInstance& instance) {
  using Clock = std::chrono::steady_clock;
  const auto& opts = instance.options();
  const std::size_t L = instance.num_layers();
  std::vector<SgiCut> cuts;
  if (!opts.use_cuts || L < 2) return cuts;
  const auto deadline =
      Clock::now() +
      std::chrono::duration_cast<Clock::duration>(opts.cut_time_limit);
  if (opts.cut_time_limit.count() <= 0) return cuts;

  const HardwareGraph& graph = instance.graph();
  // H^d is complete from d = diameter - 1 on, so only smaller d can fail.
  std::vector<Graph> relaxed;
  for (int d = 0; d + 1 < graph.diameter(); ++d) {
    relaxed.push_back(relaxed_graph(graph, d).graph());
  }
  std::vector<std::vector<int>> fail(L, std::vector<int>(L, -1));
  for (std::size_t width = 1; width < L; ++width) {
    for (std::size_t t0 = 0; t0 + width < L; ++t0) {
      if (Clock::now() > deadline) return cuts;
      const std::size_t t1 = t0 + width;
      const int known = std::max(fail[t0][t1 - 1], fail[t0 + 1][t1]);
      GateSet gates;
      for (std::size_t t = t0; t <= t1; ++t) {
        const auto& layer = instance.layers()[t];
        gates.insert(gates.end(), layer.begin(), layer.end());
      }
      const ConnectivityGraph conn = connectivity_graph(gates);
      int best = known;
      for (int d = known + 1; d < static_cast<int>(relaxed.size()); ++d) {
        const auto result = edge_induced_subgraph_isomorphic(
            conn.graph, relaxed[d], opts.sgi_budget);
        if (result != SgiResult::kNo) break;
        best = d;
      }
      fail[t0][t1] = best;
      if (best > known) cuts.push_back({t0 + 1, t1 + 1, conn.tokens, best});
    }
  }
  return cuts;
}

std::vector<std::int64_t> cut_bounds(
    std::size_t num_layers, const std::vector<SgiCut>& cuts) {
  std::vector<std::int64_t> best(num_layers, 0);
  if (num_layers < 2) return best;
  for (std::size_t s = num_layers - 1; s-- > 0;) {
    best[s] = best[s + 1];
    for (const SgiCut& c : cuts) {
      if (c.t0 == s + 1 && c.t1 <= num_layers) {
        best[s] = std::max(best[s], c.rhs_all() + best[c.t1 - 1]);
      }
    }
  }
  return best;
}

namespace {

using Clock = std::chrono::steady_clock;
// A state lists the vertex of each active token, one byte per token.
using Pos = std::string;

struct Node {
  int parent;
  int stage;
  std::int64_t g;
  Pos pos;
};

struct Entry {
  std::int64_t f;
  int stage;
  std::uint64_t seq;
  int node;  // -1 for the virtual root
  int delta;

  // priority_queue pops the largest; invert so that the smallest f, then the
  // deepest stage, then the oldest entry comes first.
  bool operator<(const Entry& o) const {
    if (f != o.f) return f > o.f;
    if (stage != o.stage) return stage < o.stage;
    return seq > o.seq;
  }
};

class Search {
 public:
  Search(const TapInstance& inst, const std::vector<SgiCut>& cuts)
      : inst_(inst),
        g_(inst.graph()),
        n_(g_.num_vertices()),
        L_(static_cast<int>(inst.num_layers())),
        active_(inst.active_tokens()),
        k_(static_cast<int>(active_.size())),
        index_of_(n_, -1),
        allowed_(n_, 0),
        h_(cut_bounds(inst.num_layers(), cuts)) {
    if (n_ > 127) throw std::invalid_argument("graphs above 127 vertices");
    for (int i = 0; i < k_; ++i) index_of_[active_[i]] = i;
    for (int v : inst.active_region()) allowed_[v] = 1;
    idle_free_ = !inst.options().active_only && k_ < n_;
    limit_ = inst.options().distance_limit.value_or(n_);
    step_ = g_.bipartite() ? 2 : 1;
    max_delta_ = n_ * std::max(1, g_.diameter());
    order_.resize(L_);
    anchor_.resize(L_);
    for (int s = 0; s < L_; ++s) {
      std::vector<char> in_gate(k_, 0);
      for (const TokenPair& p : inst.layers()[s]) {
        order_[s].push_back(index_of_[p.first]);
        anchor_[s].push_back(-1);
        order_[s].push_back(index_of_[p.second]);
        anchor_[s].push_back(static_cast<int>(order_[s].size()) - 2);
        in_gate[index_of_[p.first]] = in_gate[index_of_[p.second]] = 1;
      }
      for (int i = 0; i < k_; ++i) {
        if (!in_gate[i]) {
          order_[s].push_back(i);
          anchor_[s].push_back(-1);
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (allowed_[v]) allowed_list_.push_back(v);
    }
  }

  TapSolution run() {
    started_ = Clock::now();
    TapSolution sol;
    if (L_ == 0) {
      sol.optimal = true;
      return sol;
    }
    for (int s = 0; s < L_; ++s) {
      const int gates = static_cast<int>(inst_.layers()[s].size());
      if (gates > g_.max_matching()) {
        throw InfeasibleInstance(
            "layer " + std::to_string(s + 1) + " has " + std::to_string(gates) +
            " gates but the hardware graph matches at most " +
            std::to_string(g_.max_matching()));
      }
    }
    greedy_incumbent();
    search();
    if (upper_ >= kInf) {
      throw InfeasibleInstance("no feasible allocation sequence exists");
    }
    sol.allocations = expand(incumbent_);
    sol.doubled_cost = 0;
    for (std::size_t s = 1; s < sol.allocations.size(); ++s) {
      sol.doubled_cost +=
          transition_cost(g_, sol.allocations[s - 1], sol.allocations[s]);
    }
    if (sol.doubled_cost != upper_) {
      throw std::logic_error("allocation sequence cost mismatch");
    }
    sol.optimal = complete_ && !beam_dropped_;
    sol.doubled_lower_bound =
        sol.optimal ? upper_ : std::min({upper_, frontier_bound_, dropped_bound_});
    sol.doubled_lower_bound = std::max<std::int64_t>(
        sol.doubled_lower_bound, std::min<std::int64_t>(h_[0], upper_));
    sol.nodes_expanded = expansions_;
    return sol;
  }

 private:
  // Placement of the active tokens for the root.
  std::optional<detail::PlacementEnumerator> make_root_enumerator() const {
    return detail::PlacementEnumerator(
        g_, inst_.layers()[0], active_, allowed_, n_);
  }

  Pos pos_from(const std::vector<int>& position) const {
    Pos p(k_, '\0');
    for (int i = 0; i < k_; ++i) p[i] = static_cast<char>(position[active_[i]]);
    return p;
  }

  static int at(const Pos& p, int i) {
    return static_cast<unsigned char>(p[i]);
  }

  // Minimum movement of the idle tokens from the free vertices of `a` to
  // those of `b`; shared vertices keep their token.
  std::int64_t idle_cost(const Pos& a, const Pos& b) const {
    if (!idle_free_) return 0;
    std::vector<char> in_a(n_, 0), in_b(n_, 0);
    for (int i = 0; i < k_; ++i) {
      in_a[at(a, i)] = 1;
      in_b[at(b, i)] = 1;
    }
    std::vector<int> from, to;
    for (int v = 0; v < n_; ++v) {
      if (!in_a[v] && in_b[v]) from.push_back(v);
      if (in_a[v] && !in_b[v]) to.push_back(v);
    }
    if (from.empty()) return 0;
    std::vector<std::vector<std::int64_t>> cost(
        from.size(), std::vector<std::int64_t>(to.size()));
    for (std::size_t r = 0; r < from.size(); ++r) {
      for (std::size_t c = 0; c < to.size(); ++c) {
        const int d = g_.distance(from[r], to[c]);
        cost[r][c] = d <= limit_ ? d : kInf / (4 * n_ + 4);
      }
    }
    const auto assign = min_cost_assignment(cost);
    std::int64_t total = 0;
    for (std::size_t r = 0; r < from.size(); ++r) {
      const int d = g_.distance(from[r], to[assign[r]]);
      if (d > limit_) return kInf;
      total += d;
    }
    return total;
  }

  // Calls emit(child) for every placement of stage s+1 whose transition
  // cost from `a` equals delta; emit returns false to stop.
  template <typename Emit>
  void successors(int s, const Pos& a, int delta, Emit&& emit) {
    const int next = s + 1;
    std::vector<int> owner(n_, -1);
    for (int i = 0; i < k_; ++i) owner[at(a, i)] = i;
    std::vector<char> used(n_, 0), placed(k_, 0);
    Pos b(k_, '\0');
    bool stop = false;
    const auto& order = order_[next];
    const auto& anchor = anchor_[next];
    // partial: exact movement of placed tokens plus one per idle token
    // pushed off its vertex; pending: unplaced tokens whose vertex is taken.
    auto rec = [&](auto&& self, std::size_t depth, std::int64_t partial,
                   int pending) -> void {
      if (stop) return;
      if (depth == order.size()) {
        std::int64_t total = 0;
        for (int i = 0; i < k_; ++i) total += g_.distance(at(a, i), at(b, i));
        const std::int64_t idle = idle_cost(a, b);
        if (idle >= kInf) return;
        if (total + idle == delta && !emit(b)) stop = true;
        return;
      }
      const int i = order[depth];
      const int from = at(a, i);
      const std::vector<int>& cand =
          anchor[depth] >= 0 ? g_.neighbours(at(b, order[anchor[depth]]))
                             : allowed_list_;
      for (int v : cand) {
        if (used[v] || !allowed_[v]) continue;
        const int d = g_.distance(from, v);
        if (d > limit_) continue;
        std::int64_t p = partial + d;
        int pend = pending;
        if (used[from]) --pend;  // i's own vertex was already taken
        const int j = owner[v];
        if (j >= 0 && j != i && !placed[j]) ++pend;
        if (j < 0 && idle_free_) ++p;
        if (p + pend > delta) continue;
        used[v] = 1;
        placed[i] = 1;
        b[i] = static_cast<char>(v);
        self(self, depth + 1, p, pend);
        placed[i] = 0;
        used[v] = 0;
        if (stop) return;
      }
    };
    rec(rec, 0, 0, 0);
  }

  std::string key_of(int stage, const Pos& p) const {
    std::string key = p;
    key.push_back(static_cast<char>(stage & 0xff));
    key.push_back(static_cast<char>((stage >> 8) & 0xff));
    key.push_back(static_cast<char>((stage >> 16) & 0xff));
    return key;
  }

  std::int64_t f_value(int stage, std::int64_t g, int delta) const {
    if (stage == L_ - 1) return g;
    return g + std::max<std::int64_t>(h_[stage], delta + h_[stage + 1]);
  }

  // Forward passes taking the cheapest successor, from a few first-layer
  // placements.
  void greedy_incumbent() {
    auto root = make_root_enumerator();
    for (int start = 0; start < 8 && root->next(); ++start) {
      std::vector<Pos> path{pos_from(root->position())};
      std::int64_t cost = 0;
      bool ok = true;
      for (int s = 0; s + 1 < L_ && ok; ++s) {
        bool found = false;
        for (int delta = 0; delta <= max_delta_ && !found; delta += step_) {
          if (cost + delta >= upper_) break;
          successors(s, path.back(), delta, [&](const Pos& b) {
            path.push_back(b);
            found = true;
            return false;
          });
          if (found) cost += delta;
        }
        ok = found;
      }
      if (ok && cost < upper_) {
        upper_ = cost;
        incumbent_ = std::move(path);
      }
    }
  }

  bool out_of_time() const {
    const auto& limit = inst_.options().time_limit;
    return limit && Clock::now() - started_ > *limit;
  }

  std::vector<Pos> path_to(int node) const {
    std::vector<Pos> path;
    for (int x = node; x >= 0; x = nodes_[x].parent) path.push_back(nodes_[x].pos);
    std::reverse(path.begin(), path.end());
    return path;
  }

  // Returns false once the beam is full for that stage.
  bool admit(int stage, std::int64_t f) {
    const auto& beam = inst_.options().beam_width;
    if (!beam) return true;
    if (stage_count_.size() < static_cast<std::size_t>(L_)) {
      stage_count_.assign(L_, 0);
    }
    if (stage_count_[stage] >= *beam) {
      beam_dropped_ = true;
      dropped_bound_ = std::min(dropped_bound_, f);
      return false;
    }
    ++stage_count_[stage];
    return true;
  }

  void add_child(int parent, int stage, std::int64_t g, const Pos& b) {
    const std::string key = key_of(stage, b);
    auto it = best_g_.find(key);
    if (it != best_g_.end() && it->second <= g) return;
    const std::int64_t f = f_value(stage, g, 0);
    if (f >= upper_) return;
    if (!admit(stage, f)) return;
    best_g_[key] = g;
    nodes_.push_back({parent, stage, g, b});
    const int id = static_cast<int>(nodes_.size()) - 1;
    if (stage == L_ - 1) {
      upper_ = g;
      incumbent_ = path_to(id);
      return;
    }
    queue_.push({f, stage, seq_++, id, 0});
  }

  void search() {
    auto root = make_root_enumerator();
    bool root_open = true;
    queue_.push({h_[0], -1, seq_++, -1, 0});
    constexpr int kRootBatch = 256;
    const auto& max_exp = inst_.options().max_expansions;
    std::size_t pops = 0;
    while (!queue_.empty()) {
      const Entry e = queue_.top();
      if (e.f >= upper_) break;
      if ((++pops & 255) == 0 && out_of_time()) {
        complete_ = false;
        frontier_bound_ = e.f;
        return;
      }
      if (max_exp && expansions_ >= *max_exp) {
        complete_ = false;
        frontier_bound_ = e.f;
        return;
      }
      queue_.pop();
      if (e.node < 0) {
        for (int b = 0; b < kRootBatch; ++b) {
          if (!root->next()) {
            root_open = false;
            break;
          }
          add_child(-1, 0, 0, pos_from(root->position()));
        }
        if (root_open) queue_.push({h_[0], -1, seq_++, -1, 0});
        continue;
      }
      const Node node = nodes_[e.node];
      if (best_g_[key_of(node.stage, node.pos)] < node.g) continue;
      ++expansions_;
      successors(node.stage, node.pos, e.delta, [&](const Pos& b) {
        add_child(e.node, node.stage + 1, node.g + e.delta, b);
        return true;
      });
      const int next_delta = e.delta + step_;
      const std::int64_t f = f_value(node.stage, node.g, next_delta);
      if (next_delta <= max_delta_ && f < upper_) {
        queue_.push({f, node.stage, seq_++, e.node, next_delta});
      }
    }
    complete_ = true;
  }

  // Full allocations from active-token states; idle tokens follow minimum
  // cost assignments between consecutive free vertex sets.
  std::vector<Allocation> expand(const std::vector<Pos>& path) const {
    std::vector<Allocation> out;
    std::vector<int> to_vertex(n_, -1);
    const auto& frozen = inst_.frozen_vertex();
    for (std::size_t s = 0; s < path.size(); ++s) {
      std::vector<int> vertex_token(n_, -1);
      for (int i = 0; i < k_; ++i) {
        to_vertex[active_[i]] = at(path[s], i);
        vertex_token[at(path[s], i)] = active_[i];
      }
      if (!idle_free_) {
        for (int q = 0; q < n_; ++q) {
          if (frozen[q] >= 0) to_vertex[q] = frozen[q];
        }
      } else if (s == 0) {
        int v = 0;
        for (int q = 0; q < n_; ++q) {
          if (index_of_[q] >= 0) continue;
          while (vertex_token[v] >= 0) ++v;
          to_vertex[q] = v++;
        }
      } else {
        // Idle tokens whose vertex is now taken move to the newly freed
        // vertices.
        std::vector<int> movers, targets;
        std::vector<char> taken(n_, 0);
        for (int i = 0; i < k_; ++i) taken[at(path[s], i)] = 1;
        std::vector<char> idle_before(n_, 0);
        for (int q = 0; q < n_; ++q) {
          if (index_of_[q] < 0) idle_before[to_vertex[q]] = 1;
        }
        for (int q = 0; q < n_; ++q) {
          if (index_of_[q] < 0 && taken[to_vertex[q]]) movers.push_back(q);
        }
        for (int v = 0; v < n_; ++v) {
          if (!taken[v] && !idle_before[v]) targets.push_back(v);
        }
        std::vector<std::vector<std::int64_t>> cost(
            movers.size(), std::vector<std::int64_t>(targets.size()));
        for (std::size_t r = 0; r < movers.size(); ++r) {
          for (std::size_t c = 0; c < targets.size(); ++c) {
            const int d = g_.distance(to_vertex[movers[r]], targets[c]);
            cost[r][c] = d <= limit_ ? d : kInf / (4 * n_ + 4);
          }
        }
        const auto assign = min_cost_assignment(cost);
        for (std::size_t r = 0; r < movers.size(); ++r) {
          to_vertex[movers[r]] = targets[assign[r]];
        }
      }
      out.emplace_back(to_vertex);
    }
    return out;
  }

  const TapInstance& inst_;
  const HardwareGraph& g_;
  int n_;
  int L_;
  std::vector<int> active_;
  int k_;
  std::vector<int> index_of_;
  std::vector<char> allowed_;
  std::vector<int> allowed_list_;
  std::vector<std::int64_t> h_;
  std::vector<std::vector<int>> order_;
  std::vector<std::vector<int>> anchor_;
  bool idle_free_ = false;
  int limit_ = 0;
  int step_ = 1;
  int max_delta_ = 0;

  Clock::time_point started_;
  std::vector<Node> nodes_;
  std::priority_queue<Entry> queue_;
  std::unordered_map<std::string, std::int64_t> best_g_;
  std::uint64_t seq_ = 0;
  std::int64_t upper_ = kInf;
  std::vector<Pos> incumbent_;
  bool complete_ = false;
  bool beam_dropped_ = false;
  std::int64_t frontier_bound_ = kInf;
  std::int64_t dropped_bound_ = kInf;
  std::vector<std::size_t> stage_count_;
  std::size_t expansions_ = 0;
};

}  // namespace

TapSolution solve_tap(
    const TapInstance& instance, const std::vector<SgiCut>& cuts) {
  TapSolution sol = Search(instance, cuts).run();
  sol.num_cuts = cuts.size();
  return sol;
}

TapSolution solve_tap(const TapInstance& instance) {
  return solve_tap(instance, generate_sgi_cuts(instance));
}

}  // namespace tapswap
