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

#include "tapswap/cli/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "tapswap/circuit/generators.hpp"
#include "tapswap/router/router.hpp"
#include "tapswap/tap/lp_model.hpp"

namespace tapswap::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << text;
}

int parse_int(std::string_view s, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
    throw std::invalid_argument(std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

struct TapFlags {
  double time_limit = 0;
  double cut_budget = 10;
  int distance_limit = -1;
  bool active_only = false;
  std::size_t sgi_budget = kDefaultSgiBudget;
  std::size_t max_expansions = 0;

  void add(CLI::App& app) {
    app.add_option("--time-limit", time_limit, "Search time limit in seconds (0: none)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--cut-budget", cut_budget, "Cut generation budget in seconds")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--distance-limit", distance_limit,
                   "Largest hop count per token and transition");
    app.add_flag("--active-only", active_only, "Freeze qubits without gates");
    app.add_option("--sgi-budget", sgi_budget, "Node budget per embedding test");
    app.add_option("--max-expansions", max_expansions,
                   "Cap on allocation search expansions (0: none)");
  }

  TapOptions options() const {
    TapOptions o;
    if (time_limit > 0) o.time_limit = std::chrono::duration<double>(time_limit);
    o.cut_time_limit = std::chrono::duration<double>(cut_budget);
    if (distance_limit >= 0) o.distance_limit = distance_limit;
    o.active_only = active_only;
    o.sgi_budget = sgi_budget;
    if (max_expansions > 0) o.max_expansions = max_expansions;
    return o;
  }
};

double mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// Sample standard deviation; 0 for fewer than two values.
double stddev(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean(v);
  double s = 0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

}  // namespace

Allocation parse_allocation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> to_vertex;
  for (std::string pair; in >> pair;) {
    const auto colon = pair.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("expected '<token>:<vertex>', got '" + pair + "'");
    }
    const int t = parse_int(std::string_view(pair).substr(0, colon), "token");
    const int v = parse_int(std::string_view(pair).substr(colon + 1), "vertex");
    if (t != static_cast<int>(to_vertex.size())) {
      throw std::invalid_argument("tokens must be listed as 0, 1, 2, ...");
    }
    to_vertex.push_back(v);
  }
  return Allocation(std::move(to_vertex));
}

SwapFile parse_swap_file(std::string_view text) {
  SwapFile file;
  bool have_graph = false, have_start = false, have_target = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto colon = body.find(':');
    const std::string key = body.substr(0, colon);
    if (colon == std::string::npos ||
        (key != "graph" && key != "start" && key != "target")) {
      throw std::invalid_argument(
          "line " + std::to_string(line_no) +
          ": expected 'graph:', 'start:' or 'target:'");
    }
    const std::string value = trim(std::string_view(body).substr(colon + 1));
    try {
      if (key == "graph") {
        file.graph = value;
        have_graph = true;
      } else if (key == "start") {
        file.start = parse_allocation(value);
        have_start = true;
      } else {
        file.target = parse_allocation(value);
        have_target = true;
      }
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_graph || !have_start || !have_target) {
    throw std::invalid_argument("swap instance needs graph, start and target lines");
  }
  return file;
}

std::vector<BenchRow> run_bench(const BenchSuite& suite) {
  const HardwareGraph graph = load_graph(suite.graph);
  std::vector<BenchRow> rows;
  RouteOptions opts;
  // Cut generation is bounded by node budgets only.
  opts.tap.cut_time_limit = std::chrono::duration<double>(
      std::numeric_limits<double>::infinity());
  opts.tap.sgi_budget = suite.sgi_budget;
  opts.exact_swaps = suite.exact_swaps;
  for (int depth = suite.depth_min; depth <= suite.depth_max; ++depth) {
    if (suite.instances <= 0) break;
    BenchRow row;
    row.depth = depth;
    row.instances = suite.instances;
    std::vector<double> swaps, cost, gates, depths;
    for (int k = 0; k < suite.instances; ++k) {
      const std::uint64_t seed =
          suite.seed * 1'000'003ULL + static_cast<std::uint64_t>(depth) * 1000 + k;
      Circuit c;
      if (suite.kind == "qv") {
        c = gen_qv(graph.num_vertices(), depth, seed);
      } else {
        const int g = suite.gates_per_layer > 0 ? suite.gates_per_layer
                                                : graph.num_vertices() / 2;
        c = gen_zero_swap(graph, depth, g, seed).circuit;
      }
      const RoutedCircuit r = route(c, graph, opts);
      swaps.push_back(static_cast<double>(r.metrics.swaps_added));
      cost.push_back(r.tap.cost());
      gates.push_back(r.metrics.relative_gate_increase);
      depths.push_back(r.metrics.relative_depth_increase);
      row.tap_optimal += r.tap_optimal() ? 1 : 0;
      row.verified += verify_routed(c, r, graph) ? 1 : 0;
    }
    row.swaps_mean = mean(swaps);
    row.swaps_std = stddev(swaps);
    row.tap_cost_mean = mean(cost);
    row.gate_increase_mean = mean(gates);
    row.gate_increase_std = stddev(gates);
    row.depth_increase_mean = mean(depths);
    row.depth_increase_std = stddev(depths);
    rows.push_back(row);
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "depth,instances,swaps_mean,swaps_std,tap_cost_mean,"
         "gate_increase_mean,gate_increase_std,depth_increase_mean,"
         "depth_increase_std,tap_optimal,verified\n";
  out << std::fixed << std::setprecision(6);
  for (const BenchRow& r : rows) {
    out << r.depth << ',' << r.instances << ',' << r.swaps_mean << ','
        << r.swaps_std << ',' << r.tap_cost_mean << ',' << r.gate_increase_mean
        << ',' << r.gate_increase_std << ',' << r.depth_increase_mean << ','
        << r.depth_increase_std << ',' << r.tap_optimal << ',' << r.verified
        << '\n';
  }
  return out.str();
}

std::string bench_table(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "depth" << std::setw(6) << "n"
      << std::setw(18) << "swaps" << std::setw(10) << "tap"
      << std::setw(20) << "gate increase" << std::setw(20) << "depth increase"
      << "optimal\n";
  out << std::fixed << std::setprecision(3);
  for (const BenchRow& r : rows) {
    std::ostringstream s, g, d;
    s << std::fixed << std::setprecision(2) << r.swaps_mean << " +- " << r.swaps_std;
    g << std::fixed << std::setprecision(3) << r.gate_increase_mean << " +- "
      << r.gate_increase_std;
    d << std::fixed << std::setprecision(3) << r.depth_increase_mean << " +- "
      << r.depth_increase_std;
    out << std::setw(6) << r.depth << std::setw(6) << r.instances
        << std::setw(18) << s.str() << std::setw(10) << r.tap_cost_mean
        << std::setw(20) << g.str() << std::setw(20) << d.str()
        << r.tap_optimal << '/' << r.instances << '\n';
  }
  return out.str();
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Qubit routing by token allocation and token swapping", "tapswap"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  int code = kOk;

  // route
  std::string graph_spec, circuit_path, output_path;
  TapFlags tap_flags;
  bool exact_swaps = false;
  auto* route_cmd = app.add_subcommand("route", "Route a circuit onto a hardware graph");
  route_cmd->add_option("--graph", graph_spec, "Graph file or preset")->required();
  route_cmd->add_option("--circuit", circuit_path, "Circuit file")->required();
  route_cmd->add_option("-o,--output", output_path, "Routed circuit file (default: stdout)");
  route_cmd->add_flag("--exact-swaps", exact_swaps, "Exact token swapping per transition");
  tap_flags.add(*route_cmd);

  // swap-solve
  std::string swap_path;
  bool swap_exact = false, swap_approx = false, swap_bounds = false, swap_original = false;
  std::uint64_t seed = 1;
  double swap_time_limit = 0;
  std::size_t swap_max_nodes = 0;
  auto* swap_cmd = app.add_subcommand("swap-solve", "Solve one token swapping instance");
  swap_cmd->add_option("instance", swap_path, "Swap instance file")->required();
  auto* f_exact = swap_cmd->add_flag("--exact", swap_exact, "Branch and bound");
  auto* f_approx = swap_cmd->add_flag("--approx", swap_approx, "Approximation (default)");
  f_exact->excludes(f_approx);
  swap_cmd->add_flag("--bounds", swap_bounds, "Also print the lower bounds");
  swap_cmd->add_flag("--original", swap_original, "Unmodified walk with random choices");
  swap_cmd->add_option("--seed", seed, "Seed for --original");
  swap_cmd->add_option("--time-limit", swap_time_limit, "Seconds for --exact (0: none)")
      ->check(CLI::NonNegativeNumber);
  swap_cmd->add_option("--max-nodes", swap_max_nodes, "Node cap for --exact (0: none)");

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "Generate circuits or graphs");
  gen_cmd->require_subcommand(1);
  int qv_m = 0, qv_d = 0, zs_depth = 0, zs_gates = 0;
  std::string gen_out, zs_graph, preset;
  auto* gen_qv_cmd = gen_cmd->add_subcommand("qv", "Quantum-volume style circuit");
  gen_qv_cmd->add_option("--m", qv_m, "Width")->required()->check(CLI::Range(2, 1 << 20));
  gen_qv_cmd->add_option("--d", qv_d, "Depth")->required()->check(CLI::NonNegativeNumber);
  gen_qv_cmd->add_option("--seed", seed, "Seed");
  gen_qv_cmd->add_option("-o,--output", gen_out, "Output file (default: stdout)");
  auto* gen_zs_cmd = gen_cmd->add_subcommand("zero-swap", "Circuit routable without swaps");
  gen_zs_cmd->add_option("--graph", zs_graph, "Graph file or preset")->required();
  gen_zs_cmd->add_option("--depth", zs_depth, "Layers")->required()->check(CLI::NonNegativeNumber);
  gen_zs_cmd->add_option("--gates", zs_gates, "Gates per layer")->required()->check(CLI::NonNegativeNumber);
  gen_zs_cmd->add_option("--seed", seed, "Seed");
  gen_zs_cmd->add_option("-o,--output", gen_out, "Output file (default: stdout)");
  auto* gen_graph_cmd = gen_cmd->add_subcommand("graph", "Write a preset as a graph file");
  gen_graph_cmd->add_option("preset", preset, "line:n, ring:n, ladder:n, grid:rxc, ...")->required();
  gen_graph_cmd->add_option("-o,--output", gen_out, "Output file (default: stdout)");

  // bench
  BenchSuite suite;
  std::string csv_path, format = "text";
  auto* bench_cmd = app.add_subcommand("bench", "Seeded routing benchmark");
  bench_cmd->add_option("--graph", suite.graph, "Graph file or preset");
  bench_cmd->add_option("--kind", suite.kind, "qv or zero-swap")
      ->check(CLI::IsMember({"qv", "zero-swap"}));
  bench_cmd->add_option("--depth-min", suite.depth_min, "Smallest depth");
  bench_cmd->add_option("--depth-max", suite.depth_max, "Largest depth");
  bench_cmd->add_option("--instances", suite.instances, "Instances per depth")
      ->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--gates", suite.gates_per_layer, "zero-swap gates per layer");
  bench_cmd->add_option("--seed", suite.seed, "Seed");
  bench_cmd->add_option("--sgi-budget", suite.sgi_budget, "Node budget per embedding test");
  bench_cmd->add_flag("--exact-swaps", suite.exact_swaps, "Exact token swapping");
  bench_cmd->add_option("--csv", csv_path, "Also write the CSV table here");
  bench_cmd->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

  // export-lp
  std::string lp_graph, lp_circuit, lp_out;
  TapFlags lp_flags;
  auto* lp_cmd = app.add_subcommand("export-lp", "Write the flow model with cuts");
  lp_cmd->add_option("--graph", lp_graph, "Graph file or preset")->required();
  lp_cmd->add_option("--circuit", lp_circuit, "Circuit file")->required();
  lp_cmd->add_option("-o,--output", lp_out, "LP file (default: stdout)");
  lp_flags.add(*lp_cmd);

  std::vector<const char*> args;
  for (const std::string& a : argv) args.push_back(a.c_str());
  if (args.empty()) args.push_back("tapswap");
  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::ParseError& e) {
    const int exit = app.exit(e, out, err);
    return exit == 0 ? kOk : kUsageError;
  }

  try {
    if (*route_cmd) {
      const HardwareGraph graph = load_graph(graph_spec);
      const Circuit circuit = parse_circuit(read_file(circuit_path));
      RouteOptions opts;
      opts.tap = tap_flags.options();
      opts.exact_swaps = exact_swaps;
      if (tap_flags.time_limit > 0) {
        opts.swap_limits.time_limit = std::chrono::duration<double>(tap_flags.time_limit);
      }
      const RoutedCircuit r = route(circuit, graph, opts);
      const Verification v = verify_routed(circuit, r, graph);
      if (!v) throw std::logic_error("routed circuit failed verification: " + v.diagnostic);
      write_output(output_path, write_routed(r.program()), out);
      out << metrics_block(r);
      const bool swap_limit_hit = exact_swaps &&
                                  graph.num_vertices() <= kExactSwapMaxVertices &&
                                  !r.all_swaps_optimal();
      if (!r.tap_optimal() || swap_limit_hit) code = kLimitReached;
    } else if (*swap_cmd) {
      const SwapFile file = parse_swap_file(read_file(swap_path));
      std::string graph_ref = file.graph;
      const auto base = std::filesystem::path(swap_path).parent_path();
      if (!std::filesystem::exists(graph_ref) && !base.empty() &&
          std::filesystem::exists(base / graph_ref)) {
        graph_ref = (base / graph_ref).string();
      }
      const HardwareGraph graph = load_graph(graph_ref);
      const SwapInstance inst(graph, file.start, file.target);
      SwapSequence seq;
      bool optimal = false;
      int lower = 0;
      if (swap_exact) {
        ExactLimits limits;
        if (swap_time_limit > 0) limits.time_limit = std::chrono::duration<double>(swap_time_limit);
        if (swap_max_nodes > 0) limits.max_nodes = swap_max_nodes;
        ExactResult r = exact_solve(inst, limits);
        seq = std::move(r.sequence);
        optimal = r.optimal;
        lower = r.lower_bound;
        if (!optimal) code = kLimitReached;
      } else {
        ApproxOptions o;
        o.variant = swap_original ? ApproxVariant::kOriginal : ApproxVariant::kModified;
        o.seed = seed;
        seq = approx_solve(inst, o);
        lower = combined_lower_bound(inst, candidate_independent_sets(graph));
        optimal = static_cast<int>(seq.size()) == lower;
      }
      for (const Swap& s : seq.swaps) out << "swap " << s[0] << ' ' << s[1] << '\n';
      out << "length=" << seq.size() << '\n'
          << "depth=" << seq.depth << '\n'
          << "lower_bound=" << lower << '\n'
          << "status=" << (optimal ? "optimal" : "heuristic") << '\n';
      if (swap_bounds) {
        const auto sets = candidate_independent_sets(graph);
        int split = 0;
        for (const auto& s : sets) split = std::max(split, split_graph_lower_bound(inst, s));
        out << "distance_bound=" << distance_lower_bound(inst) << '\n'
            << "blocking_bound=" << blocking_lower_bound(inst) << '\n'
            << "split_bound=" << split << '\n'
            << "parity=" << forced_parity(inst) << '\n'
            << "combined_bound=" << combined_lower_bound(inst, sets) << '\n';
      }
    } else if (*gen_qv_cmd) {
      write_output(gen_out, write_circuit(gen_qv(qv_m, qv_d, seed)), out);
    } else if (*gen_zs_cmd) {
      const HardwareGraph graph = load_graph(zs_graph);
      const ZeroSwapInstance z = gen_zero_swap(graph, zs_depth, zs_gates, seed);
      std::string text = "# hidden";
      for (std::size_t q = 0; q < z.hidden_vertex.size(); ++q) {
        text += ' ' + std::to_string(q) + ':' + std::to_string(z.hidden_vertex[q]);
      }
      write_output(gen_out, text + '\n' + write_circuit(z.circuit), out);
    } else if (*gen_graph_cmd) {
      write_output(gen_out, write_graph_file(parse_preset(preset)), out);
    } else if (*bench_cmd) {
      const auto rows = run_bench(suite);
      const std::string csv = bench_csv(rows);
      if (!csv_path.empty()) write_output(csv_path, csv, out);
      out << (format == "csv" ? csv : bench_table(rows));
    } else if (*lp_cmd) {
      const HardwareGraph graph = load_graph(lp_graph);
      const Circuit circuit = parse_circuit(read_file(lp_circuit));
      if (circuit.num_tokens() > graph.num_vertices()) {
        throw CircuitError("circuit has more qubits than the hardware graph");
      }
      const TapInstance inst(graph, layer_gates(circuit).layers, lp_flags.options());
      const auto cuts = generate_sgi_cuts(inst);
      write_output(lp_out, export_ilp(inst, cuts), out);
      (lp_out.empty() || lp_out == "-" ? err : out) << "cuts=" << cuts.size() << '\n';
    }
  } catch (const InfeasibleInstance& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return code;
}

}  // namespace tapswap::cli
