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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tapswap/circuit/circuit.hpp"
#include "tapswap/cli/cli.hpp"
#include "tapswap/swap/token_swap.hpp"
#include "tapswap/tap/tap_solver.hpp"

namespace tapswap {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tapswap");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "tapswap_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string value_of(const std::string& text, const std::string& key) {
  const auto pos = text.find("\n" + key + "=");
  const auto start = pos == std::string::npos
                         ? (text.rfind(key + "=", 0) == 0 ? 0 : std::string::npos)
                         : pos + 1;
  if (start == std::string::npos) return {};
  const auto eq = start + key.size() + 1;
  return text.substr(eq, text.find('\n', eq) - eq);
}

TEST_CASE("route prints a routed circuit and metrics") {
  const auto qv = run({"generate", "qv", "--m", "6", "--d", "3", "--seed", "2"});
  REQUIRE(qv.code == 0);
  const auto path = temp_file("qv6.qc", qv.out);
  const auto r = run({"route", "--graph", "line:6", "--circuit", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("alloc 0:", 0) == 0);
  CHECK_FALSE(value_of(r.out, "swaps").empty());
  CHECK_FALSE(value_of(r.out, "depth_in").empty());
  CHECK_FALSE(value_of(r.out, "depth_out").empty());
  CHECK(value_of(r.out, "tap_status") == "optimal");

  const auto exact = run({"route", "--graph", "line:6", "--circuit", path,
                          "--exact-swaps", "--time-limit", "60"});
  REQUIRE(exact.code == 0);
  CHECK(value_of(exact.out, "status") == "optimal");
}

TEST_CASE("routed output file parses back") {
  const auto qv = run({"generate", "qv", "--m", "4", "--d", "3", "--seed", "5"});
  const auto path = temp_file("qv4.qc", qv.out);
  const auto out_path = temp_file("qv4.routed", "");
  const auto r = run({"route", "--graph", "ring:4", "--circuit", path, "-o", out_path});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("swaps=", 0) == 0);
  std::ifstream in(out_path);
  std::stringstream text;
  text << in.rdbuf();
  const auto program = parse_routed(text.str());
  CHECK(program.num_vertices == 4);
}

TEST_CASE("zero-swap circuits route with no swaps") {
  const auto gen = run({"generate", "zero-swap", "--graph", "ring:8", "--depth",
                        "5", "--gates", "4", "--seed", "3"});
  REQUIRE(gen.code == 0);
  const Circuit c = parse_circuit(gen.out);
  CHECK(c.two_qubit_count() == 20);
  const auto path = temp_file("zs.qc", gen.out);
  const auto r = run({"route", "--graph", "ring:8", "--circuit", path});
  REQUIRE(r.code == 0);
  CHECK(value_of(r.out, "swaps") == "0");
}

TEST_CASE("exit codes") {
  const auto path = temp_file("two.qc", "q 4\ng2 0 1 CX\ng2 2 3 CX\n");
  CHECK(run({"route", "--graph", "star:4", "--circuit", path}).code == 2);
  CHECK(run({"route", "--graph", "star:4"}).code == 1);
  CHECK(run({"route", "--graph", "star:4", "--circuit", path, "--bogus"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"generate", "qv", "--m", "1", "--d", "3"}).code == 1);
  CHECK(run({"generate", "zero-swap", "--graph", "line:4", "--depth", "2",
             "--gates", "3"}).code == 1);
  CHECK(run({"route", "--graph", "line:4", "--circuit", "/nonexistent.qc"}).code == 1);
  CHECK(run({"--help"}).code == 0);

  const auto qv = run({"generate", "qv", "--m", "6", "--d", "6", "--seed", "9"});
  const auto qv_path = temp_file("qv6x6.qc", qv.out);
  const auto limited = run({"route", "--graph", "ring:6", "--circuit", qv_path,
                            "--max-expansions", "1", "--cut-budget", "0"});
  CHECK(limited.code == 3);
  CHECK(value_of(limited.out, "status") == "heuristic");
}

TEST_CASE("swap-solve reports") {
  const auto id = temp_file("id.swp", "graph: line:3\nstart: 0:0 1:1 2:2\ntarget: 0:0 1:1 2:2\n");
  const auto r0 = run({"swap-solve", id, "--exact"});
  REQUIRE(r0.code == 0);
  CHECK(value_of(r0.out, "length") == "0");
  const auto tr = temp_file("tr.swp", "# one swap\ngraph: line:3\nstart: 0:0 1:1 2:2\ntarget: 0:1 1:0 2:2\n");
  CHECK(value_of(run({"swap-solve", tr}).out, "length") == "1");
  const auto ex = run({"swap-solve", tr, "--exact"});
  CHECK(value_of(ex.out, "length") == "1");
  CHECK(value_of(ex.out, "status") == "optimal");
  CHECK(run({"swap-solve", tr, "--exact", "--approx"}).code == 1);

  const auto star = temp_file(
      "star.swp", "graph: star:4\nstart: 0:0 1:1 2:2 3:3\ntarget: 0:0 1:2 2:3 3:1\n");
  const auto b = run({"swap-solve", star, "--bounds"});
  REQUIRE(b.code == 0);
  const HardwareGraph g = presets::star(4);
  const SwapInstance inst(g, cli::parse_allocation("0:0 1:1 2:2 3:3"),
                          cli::parse_allocation("0:0 1:2 2:3 3:1"));
  CHECK(value_of(b.out, "distance_bound") == std::to_string(distance_lower_bound(inst)));
  CHECK(value_of(b.out, "blocking_bound") == std::to_string(blocking_lower_bound(inst)));
  CHECK(value_of(b.out, "parity") == std::to_string(forced_parity(inst)));
  CHECK(value_of(b.out, "combined_bound") ==
        std::to_string(combined_lower_bound(inst, candidate_independent_sets(g))));
  CHECK(value_of(b.out, "split_bound") == "4");

  const auto bad = temp_file("bad.swp", "graph: line:3\nstart: 0:0 1:1\n");
  CHECK(run({"swap-solve", bad}).code == 1);
}

TEST_CASE("generators are reproducible") {
  const auto a = run({"generate", "qv", "--m", "8", "--d", "8", "--seed", "1"});
  const auto b = run({"generate", "qv", "--m", "8", "--d", "8", "--seed", "1"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(parse_circuit(a.out).two_qubit_count() == 32);
  const auto g = run({"generate", "graph", "grid:2x3"});
  REQUIRE(g.code == 0);
  CHECK(parse_graph_file(g.out).edges().size() == 7);
}

TEST_CASE("bench output") {
  const std::vector<std::string> args{"bench", "--graph", "line:5", "--depth-min", "2",
                                      "--depth-max", "3", "--instances", "2",
                                      "--format", "csv", "--seed", "4"};
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 3);
  const auto empty = run({"bench", "--instances", "0", "--format", "csv"});
  CHECK(std::count(empty.out.begin(), empty.out.end(), '\n') == 1);
  const auto none = run({"bench", "--depth-min", "5", "--depth-max", "4", "--format", "csv"});
  CHECK(none.out == empty.out);
}

TEST_CASE("export-lp") {
  const auto path = temp_file("tri.qc", "q 3\ng2 0 1 CX\ng2 1 2 CX\ng2 0 2 CX\n");
  const auto r = run({"export-lp", "--graph", "line:3", "--circuit", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("Minimize", 0) == 0);
  CHECK(r.out.find("\\ SGI cuts") != std::string::npos);
  const TapInstance inst(presets::line(3), layer_gates(parse_circuit(
      "q 3\ng2 0 1 CX\ng2 1 2 CX\ng2 0 2 CX\n")).layers);
  CHECK(r.err == "cuts=" + std::to_string(generate_sgi_cuts(inst).size()) + "\n");
  const auto none = run({"export-lp", "--graph", "line:3", "--circuit", path,
                         "--cut-budget", "0"});
  CHECK(none.err == "cuts=0\n");
  CHECK(none.out.find("\\ SGI cuts") == std::string::npos);
}

}  // namespace
}  // namespace tapswap
