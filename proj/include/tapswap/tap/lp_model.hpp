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

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tapswap/graph/allocation.hpp"
#include "tapswap/tap/tap_instance.hpp"
#include "tapswap/tap/tap_solver.hpp"

namespace tapswap {

struct LpTerm {
  double coef = 0.0;
  int var = 0;
};

enum class LpSense { kLe, kGe, kEq };

struct LpConstraint {
  std::string name;
  std::vector<LpTerm> terms;
  LpSense sense = LpSense::kEq;
  double rhs = 0.0;
  /** Member of the SGI cut block. */
  bool cut = false;
};

/** Binary program; all variables are binaries. */
class LpModel {
 public:
  int add_variable(const std::string& name, double objective = 0.0);
  /** -1 if absent. */
  int find(const std::string& name) const;

  const std::vector<std::string>& variables() const { return names_; }
  std::size_t num_variables() const { return names_.size(); }
  const std::vector<double>& objective() const { return objective_; }
  std::vector<LpConstraint>& constraints() { return constraints_; }
  const std::vector<LpConstraint>& constraints() const { return constraints_; }

 private:
  std::vector<std::string> names_;
  std::vector<double> objective_;
  std::unordered_map<std::string, int> index_;
  std::vector<LpConstraint> constraints_;
};

/**
 * Flow model over the time-expanded hardware graph. Variables:
 * `x_t_q_i_j` (token q moves i -> j after layer t), `w_t_q_i` (q sits at i
 * in layer t) and `y_t_p_q_i_j` (gate (p,q) of layer t runs on arc (i,j)).
 * Layers are 1-based, tokens and vertices 0-based. The product defining y
 * is written as three McCormick inequalities. Each cut appears twice, once
 * over its own tokens and once over all tokens.
 */
LpModel build_tap_model(
    const TapInstance& instance, const std::vector<SgiCut>& cuts);

/** Minimize / Subject To / Binary / End; cuts follow a `\ SGI cuts` line. */
std::string write_lp(const LpModel& model);
std::string export_ilp(
    const TapInstance& instance, const std::vector<SgiCut>& cuts);

/** Reads the subset of the LP format produced by write_lp. */
LpModel parse_lp(std::string_view text);

double objective_value(const LpModel& model, const std::vector<double>& point);
/** Amount by which `point` violates the constraint (0 when satisfied). */
double violation(const LpConstraint& row, const std::vector<double>& point);
/** Largest violation over the [0,1] bounds and the non-cut rows. */
double max_violation(const LpModel& model, const std::vector<double>& point);

/**
 * Zero-cost point of the relaxation: w = 1/|Q|, x = 1/|Q| on i = j and 0
 * otherwise, y = 1/|A_H|. Requires |Q| >= 2.
 */
std::vector<double> symmetric_fractional_solution(
    const TapInstance& instance, const LpModel& model);

/** The binary point encoding one allocation per layer. */
std::vector<double> integer_solution_point(
    const TapInstance& instance, const LpModel& model,
    const std::vector<Allocation>& allocations);

}  // namespace tapswap
