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

#include "tapswap/tap/lp_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tapswap {

int LpModel::add_variable(const std::string& name, double objective) {
  auto [it, fresh] = index_.emplace(name, static_cast<int>(names_.size()));
  if (!fresh) throw std::invalid_argument("duplicate LP variable " + name);
  names_.push_back(name);
  objective_.push_back(objective);
  return it->second;
}

int LpModel::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

namespace {

std::string join(std::initializer_list<std::size_t> parts, const char* head) {
  std::string s = head;
  for (std::size_t p : parts) s += "_" + std::to_string(p);
  return s;
}

std::string x_name(std::size_t t, int q, int i, int j) {
  return join({t, std::size_t(q), std::size_t(i), std::size_t(j)}, "x");
}
std::string w_name(std::size_t t, int q, int i) {
  return join({t, std::size_t(q), std::size_t(i)}, "w");
}
std::string y_name(std::size_t t, int p, int q, int i, int j) {
  return join(
      {t, std::size_t(p), std::size_t(q), std::size_t(i), std::size_t(j)}, "y");
}

// Arcs of the hardware graph, both directions, sorted.
std::vector<std::array<int, 2>> arcs(const HardwareGraph& g) {
  std::vector<std::array<int, 2>> out;
  for (const Edge& e : g.edges()) {
    out.push_back({e.u, e.v});
    out.push_back({e.v, e.u});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

LpModel build_tap_model(
    const TapInstance& instance, const std::vector<SgiCut>& cuts) {
  const HardwareGraph& g = instance.graph();
  const int n = g.num_vertices();
  const std::size_t L = instance.num_layers();
  const auto arc_list = arcs(g);
  LpModel m;
  for (std::size_t t = 1; t < L; ++t) {
    for (int q = 0; q < n; ++q) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          m.add_variable(x_name(t, q, i, j), g.distance(i, j));
        }
      }
    }
  }
  for (std::size_t t = 1; t <= L; ++t) {
    for (int q = 0; q < n; ++q) {
      for (int i = 0; i < n; ++i) m.add_variable(w_name(t, q, i));
    }
  }
  for (std::size_t t = 1; t <= L; ++t) {
    for (const TokenPair& pq : instance.layers()[t - 1]) {
      for (const auto& a : arc_list) {
        m.add_variable(y_name(t, pq.first, pq.second, a[0], a[1]));
      }
    }
  }
  auto& rows = m.constraints();
  auto var = [&](const std::string& name) { return m.find(name); };
  for (std::size_t t = 1; t < L; ++t) {
    for (int q = 0; q < n; ++q) {
      for (int i = 0; i < n; ++i) {
        LpConstraint r{join({t, std::size_t(q), std::size_t(i)}, "flow_out"),
                       {{1.0, var(w_name(t, q, i))}}, LpSense::kEq, 0.0};
        for (int j = 0; j < n; ++j) r.terms.push_back({-1.0, var(x_name(t, q, i, j))});
        rows.push_back(std::move(r));
      }
    }
  }
  for (std::size_t t = 2; t <= L; ++t) {
    for (int q = 0; q < n; ++q) {
      for (int i = 0; i < n; ++i) {
        LpConstraint r{join({t, std::size_t(q), std::size_t(i)}, "flow_in"),
                       {{1.0, var(w_name(t, q, i))}}, LpSense::kEq, 0.0};
        for (int j = 0; j < n; ++j) {
          r.terms.push_back({-1.0, var(x_name(t - 1, q, j, i))});
        }
        rows.push_back(std::move(r));
      }
    }
  }
  for (std::size_t t = 1; t <= L; ++t) {
    for (const TokenPair& pq : instance.layers()[t - 1]) {
      const std::size_t p = pq.first, q = pq.second;
      LpConstraint r{join({t, p, q}, "gate"), {}, LpSense::kEq, 1.0};
      for (const auto& a : arc_list) {
        r.terms.push_back({1.0, var(y_name(t, pq.first, pq.second, a[0], a[1]))});
      }
      rows.push_back(std::move(r));
      for (const auto& a : arc_list) {
        const std::size_t i = a[0], j = a[1];
        const int y = var(y_name(t, pq.first, pq.second, a[0], a[1]));
        const int wp = var(w_name(t, pq.first, a[0]));
        const int wq = var(w_name(t, pq.second, a[1]));
        rows.push_back({join({t, p, q, i, j}, "mc_p"), {{1.0, y}, {-1.0, wp}},
                        LpSense::kLe, 0.0});
        rows.push_back({join({t, p, q, i, j}, "mc_q"), {{1.0, y}, {-1.0, wq}},
                        LpSense::kLe, 0.0});
        rows.push_back({join({t, p, q, i, j}, "mc_pq"),
                        {{1.0, y}, {-1.0, wp}, {-1.0, wq}}, LpSense::kGe, -1.0});
      }
    }
  }
  for (std::size_t t = 1; t <= L; ++t) {
    for (int q = 0; q < n; ++q) {
      LpConstraint r{join({t, std::size_t(q)}, "token"), {}, LpSense::kEq, 1.0};
      for (int i = 0; i < n; ++i) r.terms.push_back({1.0, var(w_name(t, q, i))});
      rows.push_back(std::move(r));
    }
    for (int i = 0; i < n; ++i) {
      LpConstraint r{join({t, std::size_t(i)}, "vertex"), {}, LpSense::kEq, 1.0};
      for (int q = 0; q < n; ++q) r.terms.push_back({1.0, var(w_name(t, q, i))});
      rows.push_back(std::move(r));
    }
  }
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const SgiCut& c = cuts[k];
    LpConstraint own{join({k}, "sgi_own"), {}, LpSense::kGe,
                     double(c.rhs_restricted()), true};
    LpConstraint all{join({k}, "sgi_all"), {}, LpSense::kGe,
                     double(c.rhs_all()), true};
    std::vector<char> in_cut(n, 0);
    for (int q : c.tokens) in_cut[q] = 1;
    for (std::size_t t = c.t0; t < c.t1; ++t) {
      for (int q = 0; q < n; ++q) {
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const LpTerm term{double(g.distance(i, j)), var(x_name(t, q, i, j))};
            all.terms.push_back(term);
            if (in_cut[q]) own.terms.push_back(term);
          }
        }
      }
    }
    rows.push_back(std::move(own));
    rows.push_back(std::move(all));
  }
  return m;
}

namespace {

std::string format_number(double v) {
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    return std::to_string(static_cast<long long>(v));
  }
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

void write_terms(
    std::ostringstream& out, const LpModel& m, const std::vector<LpTerm>& terms) {
  int on_line = 0;
  bool any = false;
  for (const LpTerm& t : terms) {
    if (t.coef == 0.0) continue;
    if (on_line == 8) {
      out << "\n   ";
      on_line = 0;
    }
    out << (t.coef < 0 ? " - " : " + ");
    const double mag = std::abs(t.coef);
    if (mag != 1.0) out << format_number(mag) << ' ';
    out << m.variables()[t.var];
    ++on_line;
    any = true;
  }
  if (!any) out << " 0";
}

const char* sense_text(LpSense s) {
  switch (s) {
    case LpSense::kLe:
      return "<=";
    case LpSense::kGe:
      return ">=";
    case LpSense::kEq:
      break;
  }
  return "=";
}

}  // namespace

std::string write_lp(const LpModel& model) {
  std::ostringstream out;
  out << "Minimize\n obj:";
  std::vector<LpTerm> obj;
  for (std::size_t v = 0; v < model.num_variables(); ++v) {
    obj.push_back({model.objective()[v], static_cast<int>(v)});
  }
  write_terms(out, model, obj);
  out << "\nSubject To\n";
  bool cut_header = false;
  for (const LpConstraint& r : model.constraints()) {
    if (r.cut && !cut_header) {
      out << "\\ SGI cuts\n";
      cut_header = true;
    }
    out << ' ' << r.name << ':';
    write_terms(out, model, r.terms);
    out << ' ' << sense_text(r.sense) << ' ' << format_number(r.rhs) << '\n';
  }
  out << "Binary\n";
  for (const std::string& name : model.variables()) out << ' ' << name << '\n';
  out << "End\n";
  return out.str();
}

std::string export_ilp(
    const TapInstance& instance, const std::vector<SgiCut>& cuts) {
  return write_lp(build_tap_model(instance, cuts));
}

namespace {

double parse_number(const std::string& token) {
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw std::invalid_argument("bad LP number '" + token + "'");
  }
  return value;
}

bool is_number(const std::string& token) {
  return !token.empty() &&
         (std::isdigit(static_cast<unsigned char>(token[0])) || token[0] == '.');
}

// A row or the objective gathered across continuation lines.
struct PendingRow {
  std::string name;
  std::vector<std::string> tokens;
  bool cut = false;
};

}  // namespace

LpModel parse_lp(std::string_view text) {
  std::istringstream in{std::string(text)};
  enum class Section { kNone, kObjective, kRows, kBinary, kEnd };
  Section section = Section::kNone;
  bool in_cuts = false;
  std::string objective_name;
  std::vector<std::string> objective_tokens;
  std::vector<PendingRow> rows;
  std::vector<std::string> binaries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("\\", 0) == 0) {
      if (line.find("SGI cuts") != std::string::npos) in_cuts = true;
      continue;
    }
    if (line == "Minimize") {
      section = Section::kObjective;
      continue;
    }
    if (line == "Subject To") {
      section = Section::kRows;
      continue;
    }
    if (line == "Binary") {
      section = Section::kBinary;
      continue;
    }
    if (line == "End") {
      section = Section::kEnd;
      continue;
    }
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    const bool starts_row = tokens[0].back() == ':';
    switch (section) {
      case Section::kObjective:
        if (starts_row) {
          tokens.erase(tokens.begin());
        }
        objective_tokens.insert(
            objective_tokens.end(), tokens.begin(), tokens.end());
        break;
      case Section::kRows:
        if (starts_row) {
          rows.push_back({tokens[0].substr(0, tokens[0].size() - 1), {}, in_cuts});
          tokens.erase(tokens.begin());
        } else if (rows.empty()) {
          throw std::invalid_argument("LP row without a name");
        }
        rows.back().tokens.insert(
            rows.back().tokens.end(), tokens.begin(), tokens.end());
        break;
      case Section::kBinary:
        binaries.insert(binaries.end(), tokens.begin(), tokens.end());
        break;
      default:
        throw std::invalid_argument("LP text outside a section: " + line);
    }
  }
  if (section != Section::kEnd) throw std::invalid_argument("LP file lacks End");

  LpModel m;
  for (const std::string& b : binaries) m.add_variable(b);
  auto read_terms = [&](const std::vector<std::string>& tokens,
                        std::size_t end) {
    std::vector<LpTerm> terms;
    double sign = 1.0;
    double coef = 1.0;
    for (std::size_t k = 0; k < end; ++k) {
      const std::string& t = tokens[k];
      if (t == "+") {
        sign = 1.0;
      } else if (t == "-") {
        sign = -1.0;
      } else if (is_number(t)) {
        coef = parse_number(t);
      } else {
        int v = m.find(t);
        if (v < 0) v = m.add_variable(t);
        terms.push_back({sign * coef, v});
        sign = 1.0;
        coef = 1.0;
      }
    }
    return terms;
  };
  std::vector<LpTerm> obj = read_terms(objective_tokens, objective_tokens.size());
  for (PendingRow& r : rows) {
    if (r.tokens.size() < 2) throw std::invalid_argument("short LP row " + r.name);
    const std::string& sense = r.tokens[r.tokens.size() - 2];
    LpConstraint row;
    row.name = r.name;
    row.cut = r.cut;
    row.rhs = parse_number(r.tokens.back());
    if (sense == "<=") {
      row.sense = LpSense::kLe;
    } else if (sense == ">=") {
      row.sense = LpSense::kGe;
    } else if (sense == "=") {
      row.sense = LpSense::kEq;
    } else {
      throw std::invalid_argument("bad sense in LP row " + r.name);
    }
    row.terms = read_terms(r.tokens, r.tokens.size() - 2);
    m.constraints().push_back(std::move(row));
  }
  // Objective coefficients are applied after all names are known.
  LpModel out;
  std::vector<double> coef(m.num_variables(), 0.0);
  for (const LpTerm& t : obj) coef[t.var] += t.coef;
  for (std::size_t v = 0; v < m.num_variables(); ++v) {
    out.add_variable(m.variables()[v], coef[v]);
  }
  out.constraints() = std::move(m.constraints());
  return out;
}

double objective_value(const LpModel& model, const std::vector<double>& point) {
  double sum = 0.0;
  for (std::size_t v = 0; v < model.num_variables(); ++v) {
    sum += model.objective()[v] * point[v];
  }
  return sum;
}

double violation(const LpConstraint& row, const std::vector<double>& point) {
  double lhs = 0.0;
  for (const LpTerm& t : row.terms) lhs += t.coef * point[t.var];
  switch (row.sense) {
    case LpSense::kLe:
      return std::max(0.0, lhs - row.rhs);
    case LpSense::kGe:
      return std::max(0.0, row.rhs - lhs);
    case LpSense::kEq:
      break;
  }
  return std::abs(lhs - row.rhs);
}

double max_violation(const LpModel& model, const std::vector<double>& point) {
  double worst = 0.0;
  for (double v : point) worst = std::max({worst, -v, v - 1.0});
  for (const LpConstraint& r : model.constraints()) {
    if (!r.cut) worst = std::max(worst, violation(r, point));
  }
  return worst;
}

std::vector<double> symmetric_fractional_solution(
    const TapInstance& instance, const LpModel& model) {
  const int n = instance.num_tokens();
  if (n < 2) throw std::invalid_argument("needs at least two tokens");
  const double arcs = 2.0 * instance.graph().edges().size();
  std::vector<double> point(model.num_variables(), 0.0);
  for (std::size_t v = 0; v < point.size(); ++v) {
    const std::string& name = model.variables()[v];
    if (name[0] == 'w') {
      point[v] = 1.0 / n;
    } else if (name[0] == 'y') {
      point[v] = 1.0 / arcs;
    } else if (name[0] == 'x') {
      // x_t_q_i_j: self loop iff the last two fields agree.
      const auto last = name.rfind('_');
      const auto prev = name.rfind('_', last - 1);
      if (name.substr(prev + 1, last - prev - 1) == name.substr(last + 1)) {
        point[v] = 1.0 / n;
      }
    }
  }
  return point;
}

std::vector<double> integer_solution_point(
    const TapInstance& instance, const LpModel& model,
    const std::vector<Allocation>& allocations) {
  if (allocations.size() != instance.num_layers()) {
    throw std::invalid_argument("one allocation per layer expected");
  }
  std::vector<double> point(model.num_variables(), 0.0);
  auto set = [&](const std::string& name) {
    const int v = model.find(name);
    if (v < 0) throw std::invalid_argument("LP model lacks " + name);
    point[v] = 1.0;
  };
  const int n = instance.num_tokens();
  for (std::size_t t = 1; t <= allocations.size(); ++t) {
    const Allocation& a = allocations[t - 1];
    for (int q = 0; q < n; ++q) {
      set(w_name(t, q, a.vertex_of(q)));
      if (t < allocations.size()) {
        set(x_name(t, q, a.vertex_of(q), allocations[t].vertex_of(q)));
      }
    }
    for (const TokenPair& pq : instance.layers()[t - 1]) {
      set(y_name(t, pq.first, pq.second, a.vertex_of(pq.first),
                 a.vertex_of(pq.second)));
    }
  }
  return point;
}

}  // namespace tapswap
