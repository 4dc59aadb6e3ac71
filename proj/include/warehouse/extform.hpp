// Copyright 2026 The Warehouse Solver Authors
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

// Extended linear formulation over the arcs of a layered network.
//
// One flow variable per arc plus (x, y, s, w, z) per period. Row families:
//   (i)    flow conservation at every node of layers 1..T-1
//   (ii)   unit flow out of s0
//   (iii)  arc flows nonnegative
//   (iv)   x_t and y_t equal the flow-weighted arc trades of period t
//   (v)    stock balance
//   (vi)   w_t equals the flow on buying arcs when Lx_t > 0
//   (vii)  w_t dominates the flow on buying arcs when Lx_t = 0
//   (viii) z_t equals the flow on selling arcs when Ly_t > 0
//   (ix)   z_t dominates the flow on selling arcs when Ly_t = 0
//   (x)    w_t <= 1, z_t <= 1
// w and z stay continuous; integrality of the vertices is a property of the
// polytope, not a constraint.

#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "warehouse/network.hpp"

namespace warehouse {

enum class VarKind { kContinuous, kBinaryRelaxed };
enum class Sense { kEq, kLe, kGe };

struct LPVariable {
  std::string name;
  Rational lower;
  std::optional<Rational> upper;
  VarKind kind = VarKind::kContinuous;
};

struct LPRow {
  std::string name;
  std::string family;  // "(i)" .. "(x)"
  int period = 0;      // 0 for rows not tied to one period
  Sense sense = Sense::kEq;
  std::vector<std::pair<std::size_t, Rational>> coefs;
  Rational rhs;
};

struct LPModel {
  int T = 0;
  std::vector<LPVariable> variables;
  std::vector<std::pair<std::size_t, Rational>> objective;
  std::vector<LPRow> rows;
  // arc_var[t - 1][k] is the variable of net.arcs[t - 1][k]
  std::vector<std::vector<std::size_t>> arc_var;
  std::vector<std::size_t> x_var, y_var, s_var, w_var, z_var;

  std::size_t family_count(std::string_view family) const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.family == family ? 1 : 0;
    return n;
  }

  const LPRow* find_row(std::string_view name) const {
    for (const auto& r : rows) {
      if (r.name == name) return &r;
    }
    return nullptr;
  }
};

using LPPoint = std::vector<Rational>;

inline LPModel build_extended_formulation(const Instance& inst, const LayeredNetwork& net) {
  LPModel m;
  m.T = inst.T;
  const auto T = static_cast<std::size_t>(inst.T);
  auto add_var = [&](std::string name, VarKind kind) {
    m.variables.push_back({std::move(name), Rational(0), std::nullopt, kind});
    return m.variables.size() - 1;
  };

  m.arc_var.resize(T);
  for (std::size_t i = 0; i < T; ++i) {
    for (const auto& a : net.arcs[i]) {
      m.arc_var[i].push_back(add_var("a_" + std::to_string(i + 1) + "_" + std::to_string(a.tail) + "_" +
                                         std::to_string(a.head),
                                     VarKind::kContinuous));
    }
  }
  for (std::size_t i = 0; i < T; ++i) {
    const std::string t = std::to_string(i + 1);
    m.x_var.push_back(add_var("x_" + t, VarKind::kContinuous));
    m.y_var.push_back(add_var("y_" + t, VarKind::kContinuous));
    m.s_var.push_back(add_var("s_" + t, VarKind::kContinuous));
    m.w_var.push_back(add_var("w_" + t, VarKind::kBinaryRelaxed));
    m.z_var.push_back(add_var("z_" + t, VarKind::kBinaryRelaxed));
  }

  for (std::size_t i = 0; i < T; ++i) {
    auto push = [&](std::size_t v, const Rational& c) {
      if (c != 0) m.objective.emplace_back(v, c);
    };
    push(m.x_var[i], -inst.cost[i]);
    push(m.y_var[i], inst.revenue[i]);
    push(m.s_var[i], -inst.holding[i]);
    push(m.w_var[i], -inst.fixed_purchase[i]);
    push(m.z_var[i], -inst.fixed_sale[i]);
  }

  // (i) conservation on inner layers
  for (std::size_t layer = 1; layer < T; ++layer) {
    std::vector<LPRow> node_rows(net.layers[layer].size());
    for (std::size_t j = 0; j < node_rows.size(); ++j) {
      node_rows[j].name = "i_" + std::to_string(layer) + "_" + std::to_string(j);
      node_rows[j].family = "(i)";
      node_rows[j].period = static_cast<int>(layer);
    }
    for (std::size_t k = 0; k < net.arcs[layer - 1].size(); ++k) {
      node_rows[net.arcs[layer - 1][k].head].coefs.emplace_back(m.arc_var[layer - 1][k], Rational(1));
    }
    for (std::size_t k = 0; k < net.arcs[layer].size(); ++k) {
      node_rows[net.arcs[layer][k].tail].coefs.emplace_back(m.arc_var[layer][k], Rational(-1));
    }
    for (auto& r : node_rows) m.rows.push_back(std::move(r));
  }

  // (ii) unit source
  {
    LPRow r{"ii", "(ii)", 0, Sense::kEq, {}, Rational(1)};
    if (T > 0) {
      for (std::size_t k = 0; k < net.arcs[0].size(); ++k) r.coefs.emplace_back(m.arc_var[0][k], Rational(1));
    }
    m.rows.push_back(std::move(r));
  }

  // (iii) nonnegativity
  for (std::size_t i = 0; i < T; ++i) {
    for (std::size_t k = 0; k < net.arcs[i].size(); ++k) {
      m.rows.push_back({"iii_" + m.variables[m.arc_var[i][k]].name.substr(2), "(iii)",
                        static_cast<int>(i + 1), Sense::kGe, {{m.arc_var[i][k], Rational(1)}}, Rational(0)});
    }
  }

  for (std::size_t i = 0; i < T; ++i) {
    const int t = static_cast<int>(i + 1);
    const std::string ts = std::to_string(t);
    LPRow rx{"iv_x_" + ts, "(iv)", t, Sense::kEq, {{m.x_var[i], Rational(1)}}, Rational(0)};
    LPRow ry{"iv_y_" + ts, "(iv)", t, Sense::kEq, {{m.y_var[i], Rational(1)}}, Rational(0)};
    const bool w_eq = inst.Lx[i] > 0;
    const bool z_eq = inst.Ly[i] > 0;
    LPRow rw{(w_eq ? "vi_" : "vii_") + ts, w_eq ? "(vi)" : "(vii)", t, w_eq ? Sense::kEq : Sense::kGe,
             {{m.w_var[i], Rational(1)}}, Rational(0)};
    LPRow rz{(z_eq ? "viii_" : "ix_") + ts, z_eq ? "(viii)" : "(ix)", t, z_eq ? Sense::kEq : Sense::kGe,
             {{m.z_var[i], Rational(1)}}, Rational(0)};
    for (std::size_t k = 0; k < net.arcs[i].size(); ++k) {
      const auto& d = net.arcs[i][k].decision;
      const std::size_t v = m.arc_var[i][k];
      if (d.x != 0) rx.coefs.emplace_back(v, -d.x);
      if (d.y != 0) ry.coefs.emplace_back(v, -d.y);
      if (d.x > 0) rw.coefs.emplace_back(v, Rational(-1));
      if (d.y > 0) rz.coefs.emplace_back(v, Rational(-1));
    }
    // (v) s_t - s_{t-1} + y_t - x_t = 0, with s_0 moved to the right-hand side
    LPRow rv{"v_" + ts, "(v)", t, Sense::kEq,
             {{m.s_var[i], Rational(1)}, {m.y_var[i], Rational(1)}, {m.x_var[i], Rational(-1)}},
             Rational(0)};
    if (i == 0) {
      rv.rhs = inst.s0;
    } else {
      rv.coefs.emplace_back(m.s_var[i - 1], Rational(-1));
    }
    m.rows.push_back(std::move(rx));
    m.rows.push_back(std::move(ry));
    m.rows.push_back(std::move(rv));
    m.rows.push_back(std::move(rw));
    m.rows.push_back(std::move(rz));
    m.rows.push_back({"x_w_" + ts, "(x)", t, Sense::kLe, {{m.w_var[i], Rational(1)}}, Rational(1)});
    m.rows.push_back({"x_z_" + ts, "(x)", t, Sense::kLe, {{m.z_var[i], Rational(1)}}, Rational(1)});
  }
  return m;
}

inline Rational row_activity(const LPRow& row, const LPPoint& point) {
  Rational lhs = 0;
  for (const auto& [v, c] : row.coefs) lhs += c * point[v];
  return lhs;
}

inline FeasibilityReport check_point(const LPModel& model, const LPPoint& point) {
  FeasibilityReport report;
  for (const auto& row : model.rows) {
    const Rational lhs = row_activity(row, point);
    bool ok = true;
    switch (row.sense) {
      case Sense::kEq: ok = lhs == row.rhs; break;
      case Sense::kLe: ok = lhs <= row.rhs; break;
      case Sense::kGe: ok = lhs >= row.rhs; break;
    }
    if (!ok) report.add(row.period, row.family, lhs, row.rhs);
  }
  return report;
}

inline Rational evaluate_objective(const LPModel& model, const LPPoint& point) {
  Rational total = 0;
  for (const auto& [v, c] : model.objective) total += c * point[v];
  return total;
}

// Indicator vector of the solution's stock path, plus its (x, y, s, w, z).
inline LPPoint lift_point(const LPModel& model, const Instance& inst, const LayeredNetwork& net,
                          const Solution& sol) {
  const auto T = static_cast<std::size_t>(inst.T);
  if (sol.s.size() != T || sol.x.size() != T || sol.y.size() != T || sol.w.size() != T ||
      sol.z.size() != T) {
    throw Error(ErrorCode::kNotAPath, "solution length differs from the network horizon");
  }
  LPPoint point(model.variables.size(), Rational(0));
  std::optional<std::size_t> tail = net.find_node(0, inst.s0);
  for (std::size_t i = 0; i < T; ++i) {
    const int t = static_cast<int>(i + 1);
    const auto head = net.find_node(t, sol.s[i]);
    if (!tail || !head) {
      throw Error(ErrorCode::kNotAPath, "stock " + to_string(sol.s[i]) + " is not a node of layer " +
                                            std::to_string(t), t);
    }
    const Arc* arc = net.find_arc(t, *tail, *head);
    if (!arc) throw Error(ErrorCode::kNotAPath, "no arc in period " + std::to_string(t), t);
    point[model.arc_var[i][static_cast<std::size_t>(arc - net.arcs[i].data())]] = 1;
    point[model.x_var[i]] = sol.x[i];
    point[model.y_var[i]] = sol.y[i];
    point[model.s_var[i]] = sol.s[i];
    point[model.w_var[i]] = sol.w[i];
    point[model.z_var[i]] = sol.z[i];
    tail = head;
  }
  return point;
}

inline FeasibilityReport lift_and_check(const Instance& inst, const LayeredNetwork& net, const Solution& sol) {
  const LPModel model = build_extended_formulation(inst, net);
  return check_point(model, lift_point(model, inst, net, sol));
}

namespace detail {

inline bool all_decimal(const std::vector<Rational>& values) {
  return std::all_of(values.begin(), values.end(), [](const Rational& r) { return has_exact_decimal(r); });
}

inline BigInt denominator_lcm(const std::vector<Rational>& values) {
  BigInt l = 1;
  for (const auto& v : values) l = lcm_of(l, denominator_of(v));
  return l;
}

inline std::string lp_number(const Rational& r) { return to_decimal_string(r); }

inline void write_terms(std::ostream& os, const std::vector<std::pair<std::string, Rational>>& terms) {
  if (terms.empty()) {
    os << " 0 x_1";
    return;
  }
  int on_line = 0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& [name, c] = terms[k];
    if (on_line == 8) {
      os << "\n   ";
      on_line = 0;
    }
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (k == 0) {
      os << (c < 0 ? " -" : " ");
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) os << lp_number(mag) << " ";
    os << name;
    ++on_line;
  }
}

}  // namespace detail

// CPLEX-LP text. When some stock quantity has no finite decimal expansion,
// stock variables (x, y, s) are expressed in units scaled by the common
// denominator; when some objective coefficient has none, the objective is
// multiplied by the common denominator. Both factors are recorded in comment
// lines.
inline std::string write_lp(const LPModel& model, const Instance& inst, const LayeredNetwork& net) {
  std::vector<Rational> quantities = {inst.s0};
  for (const auto& layer : net.layers) quantities.insert(quantities.end(), layer.begin(), layer.end());
  for (const auto& arcs : net.arcs) {
    for (const auto& a : arcs) {
      quantities.push_back(a.decision.x);
      quantities.push_back(a.decision.y);
    }
  }
  const BigInt qscale = detail::all_decimal(quantities) ? BigInt(1) : detail::denominator_lcm(quantities);

  std::vector<bool> is_quantity(model.variables.size(), false);
  for (const auto* vars : {&model.x_var, &model.y_var, &model.s_var}) {
    for (auto v : *vars) is_quantity[v] = true;
  }

  // Objective in scaled stock units: coefficient c on x becomes c / qscale.
  std::vector<std::pair<std::size_t, Rational>> objective;
  for (const auto& [v, c] : model.objective) {
    objective.emplace_back(v, is_quantity[v] ? Rational(c / Rational(qscale)) : c);
  }
  std::vector<Rational> obj_values;
  for (const auto& [v, c] : objective) obj_values.push_back(c);
  const BigInt oscale = detail::all_decimal(obj_values) ? BigInt(1) : detail::denominator_lcm(obj_values);

  std::ostringstream os;
  os << "\\ warehouse extended formulation: T=" << model.T << ", " << model.variables.size()
     << " variables, " << model.rows.size() << " rows\n";
  if (qscale != 1) os << "\\ stock quantities scaled by " << qscale.str() << "\n";
  if (oscale != 1) os << "\\ objective scaled by " << oscale.str() << "\n";
  os << "Maximize\n obj:";
  {
    std::vector<std::pair<std::string, Rational>> terms;
    for (const auto& [v, c] : objective) terms.emplace_back(model.variables[v].name, c * Rational(oscale));
    detail::write_terms(os, terms);
  }
  os << "\nSubject To\n";
  for (const auto& row : model.rows) {
    // A row mixing quantity variables with flow/indicator variables is
    // expressed in scaled units by multiplying flow/indicator coefficients
    // and the right-hand side by qscale when the row involves quantities.
    bool touches_quantity = false;
    for (const auto& [v, c] : row.coefs) touches_quantity = touches_quantity || is_quantity[v];
    const Rational factor = touches_quantity ? Rational(qscale) : Rational(1);
    std::vector<std::pair<std::string, Rational>> terms;
    for (const auto& [v, c] : row.coefs) {
      terms.emplace_back(model.variables[v].name, is_quantity[v] ? c : c * factor);
    }
    const char* sense = row.sense == Sense::kEq ? "=" : row.sense == Sense::kLe ? "<=" : ">=";
    os << " " << row.name << ":";
    detail::write_terms(os, terms);
    os << " " << sense << " " << detail::lp_number(row.rhs * factor) << "\n";
  }
  os << "Bounds\n";
  for (const auto& v : model.variables) {
    if (v.upper) os << " " << detail::lp_number(v.lower) << " <= " << v.name << " <= " << detail::lp_number(*v.upper) << "\n";
  }
  os << "End\n";
  return os.str();
}

}  // namespace warehouse
