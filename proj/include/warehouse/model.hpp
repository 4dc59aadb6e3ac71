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

// Problem and solution data for the deterministic warehouse problem.
//
// Periods are numbered 1..T in every public function; vectors are stored
// 0-based, so period t lives at index t - 1. The three variants differ only
// in the per-period side constraint:
//   WP1: x_t * y_t = 0 (no buying and selling in the same period),
//   WP2: y_t <= s_{t-1} (sell out of the opening stock only),
//   WP3: WP1 with zero trade lower bounds and zero fixed costs, and s0 inside
//        every stock interval.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "warehouse/error.hpp"
#include "warehouse/rational.hpp"

namespace warehouse {

enum class Variant { kWP1, kWP2, kWP3 };

inline std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::kWP1: return "wp1";
    case Variant::kWP2: return "wp2";
    case Variant::kWP3: return "wp3";
  }
  return "wp1";
}

inline Variant parse_variant(std::string_view name) {
  if (name == "wp1") return Variant::kWP1;
  if (name == "wp2") return Variant::kWP2;
  if (name == "wp3") return Variant::kWP3;
  throw Error(ErrorCode::kParseError, "unknown variant '" + std::string(name) + "'");
}

// True when the variant forbids buying and selling in one period.
inline bool has_complementarity(Variant v) { return v != Variant::kWP2; }

struct Instance {
  Variant variant = Variant::kWP1;
  int T = 0;
  Rational s0;
  std::vector<Rational> Ls, Us;
  std::vector<Rational> Lx, Ux;
  std::vector<Rational> Ly, Uy;
  std::vector<Rational> revenue, cost, holding;
  std::vector<Rational> fixed_purchase, fixed_sale;

  // Instance with all vectors of length T filled with zeros.
  static Instance zeros(int periods, Variant variant = Variant::kWP1) {
    Instance inst;
    inst.variant = variant;
    inst.T = periods;
    const auto n = static_cast<std::size_t>(periods < 0 ? 0 : periods);
    for (auto* v : inst.vectors()) v->assign(n, Rational(0));
    return inst;
  }

  std::vector<std::vector<Rational>*> vectors() {
    return {&Ls, &Us, &Lx, &Ux, &Ly, &Uy, &revenue,
            &cost, &holding, &fixed_purchase, &fixed_sale};
  }
  std::vector<const std::vector<Rational>*> vectors() const {
    return {&Ls, &Us, &Lx, &Ux, &Ly, &Uy, &revenue,
            &cost, &holding, &fixed_purchase, &fixed_sale};
  }

  bool operator==(const Instance&) const = default;
};

struct Solution {
  std::vector<Rational> x, y, s;
  std::vector<int> w, z;
  Rational objective;

  bool operator==(const Solution&) const = default;
};

struct Violation {
  int period = 0;  // 0 for instance-wide rows such as the objective
  std::string constraint;
  Rational lhs;
  Rational rhs;

  bool operator==(const Violation&) const = default;
};

struct FeasibilityReport {
  bool feasible = true;
  std::vector<Violation> violations;

  void add(int period, std::string constraint, Rational lhs, Rational rhs) {
    violations.push_back({period, std::move(constraint), std::move(lhs), std::move(rhs)});
    feasible = false;
  }

  bool has(std::string_view constraint, int period) const {
    for (const auto& v : violations) {
      if (v.constraint == constraint && v.period == period) return true;
    }
    return false;
  }
};

inline void validate_instance(const Instance& inst) {
  if (inst.T < 1) {
    throw Error(ErrorCode::kWrongVectorLength, "T must be positive");
  }
  static constexpr const char* kNames[] = {
      "Ls", "Us", "Lx", "Ux", "Ly", "Uy", "revenue",
      "cost", "holding", "fixed_purchase", "fixed_sale"};
  const auto vecs = inst.vectors();
  for (std::size_t k = 0; k < vecs.size(); ++k) {
    if (vecs[k]->size() != static_cast<std::size_t>(inst.T)) {
      throw Error(ErrorCode::kWrongVectorLength,
                  std::string(kNames[k]) + " has length " +
                      std::to_string(vecs[k]->size()) + ", expected " +
                      std::to_string(inst.T));
    }
  }
  if (inst.s0 < 0) {
    throw Error(ErrorCode::kNegativeBound, "s0 is negative");
  }
  const bool wp3 = inst.variant == Variant::kWP3;
  for (int t = 1; t <= inst.T; ++t) {
    const std::size_t i = static_cast<std::size_t>(t - 1);
    const std::pair<const std::vector<Rational>*, const char*> lowers[] = {
        {&inst.Ls, "Ls"}, {&inst.Lx, "Lx"}, {&inst.Ly, "Ly"}};
    const std::pair<const std::vector<Rational>*, const char*> uppers[] = {
        {&inst.Us, "Us"}, {&inst.Ux, "Ux"}, {&inst.Uy, "Uy"}};
    for (int k = 0; k < 3; ++k) {
      const Rational& lo = (*lowers[k].first)[i];
      const Rational& hi = (*uppers[k].first)[i];
      if (lo < 0 || hi < 0) {
        throw Error(ErrorCode::kNegativeBound,
                    std::string(lo < 0 ? lowers[k].second : uppers[k].second) +
                        " is negative at t=" + std::to_string(t),
                    t);
      }
      if (lo > hi) {
        throw Error(ErrorCode::kLowerExceedsUpper,
                    std::string(lowers[k].second) + " > " + uppers[k].second +
                        " at t=" + std::to_string(t),
                    t);
      }
    }
    if (inst.fixed_purchase[i] < 0 || inst.fixed_sale[i] < 0) {
      throw Error(ErrorCode::kNegativeBound,
                  "negative fixed cost at t=" + std::to_string(t), t);
    }
    if (wp3) {
      if (inst.Lx[i] != 0 || inst.Ly[i] != 0) {
        throw Error(ErrorCode::kWP3ShapeViolation,
                    "nonzero trade lower bound at t=" + std::to_string(t), t);
      }
      if (inst.fixed_purchase[i] != 0 || inst.fixed_sale[i] != 0) {
        throw Error(ErrorCode::kWP3ShapeViolation,
                    "nonzero fixed cost at t=" + std::to_string(t), t);
      }
      if (inst.s0 < inst.Ls[i] || inst.s0 > inst.Us[i]) {
        throw Error(ErrorCode::kWP3ShapeViolation,
                    "s0 outside stock bounds at t=" + std::to_string(t), t);
      }
    }
  }
}

inline Rational evaluate_payoff(const Instance& inst, int t, const Rational& x,
                                const Rational& y, const Rational& s, int w,
                                int z) {
  if (t < 1 || t > inst.T) {
    throw Error(ErrorCode::kPeriodOutOfRange,
                "period " + std::to_string(t) + " outside 1.." + std::to_string(inst.T), t);
  }
  const std::size_t i = static_cast<std::size_t>(t - 1);
  Rational p = inst.revenue[i] * y - inst.cost[i] * x - inst.holding[i] * s;
  if (w) p -= inst.fixed_purchase[i];
  if (z) p -= inst.fixed_sale[i];
  return p;
}

// Sum of per-period payoffs; vectors must have length T.
inline Rational compute_objective(const Instance& inst, const Solution& sol) {
  Rational total = 0;
  for (int t = 1; t <= inst.T; ++t) {
    const std::size_t i = static_cast<std::size_t>(t - 1);
    total += evaluate_payoff(inst, t, sol.x[i], sol.y[i], sol.s[i], sol.w[i], sol.z[i]);
  }
  return total;
}

// Reports every violated constraint. Constraint names:
//   flow_balance, stock_lower, stock_upper, purchase_lower, purchase_upper,
//   sale_lower, sale_upper, indicator_binary, complementarity,
//   sale_le_prev_stock, objective, vector_length.
inline FeasibilityReport check_solution(const Instance& inst, const Solution& sol) {
  FeasibilityReport report;
  const auto n = static_cast<std::size_t>(inst.T);
  if (sol.x.size() != n || sol.y.size() != n || sol.s.size() != n ||
      sol.w.size() != n || sol.z.size() != n) {
    report.add(0, "vector_length", Rational(static_cast<long>(sol.x.size())),
               Rational(inst.T));
    return report;
  }
  Rational prev = inst.s0;
  for (int t = 1; t <= inst.T; ++t) {
    const std::size_t i = static_cast<std::size_t>(t - 1);
    const Rational& x = sol.x[i];
    const Rational& y = sol.y[i];
    const Rational& s = sol.s[i];
    const int w = sol.w[i];
    const int z = sol.z[i];
    const Rational balance = prev - y + x;
    if (s != balance) report.add(t, "flow_balance", s, balance);
    if (s < inst.Ls[i]) report.add(t, "stock_lower", s, inst.Ls[i]);
    if (s > inst.Us[i]) report.add(t, "stock_upper", s, inst.Us[i]);
    if ((w != 0 && w != 1)) report.add(t, "indicator_binary", Rational(w), Rational(1));
    if ((z != 0 && z != 1)) report.add(t, "indicator_binary", Rational(z), Rational(1));
    if (x < inst.Lx[i] * w) report.add(t, "purchase_lower", x, inst.Lx[i] * w);
    if (x > inst.Ux[i] * w) report.add(t, "purchase_upper", x, inst.Ux[i] * w);
    if (y < inst.Ly[i] * z) report.add(t, "sale_lower", y, inst.Ly[i] * z);
    if (y > inst.Uy[i] * z) report.add(t, "sale_upper", y, inst.Uy[i] * z);
    if (has_complementarity(inst.variant)) {
      if (x * y != 0) report.add(t, "complementarity", x * y, Rational(0));
    } else if (y > prev) {
      report.add(t, "sale_le_prev_stock", y, prev);
    }
    prev = s;
  }
  const Rational recomputed = compute_objective(inst, sol);
  if (recomputed != sol.objective) report.add(0, "objective", sol.objective, recomputed);
  return report;
}

}  // namespace warehouse
