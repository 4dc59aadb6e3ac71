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

// Approximation scheme for WP3 (no fixed costs, no trade lower bounds).
//
// The trade upper bounds are rounded down to multiples of K = epsilon * U_min
// and the rounded instance is solved exactly. Its candidate stock levels then
// sit on a lattice of step K around the anchors, which keeps the network
// polynomial when U_max / U_min is. Any optimal plan, split into
// purchase-to-sale pairs and shrunk by the factor (1 - epsilon), fits the
// rounded bounds, so the rounded optimum loses at most an epsilon fraction.
// That argument needs a payoff linear in the trades alone: with holding costs
// and s0 > 0 the shrunk plan still pays for storing s0, and the ratio can fail.

#pragma once

#include <vector>

#include "warehouse/model.hpp"
#include "warehouse/network.hpp"

namespace warehouse {

struct FlowPair {
  int purchase_period = 0;
  int sale_period = 0;
  Rational amount;

  bool operator==(const FlowPair&) const = default;
};

// Purchase at purchase_period funds the sale at sale_period; the pair runs
// forward in time when purchase_period < sale_period, backward otherwise.
struct BalancedFlow {
  std::vector<FlowPair> pairs;
};

struct FptasParams {
  Rational epsilon;
  Rational K;
  Rational U_min;
  Rational U_max;
};

namespace detail {

inline void require_wp3(const Instance& inst) {
  if (inst.variant != Variant::kWP3) {
    throw Error(ErrorCode::kWrongVariant, "operation applies to WP3 instances only");
  }
}

}  // namespace detail

inline FptasParams fptas_params(const Instance& inst, const Rational& epsilon) {
  detail::require_wp3(inst);
  if (epsilon <= 0 || epsilon >= 1) {
    throw Error(ErrorCode::kEpsilonOutOfRange, "epsilon must lie in (0, 1)");
  }
  FptasParams p;
  p.epsilon = epsilon;
  bool any = false;
  for (const auto* v : {&inst.Ux, &inst.Uy}) {
    for (const auto& u : *v) {
      if (u <= 0) continue;
      if (!any || u < p.U_min) p.U_min = u;
      if (!any || u > p.U_max) p.U_max = u;
      any = true;
    }
  }
  if (!any) throw Error(ErrorCode::kNoPositiveBounds, "all trade upper bounds are zero");
  p.K = epsilon * p.U_min;
  return p;
}

// Rounds every trade upper bound down to a multiple of K.
inline Instance scale_instance(const Instance& inst, const Rational& K) {
  Instance scaled = inst;
  for (auto* v : {&scaled.Ux, &scaled.Uy}) {
    for (auto& u : *v) u = K * Rational(floor_of(u / K));
  }
  return scaled;
}

struct FptasResult {
  Solution solution;
  FptasParams params;
  Instance scaled;
  // Largest candidate level set of the rounded instance; grows with
  // U_max / U_min and 1 / epsilon.
  std::size_t S_size = 0;
};

inline FptasResult fptas_solve_detailed(const Instance& inst, const Rational& epsilon) {
  FptasResult r;
  r.params = fptas_params(inst, epsilon);
  r.scaled = scale_instance(inst, r.params.K);
  SolveResult solved = solve_detailed(r.scaled);
  r.S_size = solved.levels.S_size;
  r.solution = std::move(solved.solution);
  r.solution.objective = compute_objective(inst, r.solution);
  return r;
}

inline Solution fptas_solve(const Instance& inst, const Rational& epsilon) {
  return fptas_solve_detailed(inst, epsilon).solution;
}

// Pairs purchases with sales: for each period, first drain its purchase
// against the earliest later unmatched sales, then drain its sale against
// the earliest later unmatched purchases.
inline BalancedFlow balanced_flow_decompose(const Instance& inst, const Solution& sol) {
  if (!sol.s.empty() && sol.s.back() != inst.s0) {
    throw Error(ErrorCode::kTerminalStockMismatch, "final stock differs from s0");
  }
  std::vector<Rational> x = sol.x;
  std::vector<Rational> y = sol.y;
  const int T = static_cast<int>(x.size());
  auto at = [](std::vector<Rational>& v, int t) -> Rational& { return v[static_cast<std::size_t>(t - 1)]; };
  BalancedFlow flow;
  for (int t = 1; t <= T; ++t) {
    while (at(x, t) > 0) {
      int later = t + 1;
      while (later <= T && at(y, later) <= 0) ++later;
      if (later > T) throw Error(ErrorCode::kInvalidArgument, "purchase without a later sale");
      Rational f = std::min(at(x, t), at(y, later));
      at(x, t) -= f;
      at(y, later) -= f;
      flow.pairs.push_back({t, later, std::move(f)});
    }
    while (at(y, t) > 0) {
      int later = t + 1;
      while (later <= T && at(x, later) <= 0) ++later;
      if (later > T) throw Error(ErrorCode::kInvalidArgument, "sale without a later purchase");
      Rational f = std::min(at(x, later), at(y, t));
      at(x, later) -= f;
      at(y, t) -= f;
      flow.pairs.push_back({later, t, std::move(f)});
    }
  }
  return flow;
}

inline Solution reduce_flow(const Instance& inst, const Solution& sol, const BalancedFlow& flow,
                            std::size_t index, const Rational& delta) {
  if (index >= flow.pairs.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "pair index " + std::to_string(index));
  }
  const FlowPair& pair = flow.pairs[index];
  if (delta < 0 || delta > pair.amount) {
    throw Error(ErrorCode::kDeltaOutOfRange, "delta outside [0, amount]");
  }
  Solution out = sol;
  const auto p = static_cast<std::size_t>(pair.purchase_period - 1);
  const auto q = static_cast<std::size_t>(pair.sale_period - 1);
  out.x[p] -= delta;
  out.y[q] -= delta;
  if (p < q) {
    for (std::size_t i = p; i < q; ++i) out.s[i] -= delta;
  } else {
    for (std::size_t i = q; i < p; ++i) out.s[i] += delta;
  }
  out.w[p] = out.x[p] > 0 ? 1 : 0;
  out.z[q] = out.y[q] > 0 ? 1 : 0;
  out.objective = compute_objective(inst, out);
  return out;
}

// Every pair amount multiplied by `factor`, then x, y and s rebuilt from the
// pairs.
inline Solution reassemble_flows(const Instance& inst, const BalancedFlow& flow, const Rational& factor) {
  const auto T = static_cast<std::size_t>(inst.T);
  Solution out;
  out.x.assign(T, Rational(0));
  out.y.assign(T, Rational(0));
  for (const auto& pair : flow.pairs) {
    out.x[static_cast<std::size_t>(pair.purchase_period - 1)] += factor * pair.amount;
    out.y[static_cast<std::size_t>(pair.sale_period - 1)] += factor * pair.amount;
  }
  Rational stock = inst.s0;
  for (std::size_t i = 0; i < T; ++i) {
    stock += out.x[i] - out.y[i];
    out.s.push_back(stock);
    out.w.push_back(out.x[i] > 0 ? 1 : 0);
    out.z.push_back(out.y[i] > 0 ? 1 : 0);
  }
  out.objective = compute_objective(inst, out);
  return out;
}

// Appends a zero-price period whose stock window is [s0, s0], so every plan
// ends where it started. Its trade bounds Us_T + U_max allow the return from
// any final stock and, being at least U_min, leave K unchanged; after rounding
// they still exceed Us_T.
inline Instance normalize_terminal(const Instance& inst) {
  detail::require_wp3(inst);
  Instance out = inst;
  Rational u_max = 0;
  for (const auto* v : {&inst.Ux, &inst.Uy}) {
    for (const auto& u : *v) u_max = std::max(u_max, u);
  }
  const Rational room = inst.Us.back() + u_max;
  out.T = inst.T + 1;
  out.Ls.push_back(inst.s0);
  out.Us.push_back(inst.s0);
  out.Lx.push_back(Rational(0));
  out.Ux.push_back(room);
  out.Ly.push_back(Rational(0));
  out.Uy.push_back(room);
  for (auto* v : {&out.revenue, &out.cost, &out.holding, &out.fixed_purchase, &out.fixed_sale}) {
    v->push_back(Rational(0));
  }
  return out;
}

// Maps a plan for `inst` to the normalized instance by trading back to s0 in
// the appended period.
inline Solution extend_to_terminal(const Instance& inst, const Solution& sol) {
  Solution out = sol;
  const Rational& last = sol.s.empty() ? inst.s0 : sol.s.back();
  const Rational x = last < inst.s0 ? Rational(inst.s0 - last) : Rational(0);
  const Rational y = last > inst.s0 ? Rational(last - inst.s0) : Rational(0);
  out.x.push_back(x);
  out.y.push_back(y);
  out.s.push_back(inst.s0);
  out.w.push_back(x > 0 ? 1 : 0);
  out.z.push_back(y > 0 ? 1 : 0);
  return out;
}

}  // namespace warehouse
