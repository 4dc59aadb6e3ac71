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

// Layered network over candidate stock levels and the longest-path solver.
//
// Layer 0 holds s0 and layer t holds the candidate levels of period t. An arc
// between consecutive layers carries the best trade (x, y, w, z) that moves
// the stock from its tail value to its head value, with that trade's payoff
// as the arc weight. Every path from s0 to the last layer is a feasible plan; an
// optimal plan is among them, so one backward sweep solves the problem.

#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "warehouse/model.hpp"
#include "warehouse/stock_levels.hpp"

namespace warehouse {

struct ArcDecision {
  Rational x;
  Rational y;
  int w = 0;
  int z = 0;
  Rational payoff;

  bool operator==(const ArcDecision&) const = default;
};

struct Arc {
  std::size_t tail = 0;  // index into layers[t - 1]
  std::size_t head = 0;  // index into layers[t]
  ArcDecision decision;
};

struct LayeredNetwork {
  std::vector<std::vector<Rational>> layers;  // T + 1 layers
  std::vector<std::vector<Arc>> arcs;         // arcs[t - 1] joins layer t-1 to t

  int periods() const { return static_cast<int>(arcs.size()); }

  std::size_t node_count() const {
    std::size_t n = 0;
    for (const auto& l : layers) n += l.size();
    return n;
  }

  std::size_t arc_count() const {
    std::size_t n = 0;
    for (const auto& a : arcs) n += a.size();
    return n;
  }

  std::optional<std::size_t> find_node(int layer, const Rational& stock) const {
    const auto& l = layers[static_cast<std::size_t>(layer)];
    auto it = std::lower_bound(l.begin(), l.end(), stock);
    if (it == l.end() || *it != stock) return std::nullopt;
    return static_cast<std::size_t>(it - l.begin());
  }

  const Arc* find_arc(int t, std::size_t tail, std::size_t head) const {
    for (const auto& a : arcs[static_cast<std::size_t>(t - 1)]) {
      if (a.tail == tail && a.head == head) return &a;
    }
    return nullptr;
  }
};

namespace detail {

// An indicator with quantity zero and lower bound zero may take either value;
// pick the one with the larger payoff, 0 on ties.
inline int resolve_indicator(const Rational& qty, const Rational& lower, const Rational& fixed) {
  if (qty > 0) return 1;
  if (lower > 0) return 0;
  return fixed < 0 ? 1 : 0;
}

inline bool better_candidate(const ArcDecision& a, const ArcDecision& b) {
  if (a.payoff != b.payoff) return a.payoff > b.payoff;
  return std::tie(a.x, a.w, a.z) < std::tie(b.x, b.w, b.z);
}

}  // namespace detail

inline std::vector<ArcDecision> arc_candidates(const Instance& inst, int t,
                                               const Rational& s_prev,
                                               const Rational& s_next) {
  if (t < 1 || t > inst.T) {
    throw Error(ErrorCode::kPeriodOutOfRange, "period " + std::to_string(t), t);
  }
  const auto i = static_cast<std::size_t>(t - 1);
  const Rational& Lx = inst.Lx[i];
  const Rational& Ux = inst.Ux[i];
  const Rational& Ly = inst.Ly[i];
  const Rational& Uy = inst.Uy[i];
  std::vector<ArcDecision> out;

  if (has_complementarity(inst.variant)) {
    const Rational diff = s_next - s_prev;
    const Rational x = diff > 0 ? diff : Rational(0);
    const Rational y = diff < 0 ? Rational(-diff) : Rational(0);
    if (x != 0 && (x < Lx || x > Ux)) return out;
    if (y != 0 && (y < Ly || y > Uy)) return out;
    ArcDecision d{x, y, detail::resolve_indicator(x, Lx, inst.fixed_purchase[i]),
                  detail::resolve_indicator(y, Ly, inst.fixed_sale[i]), Rational(0)};
    d.payoff = evaluate_payoff(inst, t, d.x, d.y, s_next, d.w, d.z);
    out.push_back(std::move(d));
    return out;
  }

  // WP2: two constraints touching (x_t, y_t) are tight at an extreme point,
  // one of them flow balance. Each remaining tight constraint fixes one
  // quantity and balance gives the other: y = s_prev - s_next + x.
  auto consider = [&](Rational x, Rational y, std::optional<int> w, std::optional<int> z) {
    if (x < 0 || y < 0 || y > s_prev) return;
    const int ww = w ? *w : detail::resolve_indicator(x, Lx, inst.fixed_purchase[i]);
    const int zz = z ? *z : detail::resolve_indicator(y, Ly, inst.fixed_sale[i]);
    if (x < Lx * ww || x > Ux * ww) return;
    if (y < Ly * zz || y > Uy * zz) return;
    ArcDecision d{std::move(x), std::move(y), ww, zz, Rational(0)};
    d.payoff = evaluate_payoff(inst, t, d.x, d.y, s_next, d.w, d.z);
    out.push_back(std::move(d));
  };
  const Rational down = s_prev - s_next;
  consider(s_next, s_prev, std::nullopt, std::nullopt);  // sell everything first
  consider(Rational(0), down, 0, std::nullopt);
  consider(Lx, down + Lx, 1, std::nullopt);
  consider(Ux, down + Ux, 1, std::nullopt);
  consider(-down, Rational(0), std::nullopt, 0);
  consider(Ly - down, Ly, std::nullopt, 1);
  consider(Uy - down, Uy, std::nullopt, 1);

  std::sort(out.begin(), out.end(), [](const ArcDecision& a, const ArcDecision& b) {
    return std::tie(a.x, a.y, a.w, a.z) < std::tie(b.x, b.y, b.w, b.z);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline LayeredNetwork build_network(const Instance& inst, const StockLevels& levels) {
  LayeredNetwork net;
  net.layers.push_back({inst.s0});
  for (const auto& l : levels.levels) net.layers.push_back(l);
  net.arcs.resize(static_cast<std::size_t>(inst.T));

  const bool wp2 = !has_complementarity(inst.variant);
  for (int t = 1; t <= inst.T; ++t) {
    const auto i = static_cast<std::size_t>(t - 1);
    const auto& tails = net.layers[i];
    const auto& heads = net.layers[i + 1];
    auto& arcs = net.arcs[i];
    for (std::size_t a = 0; a < tails.size(); ++a) {
      const Rational& s = tails[a];
      // s_next - s_prev = x - y lies in [-max sale, max purchase]
      Rational max_sale = inst.Uy[i];
      if (wp2 && s < max_sale) max_sale = s;
      const Rational lo = s - max_sale;
      const Rational hi = s + inst.Ux[i];
      auto first = std::lower_bound(heads.begin(), heads.end(), lo);
      auto last = std::upper_bound(heads.begin(), heads.end(), hi);
      for (auto it = first; it != last; ++it) {
        auto cands = arc_candidates(inst, t, s, *it);
        if (cands.empty()) continue;
        const ArcDecision* best = &cands.front();
        for (const auto& c : cands) {
          if (detail::better_candidate(c, *best)) best = &c;
        }
        arcs.push_back({a, static_cast<std::size_t>(it - heads.begin()), *best});
      }
    }
  }
  return net;
}

// Longest path from s0 to the last layer, ties broken toward the lexicographically smallest
// stock sequence. Returns nullopt when the last layer is unreachable.
inline std::optional<Solution> longest_path(const LayeredNetwork& net) {
  const auto T = static_cast<std::size_t>(net.periods());
  std::vector<std::vector<std::optional<Rational>>> best(T + 1);
  std::vector<std::vector<const Arc*>> choice(T + 1);
  for (std::size_t t = 0; t <= T; ++t) {
    best[t].assign(net.layers[t].size(), std::nullopt);
    choice[t].assign(net.layers[t].size(), nullptr);
  }
  for (auto& b : best[T]) b = Rational(0);

  for (std::size_t t = T; t-- > 0;) {
    // arcs are grouped by tail with heads ascending, so keeping the first of
    // equal values keeps the smallest head
    for (const Arc& arc : net.arcs[t]) {
      const auto& tail_value = best[t + 1][arc.head];
      if (!tail_value) continue;
      Rational v = arc.decision.payoff + *tail_value;
      auto& slot = best[t][arc.tail];
      if (!slot || v > *slot) {
        slot = std::move(v);
        choice[t][arc.tail] = &arc;
      }
    }
  }
  if (net.layers[0].empty() || !best[0][0]) return std::nullopt;

  Solution sol;
  std::size_t node = 0;
  for (std::size_t t = 0; t < T; ++t) {
    const Arc* arc = choice[t][node];
    sol.x.push_back(arc->decision.x);
    sol.y.push_back(arc->decision.y);
    sol.s.push_back(net.layers[t + 1][arc->head]);
    sol.w.push_back(arc->decision.w);
    sol.z.push_back(arc->decision.z);
    node = arc->head;
  }
  sol.objective = *best[0][0];
  return sol;
}

struct SolveResult {
  Solution solution;                     // in terms of the input instance
  std::optional<DoubledInstance> doubled;  // set for WP2
  StockLevels levels;                    // levels of the network actually solved
  LayeredNetwork network;
  Solution network_solution;             // path decoded on the solved network

  // The instance the network was built for (the doubled one for WP2).
  const Instance& network_instance(const Instance& input) const {
    return doubled ? doubled->instance : input;
  }
};

inline SolveResult solve_detailed(const Instance& inst) {
  try {
    validate_instance(inst);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidInstance, e.what(), e.period());
  }
  SolveResult r;
  if (inst.variant == Variant::kWP2) {
    r.doubled = double_horizon(inst);
    r.levels = gen_doubled_stock_levels(*r.doubled);
    r.network = build_network(r.doubled->instance, r.levels);
  } else {
    r.levels = gen_stock_levels(inst);
    r.network = build_network(inst, r.levels);
  }
  auto path = longest_path(r.network);
  if (!path) throw Error(ErrorCode::kInfeasible, "no trading plan satisfies the bounds");
  r.network_solution = *path;
  r.solution = r.doubled ? r.doubled->map_back(*path) : *path;
  return r;
}

inline Solution solve(const Instance& inst) { return solve_detailed(inst).solution; }

// WP2 solved on a T-period network (levels of the even doubled periods, arcs
// chosen among the seven tight-constraint trades) without doubling the
// horizon. Identical to solve() for the complementarity variants.
inline Solution solve_direct(const Instance& inst) {
  if (inst.variant != Variant::kWP2) return solve(inst);
  try {
    validate_instance(inst);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidInstance, e.what(), e.period());
  }
  const LayeredNetwork net = build_network(inst, gen_stock_levels(inst));
  auto path = longest_path(net);
  if (!path) throw Error(ErrorCode::kInfeasible, "no trading plan satisfies the bounds");
  return *path;
}

inline std::string to_dot(const LayeredNetwork& net) {
  std::ostringstream os;
  os << "digraph warehouse {\n  rankdir=LR;\n";
  for (std::size_t t = 0; t < net.layers.size(); ++t) {
    for (std::size_t j = 0; j < net.layers[t].size(); ++j) {
      os << "  n" << t << "_" << j << " [label=\"" << t << ":" << to_string(net.layers[t][j])
         << "\"];\n";
    }
  }
  for (std::size_t t = 0; t < net.arcs.size(); ++t) {
    for (const auto& a : net.arcs[t]) {
      os << "  n" << t << "_" << a.tail << " -> n" << t + 1 << "_" << a.head << " [label=\""
         << to_string(a.decision.payoff) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace warehouse
