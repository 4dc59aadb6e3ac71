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

// Candidate stock levels per period.
//
// Every extreme point of the feasible region keeps, between two periods where
// the stock touches one of its bounds, at most one trade strictly inside its
// bounds. Stock values at extreme points are therefore reachable from an
// anchor (s0, or a stock bound of some period) by trading only at 0, the
// lower bound or the upper bound in every intermediate period, either forward
// from an earlier anchor or backward from a later one.
//
// The sets are built by layered expansion: the union over all forward anchors
// at period t equals one Minkowski step applied to the union at t - 1, so the
// cost is linear in T times the set sizes. Intermediate values are clipped to
// their period's stock window since they are themselves stock levels of the
// point being described.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "warehouse/model.hpp"

namespace warehouse {

struct StockLevels {
  // levels[t - 1] is the sorted, duplicate-free candidate set for period t.
  std::vector<std::vector<Rational>> levels;
  std::size_t S_size = 0;

  const std::vector<Rational>& at(int t) const { return levels[static_cast<std::size_t>(t - 1)]; }
};

// A WP2 instance rewritten on 2T periods: period 2t-1 only sells, period 2t
// only buys, with complementarity holding trivially.
struct DoubledInstance {
  Instance original;
  Instance instance;

  // x_t = x'_{2t}, y_t = y'_{2t-1}, s_t = s'_{2t}, w_t = w'_{2t}, z_t = z'_{2t-1}.
  Solution map_back(const Solution& doubled) const {
    Solution sol;
    for (int t = 1; t <= original.T; ++t) {
      const auto odd = static_cast<std::size_t>(2 * t - 2);
      const auto even = static_cast<std::size_t>(2 * t - 1);
      sol.x.push_back(doubled.x[even]);
      sol.y.push_back(doubled.y[odd]);
      sol.s.push_back(doubled.s[even]);
      sol.w.push_back(doubled.w[even]);
      sol.z.push_back(doubled.z[odd]);
    }
    sol.objective = compute_objective(original, sol);
    return sol;
  }

  // Inverse of map_back; the mid-period stock is s_{t-1} - y_t.
  Solution lift(const Solution& sol) const {
    Solution d;
    Rational prev = original.s0;
    for (int t = 1; t <= original.T; ++t) {
      const auto i = static_cast<std::size_t>(t - 1);
      d.x.push_back(Rational(0));
      d.y.push_back(sol.y[i]);
      d.s.push_back(prev - sol.y[i]);
      d.w.push_back(0);
      d.z.push_back(sol.z[i]);
      d.x.push_back(sol.x[i]);
      d.y.push_back(Rational(0));
      d.s.push_back(sol.s[i]);
      d.w.push_back(sol.w[i]);
      d.z.push_back(0);
      prev = sol.s[i];
    }
    d.objective = compute_objective(instance, d);
    return d;
  }
};

inline DoubledInstance double_horizon(const Instance& inst) {
  if (inst.variant != Variant::kWP2) {
    throw Error(ErrorCode::kWrongVariant, "horizon doubling applies to WP2 instances only");
  }
  DoubledInstance out;
  out.original = inst;
  Instance d = Instance::zeros(2 * inst.T, Variant::kWP1);
  d.s0 = inst.s0;
  for (int t = 1; t <= inst.T; ++t) {
    const auto i = static_cast<std::size_t>(t - 1);
    const auto odd = static_cast<std::size_t>(2 * t - 2);
    const auto even = static_cast<std::size_t>(2 * t - 1);
    d.Ls[odd] = 0;
    d.Us[odd] = inst.Us[i];
    d.Ly[odd] = inst.Ly[i];
    d.Uy[odd] = inst.Uy[i];
    d.revenue[odd] = inst.revenue[i];
    d.fixed_sale[odd] = inst.fixed_sale[i];

    d.Ls[even] = inst.Ls[i];
    d.Us[even] = inst.Us[i];
    d.Lx[even] = inst.Lx[i];
    d.Ux[even] = inst.Ux[i];
    d.cost[even] = inst.cost[i];
    d.holding[even] = inst.holding[i];
    d.fixed_purchase[even] = inst.fixed_purchase[i];
  }
  out.instance = std::move(d);
  return out;
}

namespace detail {

struct Window {
  Rational lo;
  Rational hi;
};

inline void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Net stock changes x - y allowed in period t when trading at a bound.
inline std::vector<Rational> period_moves(const Instance& inst, int t) {
  const auto i = static_cast<std::size_t>(t - 1);
  std::vector<Rational> m = {Rational(0), inst.Lx[i], inst.Ux[i], -inst.Ly[i], -inst.Uy[i]};
  sort_unique(m);
  return m;
}

inline std::vector<Window> stock_windows(const Instance& inst) {
  std::vector<Window> w;
  for (std::size_t i = 0; i < static_cast<std::size_t>(inst.T); ++i) w.push_back({inst.Ls[i], inst.Us[i]});
  return w;
}

// Expansion under complementarity semantics, with explicit clip windows.
// Anchors always come from the instance's own stock bounds.
inline std::vector<std::vector<Rational>> expand_levels(const Instance& inst,
                                                        const std::vector<Window>& windows) {
  const auto T = static_cast<std::size_t>(inst.T);
  std::vector<std::vector<Rational>> fwd(T), back(T);
  auto clip = [&](std::vector<Rational>& v, std::size_t i) {
    std::erase_if(v, [&](const Rational& r) { return r < windows[i].lo || r > windows[i].hi; });
    sort_unique(v);
  };

  std::vector<Rational> current = {inst.s0};
  for (std::size_t i = 0; i < T; ++i) {
    const auto moves = period_moves(inst, static_cast<int>(i + 1));
    std::vector<Rational> next;
    next.reserve(current.size() * moves.size() + 2);
    for (const auto& v : current) {
      for (const auto& m : moves) next.push_back(v + m);
    }
    next.push_back(inst.Ls[i]);
    next.push_back(inst.Us[i]);
    clip(next, i);
    fwd[i] = next;
    current = std::move(next);
  }

  // back[i] collects K' - (moves of periods i+2..t1) for anchors at t1 > i+1.
  for (std::size_t i = T; i-- > 1;) {
    std::vector<Rational> src = back[i];
    src.push_back(inst.Ls[i]);
    src.push_back(inst.Us[i]);
    const auto moves = period_moves(inst, static_cast<int>(i + 1));
    std::vector<Rational> prev;
    prev.reserve(src.size() * moves.size());
    for (const auto& v : src) {
      for (const auto& m : moves) prev.push_back(v - m);
    }
    clip(prev, i - 1);
    back[i - 1] = std::move(prev);
  }

  std::vector<std::vector<Rational>> out(T);
  for (std::size_t i = 0; i < T; ++i) {
    out[i].reserve(fwd[i].size() + back[i].size());
    std::merge(fwd[i].begin(), fwd[i].end(), back[i].begin(), back[i].end(),
               std::back_inserter(out[i]));
    out[i].erase(std::unique(out[i].begin(), out[i].end()), out[i].end());
  }
  return out;
}

inline StockLevels make_levels(std::vector<std::vector<Rational>> levels) {
  StockLevels sl;
  sl.levels = std::move(levels);
  for (const auto& l : sl.levels) sl.S_size = std::max(sl.S_size, l.size());
  return sl;
}

}  // namespace detail

// Levels of the 2T-period doubled form of a WP2 instance (every period).
inline StockLevels gen_doubled_stock_levels(const DoubledInstance& doubled) {
  const Instance& d = doubled.instance;
  return detail::make_levels(detail::expand_levels(d, detail::stock_windows(d)));
}

inline StockLevels gen_stock_levels(const Instance& inst) {
  if (inst.variant == Variant::kWP2) {
    const DoubledInstance doubled = double_horizon(inst);
    const StockLevels full = gen_doubled_stock_levels(doubled);
    std::vector<std::vector<Rational>> even;
    for (int t = 1; t <= inst.T; ++t) even.push_back(full.at(2 * t));
    return detail::make_levels(std::move(even));
  }
  return detail::make_levels(detail::expand_levels(inst, detail::stock_windows(inst)));
}

namespace detail {

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                           : a + b;
}

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

inline bool is_constant(const std::vector<Rational>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

// Per-period counting cap for the expansion: anchors times move products.
inline std::vector<std::uint64_t> generic_caps(const Instance& inst) {
  const auto T = static_cast<std::size_t>(inst.T);
  std::vector<std::uint64_t> moves(T), anchors(T);
  for (std::size_t i = 0; i < T; ++i) {
    moves[i] = period_moves(inst, static_cast<int>(i + 1)).size();
    anchors[i] = inst.Ls[i] == inst.Us[i] ? 1 : 2;
  }
  std::vector<std::uint64_t> caps(T, 0);
  for (std::size_t t = 0; t < T; ++t) {
    std::uint64_t total = 0;
    // forward from s0 and from anchors at periods <= t
    std::uint64_t prod = 1;
    for (std::size_t a = t + 1; a-- > 0;) {
      total = sat_add(total, sat_mul(anchors[a], prod));
      prod = sat_mul(prod, moves[a]);
    }
    total = sat_add(total, prod);
    // backward from anchors at periods > t
    prod = 1;
    for (std::size_t a = t + 1; a < T; ++a) {
      prod = sat_mul(prod, moves[a]);
      total = sat_add(total, sat_mul(anchors[a], prod));
    }
    caps[t] = total;
  }
  return caps;
}

}  // namespace detail

// A-priori cap on S_size: the smallest of the value-count bound (integral
// data) and the quartic bound (time-independent bounds, complementarity
// variants); otherwise a direct count of anchors times move combinations.
inline std::uint64_t bound_S(const Instance& inst) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  bool have = false;

  bool integral = is_integer(inst.s0);
  for (const auto* v : {&inst.Ls, &inst.Us, &inst.Lx, &inst.Ux, &inst.Ly, &inst.Uy}) {
    integral = integral && all_integers(*v);
  }
  if (integral) {
    Rational span = 0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(inst.T); ++i) {
      span = std::max(span, inst.Us[i] - inst.Ls[i]);
    }
    const BigInt count = numerator_of(span) + 1;
    best = count > BigInt(std::numeric_limits<std::uint64_t>::max())
               ? std::numeric_limits<std::uint64_t>::max()
               : count.convert_to<std::uint64_t>();
    have = true;
  }

  bool time_independent = inst.variant != Variant::kWP2;
  for (const auto* v : {&inst.Ls, &inst.Us, &inst.Lx, &inst.Ux, &inst.Ly, &inst.Uy}) {
    time_independent = time_independent && detail::is_constant(*v);
  }
  if (time_independent) {
    const BigInt n = inst.T + 1;
    const BigInt quartic = (3 * n * n * n * n + 3) / 4;  // ceil(3 n^4 / 4)
    const std::uint64_t q = quartic > BigInt(std::numeric_limits<std::uint64_t>::max())
                                ? std::numeric_limits<std::uint64_t>::max()
                                : quartic.convert_to<std::uint64_t>();
    best = std::min(best, q);
    have = true;
  }
  if (have) return best;

  std::vector<std::uint64_t> caps;
  if (inst.variant == Variant::kWP2) {
    const auto all = detail::generic_caps(double_horizon(inst).instance);
    for (std::size_t i = 1; i < all.size(); i += 2) caps.push_back(all[i]);
  } else {
    caps = detail::generic_caps(inst);
  }
  return caps.empty() ? 0 : *std::max_element(caps.begin(), caps.end());
}

}  // namespace warehouse
