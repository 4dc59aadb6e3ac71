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

// Instance factories: seeded random instances, and the partition and
// lot-sizing reductions whose optima are known in advance.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "warehouse/model.hpp"

namespace warehouse {

namespace detail {

// Uniform integer in [lo, hi]. Written out instead of using
// uniform_int_distribution so that output is identical across standard
// libraries.
inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

inline void draw_pair(std::mt19937_64& rng, std::int64_t max_bound, Rational& lo, Rational& hi) {
  std::int64_t a = draw(rng, 0, max_bound);
  std::int64_t b = draw(rng, 0, max_bound);
  if (a > b) std::swap(a, b);
  lo = a;
  hi = b;
}

inline void check_gen_args(int T, std::int64_t max_bound) {
  if (T < 1) throw Error(ErrorCode::kInvalidArgument, "T must be at least 1");
  if (max_bound < 0) throw Error(ErrorCode::kInvalidArgument, "max_bound must be nonnegative");
}

// WP3 shape: no trade lower bounds, no fixed costs, s0 inside every stock
// window (windows are widened to reach s0).
inline void impose_wp3_shape(Instance& inst) {
  for (std::size_t i = 0; i < static_cast<std::size_t>(inst.T); ++i) {
    inst.Lx[i] = 0;
    inst.Ly[i] = 0;
    inst.fixed_purchase[i] = 0;
    inst.fixed_sale[i] = 0;
    inst.Ls[i] = std::min(inst.Ls[i], inst.s0);
    inst.Us[i] = std::max(inst.Us[i], inst.s0);
  }
}

}  // namespace detail

inline Instance gen_random(std::uint64_t seed, int T, Variant variant, std::int64_t max_bound) {
  detail::check_gen_args(T, max_bound);
  std::mt19937_64 rng(seed);
  Instance inst = Instance::zeros(T, variant);
  inst.s0 = detail::draw(rng, 0, max_bound);
  for (std::size_t i = 0; i < static_cast<std::size_t>(T); ++i) {
    detail::draw_pair(rng, max_bound, inst.Ls[i], inst.Us[i]);
    detail::draw_pair(rng, max_bound, inst.Lx[i], inst.Ux[i]);
    detail::draw_pair(rng, max_bound, inst.Ly[i], inst.Uy[i]);
    inst.revenue[i] = detail::draw(rng, -max_bound, max_bound);
    inst.cost[i] = detail::draw(rng, -max_bound, max_bound);
    inst.holding[i] = detail::draw(rng, -max_bound, max_bound);
    inst.fixed_purchase[i] = detail::draw(rng, 0, max_bound);
    inst.fixed_sale[i] = detail::draw(rng, 0, max_bound);
  }
  if (variant == Variant::kWP3) detail::impose_wp3_shape(inst);
  return inst;
}

// Same bounds in every period; prices still vary per period.
inline Instance gen_time_independent(std::uint64_t seed, int T, Variant variant, std::int64_t max_bound) {
  detail::check_gen_args(T, max_bound);
  std::mt19937_64 rng(seed);
  Instance inst = Instance::zeros(T, variant);
  inst.s0 = detail::draw(rng, 0, max_bound);
  Rational Ls, Us, Lx, Ux, Ly, Uy;
  detail::draw_pair(rng, max_bound, Ls, Us);
  detail::draw_pair(rng, max_bound, Lx, Ux);
  detail::draw_pair(rng, max_bound, Ly, Uy);
  const Rational fx = detail::draw(rng, 0, max_bound);
  const Rational fy = detail::draw(rng, 0, max_bound);
  for (std::size_t i = 0; i < static_cast<std::size_t>(T); ++i) {
    inst.Ls[i] = Ls;
    inst.Us[i] = Us;
    inst.Lx[i] = Lx;
    inst.Ux[i] = Ux;
    inst.Ly[i] = Ly;
    inst.Uy[i] = Uy;
    inst.fixed_purchase[i] = fx;
    inst.fixed_sale[i] = fy;
    inst.revenue[i] = detail::draw(rng, -max_bound, max_bound);
    inst.cost[i] = detail::draw(rng, -max_bound, max_bound);
    inst.holding[i] = detail::draw(rng, 0, max_bound);
  }
  if (variant == Variant::kWP3) detail::impose_wp3_shape(inst);
  return inst;
}

struct PartitionReduction {
  Instance instance;
  Rational target;  // 3A/2
};

// Sell up to a_t per period starting from stock A, optionally buying it back;
// the last period may sell everything. Reaching 3A/2 needs a half-sum subset.
inline PartitionReduction reduce_partition(const std::vector<std::int64_t>& a) {
  if (a.empty()) throw Error(ErrorCode::kEmptyInput, "no numbers to partition");
  Rational A = 0;
  for (auto v : a) {
    if (v < 1) throw Error(ErrorCode::kInvalidArgument, "entries must be positive");
    A += v;
  }
  const int n = static_cast<int>(a.size());
  PartitionReduction r{Instance::zeros(n + 1, Variant::kWP3), A * 3 / 2};
  Instance& inst = r.instance;
  inst.s0 = A;
  for (std::size_t i = 0; i <= a.size(); ++i) {
    inst.Us[i] = 2 * A;
    inst.revenue[i] = 1;
    if (i < a.size()) {
      inst.Ux[i] = a[i];
      inst.Uy[i] = a[i];
    } else {
      inst.Ux[i] = 0;
      inst.Uy[i] = A;
    }
  }
  return r;
}

struct LotSizingInstance {
  int T = 0;
  Rational s0;
  std::vector<Rational> d, c, f, Ubar_x, Ubar_s;
};

struct LotSizingPlan {
  std::vector<Rational> x, s;
  std::vector<int> w;
  Rational cost;
};

inline void validate_lotsizing(const LotSizingInstance& ls) {
  if (ls.T < 1) throw Error(ErrorCode::kWrongVectorLength, "T must be at least 1");
  for (const auto* v : {&ls.d, &ls.c, &ls.f, &ls.Ubar_x, &ls.Ubar_s}) {
    if (v->size() != static_cast<std::size_t>(ls.T)) {
      throw Error(ErrorCode::kWrongVectorLength, "lot-sizing vector length differs from T");
    }
  }
  if (ls.s0 < 0) throw Error(ErrorCode::kNegativeBound, "s0 is negative");
  for (std::size_t i = 0; i < static_cast<std::size_t>(ls.T); ++i) {
    for (const auto* v : {&ls.d, &ls.c, &ls.f, &ls.Ubar_x, &ls.Ubar_s}) {
      if ((*v)[i] < 0) throw Error(ErrorCode::kNegativeBound, "negative lot-sizing entry", static_cast<int>(i + 1));
    }
  }
}

struct LotSizingReduction {
  Instance instance;
  Rational M;  // per-unit sale price; dominates any purchase plan's cost
};

inline LotSizingReduction reduce_lotsizing(const LotSizingInstance& ls) {
  validate_lotsizing(ls);
  bool integral = is_integer(ls.s0);
  for (const auto* v : {&ls.d, &ls.c, &ls.f, &ls.Ubar_x, &ls.Ubar_s}) integral = integral && all_integers(*v);
  if (!integral) throw Error(ErrorCode::kNonIntegralData, "lot-sizing reduction needs integral data");

  LotSizingReduction r{Instance::zeros(ls.T, Variant::kWP2), Rational(1)};
  for (std::size_t i = 0; i < static_cast<std::size_t>(ls.T); ++i) r.M += ls.c[i] * ls.Ubar_x[i] + ls.f[i];
  Instance& inst = r.instance;
  inst.s0 = ls.s0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(ls.T); ++i) {
    inst.revenue[i] = r.M;
    inst.cost[i] = ls.c[i];
    inst.fixed_purchase[i] = ls.f[i];
    inst.Uy[i] = ls.d[i];
    inst.Ux[i] = ls.Ubar_x[i];
    inst.Us[i] = ls.Ubar_s[i];
  }
  return r;
}

inline Rational lotsizing_cost(const LotSizingInstance& ls, const std::vector<Rational>& x, const std::vector<int>& w) {
  Rational total = 0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(ls.T); ++i) total += ls.c[i] * x[i] + ls.f[i] * w[i];
  return total;
}

// The (x, s, w) part of a warehouse plan for the reduced instance.
inline LotSizingPlan extract_lotsizing_plan(const LotSizingInstance& ls, const Solution& sol) {
  LotSizingPlan plan{sol.x, sol.s, sol.w, Rational(0)};
  plan.cost = lotsizing_cost(ls, plan.x, plan.w);
  return plan;
}

// Exhaustive lot-sizing optimum (minimum cost) over integral plans; nullopt
// when demand cannot be met. Each period's demand is served from the stock
// carried into it. Small instances only.
inline std::optional<Rational> lotsizing_brute_force(const LotSizingInstance& ls) {
  validate_lotsizing(ls);
  const auto T = static_cast<std::size_t>(ls.T);
  std::optional<Rational> best;
  std::vector<Rational> x(T);
  std::vector<int> w(T);
  // depth-first over periods; stock follows from x
  auto rec = [&](auto&& self, std::size_t i, const Rational& stock) -> void {
    if (i == T) {
      const Rational cost = lotsizing_cost(ls, x, w);
      if (!best || cost < *best) best = cost;
      return;
    }
    if (stock < ls.d[i]) return;
    for (int wi = 0; wi <= 1; ++wi) {
      const BigInt top = wi ? floor_of(ls.Ubar_x[i]) : BigInt(0);
      for (BigInt q = wi; q <= top; ++q) {
        const Rational next = stock - ls.d[i] + Rational(q);
        if (next < 0 || next > ls.Ubar_s[i]) continue;
        x[i] = Rational(q);
        w[i] = wi;
        self(self, i + 1, next);
      }
    }
  };
  rec(rec, 0, ls.s0);
  return best;
}

inline LotSizingInstance gen_lotsizing(std::uint64_t seed, int T, std::int64_t max_bound) {
  detail::check_gen_args(T, max_bound);
  std::mt19937_64 rng(seed);
  LotSizingInstance ls;
  ls.T = T;
  ls.s0 = detail::draw(rng, 0, max_bound);
  for (int t = 0; t < T; ++t) {
    ls.d.emplace_back(detail::draw(rng, 0, max_bound));
    ls.c.emplace_back(detail::draw(rng, 0, max_bound));
    ls.f.emplace_back(detail::draw(rng, 0, max_bound));
    ls.Ubar_x.emplace_back(detail::draw(rng, 0, max_bound));
    ls.Ubar_s.emplace_back(detail::draw(rng, 0, max_bound));
  }
  return ls;
}

}  // namespace warehouse
