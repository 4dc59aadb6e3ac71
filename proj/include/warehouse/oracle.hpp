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

// Brute-force reference optimum: dynamic programming over every integral
// stock value of every period, with every integral trade enumerated. Uses no
// part of the stock-level or network machinery. Meant for small instances.

#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "warehouse/model.hpp"

namespace warehouse {

namespace detail {

inline std::int64_t to_small_int(const Rational& r) {
  const BigInt n = numerator_of(r);
  if (n < -(BigInt(1) << 40) || n > (BigInt(1) << 40)) {
    throw Error(ErrorCode::kInvalidArgument, "value too large for the oracle");
  }
  return n.convert_to<std::int64_t>();
}

struct OracleMove {
  std::int64_t x = 0, y = 0;
  int w = 0, z = 0;
  std::int64_t next = 0;
};

}  // namespace detail

inline Solution oracle_solve(const Instance& inst) {
  try {
    validate_instance(inst);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidInstance, e.what(), e.period());
  }
  bool integral = is_integer(inst.s0);
  for (const auto* v : {&inst.Ls, &inst.Us, &inst.Lx, &inst.Ux, &inst.Ly, &inst.Uy}) {
    integral = integral && all_integers(*v);
  }
  if (!integral) throw Error(ErrorCode::kNonIntegralData, "oracle needs integral stock and trade data");

  using detail::to_small_int;
  const auto T = static_cast<std::size_t>(inst.T);
  // states[k]: stock values available at the end of period k (k = 0 is s0)
  std::vector<std::int64_t> lo(T + 1), hi(T + 1);
  lo[0] = hi[0] = to_small_int(inst.s0);
  for (std::size_t i = 0; i < T; ++i) {
    lo[i + 1] = to_small_int(inst.Ls[i]);
    hi[i + 1] = to_small_int(inst.Us[i]);
  }
  auto width = [&](std::size_t k) { return static_cast<std::size_t>(hi[k] - lo[k] + 1); };

  std::vector<std::vector<std::optional<Rational>>> value(T + 1);
  std::vector<std::vector<detail::OracleMove>> move(T + 1);
  for (std::size_t k = 0; k <= T; ++k) {
    value[k].assign(width(k), std::nullopt);
    move[k].assign(width(k), {});
  }
  for (auto& v : value[T]) v = Rational(0);

  const bool complementarity = has_complementarity(inst.variant);
  for (std::size_t k = T; k-- > 0;) {
    const int t = static_cast<int>(k + 1);
    const std::int64_t Lx = to_small_int(inst.Lx[k]), Ux = to_small_int(inst.Ux[k]);
    const std::int64_t Ly = to_small_int(inst.Ly[k]), Uy = to_small_int(inst.Uy[k]);
    for (std::size_t a = 0; a < width(k); ++a) {
      const std::int64_t prev = lo[k] + static_cast<std::int64_t>(a);
      std::optional<Rational> best;
      detail::OracleMove best_move;
      Rational best_step;
      for (int w = 0; w <= 1; ++w) {
        for (std::int64_t x = Lx * w; x <= Ux * w; ++x) {
          for (int z = 0; z <= 1; ++z) {
            for (std::int64_t y = Ly * z; y <= Uy * z; ++y) {
              if (complementarity ? (x != 0 && y != 0) : (y > prev)) continue;
              const std::int64_t next = prev - y + x;
              if (next < lo[k + 1] || next > hi[k + 1]) continue;
              const auto& to_go = value[k + 1][static_cast<std::size_t>(next - lo[k + 1])];
              if (!to_go) continue;
              Rational step = evaluate_payoff(inst, t, Rational(x), Rational(y), Rational(next), w, z);
              Rational total = step + *to_go;
              bool take = !best || total > *best;
              if (!take && total == *best) {
                // smaller next stock first, then the better step, then x, w, z
                if (next != best_move.next) {
                  take = next < best_move.next;
                } else if (step != best_step) {
                  take = step > best_step;
                } else {
                  take = std::tie(x, w, z) < std::tie(best_move.x, best_move.w, best_move.z);
                }
              }
              if (take) {
                best = std::move(total);
                best_step = std::move(step);
                best_move = {x, y, w, z, next};
              }
            }
          }
        }
      }
      value[k][a] = std::move(best);
      move[k][a] = best_move;
    }
  }

  if (!value[0][0]) throw Error(ErrorCode::kInfeasible, "no feasible integral trajectory");
  Solution sol;
  std::size_t node = 0;
  for (std::size_t k = 0; k < T; ++k) {
    const auto& m = move[k][node];
    sol.x.emplace_back(m.x);
    sol.y.emplace_back(m.y);
    sol.s.emplace_back(m.next);
    sol.w.push_back(m.w);
    sol.z.push_back(m.z);
    node = static_cast<std::size_t>(m.next - lo[k + 1]);
  }
  sol.objective = *value[0][0];
  return sol;
}

}  // namespace warehouse
