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


#include "warehouse/generators.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace warehouse {
namespace {

using testing::has_balanced_split;
using testing::rv;

TEST(GenRandomTest, Deterministic) {
  for (Variant v : {Variant::kWP1, Variant::kWP2, Variant::kWP3}) {
    EXPECT_EQ(serialize(gen_random(17, 5, v, 9)), serialize(gen_random(17, 5, v, 9)));
  }
  EXPECT_NE(serialize(gen_random(1, 5, Variant::kWP1, 9)), serialize(gen_random(2, 5, Variant::kWP1, 9)));
}

TEST(GenRandomTest, ZeroBoundGivesZeroInstance) {
  EXPECT_EQ(gen_random(5, 3, Variant::kWP2, 0), Instance::zeros(3, Variant::kWP2));
}

TEST(GenRandomTest, AlwaysValid) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    for (Variant v : {Variant::kWP1, Variant::kWP2, Variant::kWP3}) {
      EXPECT_NO_THROW(validate_instance(gen_random(seed, 1 + static_cast<int>(seed % 6), v, 10))) << seed;
    }
    EXPECT_NO_THROW(validate_instance(gen_time_independent(seed, 4, Variant::kWP3, 10))) << seed;
  }
}

TEST(GenRandomTest, BadArguments) {
  EXPECT_THROW(gen_random(0, 0, Variant::kWP1, 3), Error);
  EXPECT_THROW(gen_random(0, 2, Variant::kWP1, -1), Error);
}

TEST(PartitionTest, Parameters) {
  const PartitionReduction r = reduce_partition({1, 2, 3});
  const Instance& inst = r.instance;
  EXPECT_EQ(inst.variant, Variant::kWP3);
  EXPECT_EQ(inst.T, 4);
  EXPECT_EQ(inst.s0, 6);
  EXPECT_EQ(inst.Us, rv({12, 12, 12, 12}));
  EXPECT_EQ(inst.Uy, rv({1, 2, 3, 6}));
  EXPECT_EQ(inst.Ux, rv({1, 2, 3, 0}));
  EXPECT_EQ(inst.revenue, rv({1, 1, 1, 1}));
  EXPECT_EQ(r.target, 9);
}

TEST(PartitionTest, Examples) {
  EXPECT_EQ(solve(reduce_partition({1, 2, 3}).instance).objective, 9);
  EXPECT_LT(solve(reduce_partition({1, 1, 3}).instance).objective, Rational(15, 2));
  EXPECT_LT(solve(reduce_partition({2}).instance).objective, 3);
}

TEST(PartitionTest, Errors) {
  try {
    reduce_partition({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
  }
  EXPECT_THROW(reduce_partition({1, 0}), Error);
}

TEST(PartitionTest, TargetIffBalancedSplit) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    std::vector<std::int64_t> a(n);
    for (auto& v : a) v = 1 + static_cast<std::int64_t>(rng() % 12);
    const PartitionReduction r = reduce_partition(a);
    const Rational best = solve(r.instance).objective;
    if (has_balanced_split(a)) {
      EXPECT_EQ(best, r.target);
    } else {
      EXPECT_LT(best, r.target);
    }
  }
}

// a_i -> a_i + A on a 2n-entry multiset keeps the entries within a factor 2
// of each other and maps balanced splits to balanced splits of n entries each.
TEST(PartitionTest, RatioLift) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<std::int64_t> a(2 * n);
    std::int64_t A = 0;
    for (auto& v : a) {
      v = 1 + static_cast<std::int64_t>(rng() % 12);
      A += v;
    }
    std::vector<std::int64_t> lifted;
    for (auto v : a) lifted.push_back(v + A);
    const auto [lo, hi] = std::minmax_element(lifted.begin(), lifted.end());
    EXPECT_LE(*hi, 2 * *lo);
    // balanced split of the original using exactly n entries
    bool equal_size_split = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (2 * n)); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != n) continue;
      std::int64_t sum = 0;
      for (std::size_t i = 0; i < 2 * n; ++i) {
        if (mask >> i & 1) sum += lifted[i];
      }
      if (2 * sum == static_cast<std::int64_t>(n) * A * 2 + A) equal_size_split = true;
    }
    std::int64_t lifted_total = 0;
    for (auto v : lifted) lifted_total += v;
    EXPECT_EQ(lifted_total, 2 * (static_cast<std::int64_t>(n) * A) + A);
    EXPECT_EQ(has_balanced_split(lifted), equal_size_split);
  }
}

LotSizingInstance example_lotsizing() {
  return {2, 1, rv({1, 1}), rv({1, 1}), rv({3, 3}), rv({2, 2}), rv({2, 2})};
}

TEST(LotSizingTest, Example) {
  const LotSizingInstance ls = example_lotsizing();
  const LotSizingReduction r = reduce_lotsizing(ls);
  EXPECT_EQ(r.M, 11);
  EXPECT_EQ(r.instance.variant, Variant::kWP2);
  EXPECT_EQ(r.instance.Uy, ls.d);
  EXPECT_EQ(r.instance.Us, ls.Ubar_s);
  EXPECT_EQ(r.instance.Ls, rv({0, 0}));
  const Solution sol = solve(r.instance);
  EXPECT_EQ(sol.objective, 18);
  const LotSizingPlan plan = extract_lotsizing_plan(ls, sol);
  EXPECT_EQ(plan.cost, 4);
  EXPECT_EQ(plan.x, rv({1, 0}));
  EXPECT_EQ(lotsizing_brute_force(ls), Rational(4));
}

TEST(LotSizingTest, ZeroDemand) {
  LotSizingInstance ls = example_lotsizing();
  ls.d = rv({0, 0});
  const Solution sol = solve(reduce_lotsizing(ls).instance);
  EXPECT_EQ(sol.objective, 0);
  EXPECT_EQ(sol.x, rv({0, 0}));
}

TEST(LotSizingTest, UnmetFirstDemand) {
  LotSizingInstance ls = example_lotsizing();
  ls.s0 = 0;
  const LotSizingReduction r = reduce_lotsizing(ls);
  EXPECT_FALSE(lotsizing_brute_force(ls).has_value());
  EXPECT_LT(solve(r.instance).objective, r.M * 2);
}

TEST(LotSizingTest, RejectsFractions) {
  LotSizingInstance ls = example_lotsizing();
  ls.c[0] = Rational(1, 2);
  try {
    reduce_lotsizing(ls);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonIntegralData);
  }
}

TEST(LotSizingTest, ExtractionIsOptimal) {
  int feasible = 0, infeasible = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const LotSizingInstance ls = gen_lotsizing(seed, 1 + static_cast<int>(seed % 4), 4);
    const LotSizingReduction r = reduce_lotsizing(ls);
    Rational demand = 0;
    for (const auto& d : ls.d) demand += d;
    const auto opt = lotsizing_brute_force(ls);
    // a reduced instance with no plan at all also flags lot-sizing infeasibility
    std::optional<Solution> found;
    try {
      found = solve(r.instance);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInfeasible) throw;
    }
    if (!found && opt) {
      throw Error(ErrorCode::kInfeasible, "reduced instance infeasible for a feasible lot-sizing instance");
    }
    if (!found) {
      ++infeasible;
      continue;
    }
    const Solution& sol = *found;
    if (!opt) {
      EXPECT_LT(sol.objective, r.M * demand) << seed;
      continue;
    }
    ++feasible;
    EXPECT_EQ(sol.objective, r.M * demand - *opt) << seed;
    EXPECT_EQ(sol.y, ls.d) << seed;
    EXPECT_EQ(extract_lotsizing_plan(ls, sol).cost, *opt) << seed;
  }
  EXPECT_GE(feasible, 50);
  EXPECT_GT(infeasible, 0);
}

}  // namespace
}  // namespace warehouse
