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


// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every sample size, seed and limit is fixed below.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "test_util.hpp"

namespace {

using namespace warehouse;

// Pinned parameters.
constexpr int kOracleInstancesPerVariant = 120;  // criterion 1: >= 200 total
constexpr double kOracleTimeLimitSeconds = 60.0;
constexpr int kPartitionSamples = 120;           // criterion 2: >= 100
constexpr int kFptasInstances = 60;              // criterion 3: >= 50
constexpr int kFlowReductionTrials = 1000;       // criterion 5
constexpr int kTimeIndependentInstances = 40;    // criterion 6, quartic bound
constexpr int kLotSizingFeasibleTarget = 60;     // criterion 8: >= 50
constexpr std::uint64_t kLotSizingSeedLimit = 5000;
constexpr int kExtformSizeFactor = 20;           // criterion 7

struct Outcome {
  bool pass = true;
  std::string detail;
  int failures = 0;
  std::string first_failure;

  void fail(const std::string& why) {
    pass = false;
    if (failures++ == 0) first_failure = why;
  }
};

// Instances shared by criteria 1-3 for the size checks of criterion 6.
std::vector<Instance> g_checked_instances;
// Criterion 1 solves, reused by criterion 7.
std::vector<std::pair<Instance, SolveResult>> g_solved;

Outcome criterion_oracle() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  int compared = 0, infeasible = 0;
  for (Variant v : {Variant::kWP1, Variant::kWP2}) {
    for (int k = 0; k < kOracleInstancesPerVariant; ++k) {
      const auto seed = static_cast<std::uint64_t>(1000 + k);
      const int T = 2 + k % 4;
      const std::int64_t max_bound = 1 + k % 8;
      const Instance inst = gen_random(seed, T, v, max_bound);
      g_checked_instances.push_back(inst);
      std::optional<SolveResult> exact;
      std::optional<Solution> brute;
      try {
        exact = solve_detailed(inst);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kInfeasible) o.fail("solver error " + std::string(e.what()));
      }
      try {
        brute = oracle_solve(inst);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kInfeasible) o.fail("oracle error " + std::string(e.what()));
      }
      ++compared;
      const std::string tag = std::string(variant_name(v)) + " seed " + std::to_string(seed);
      if (exact.has_value() != brute.has_value()) {
        o.fail("feasibility disagrees on " + tag);
        continue;
      }
      if (!exact) {
        ++infeasible;
        continue;
      }
      if (exact->solution.objective != brute->objective) {
        o.fail("objective " + to_string(exact->solution.objective) + " vs oracle " +
               to_string(brute->objective) + " on " + tag);
      }
      if (!check_solution(inst, exact->solution).feasible) o.fail("solver plan infeasible on " + tag);
      if (!check_solution(inst, *brute).feasible) o.fail("oracle plan infeasible on " + tag);
      g_solved.emplace_back(inst, std::move(*exact));
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= kOracleTimeLimitSeconds) o.fail("runtime " + std::to_string(seconds) + " s");
  std::ostringstream d;
  d << compared << " instances (" << infeasible << " infeasible in both), " << o.failures << " mismatches, "
    << std::fixed << std::setprecision(2) << seconds << " s";
  o.detail = d.str();
  return o;
}

Outcome criterion_partition() {
  Outcome o;
  std::mt19937_64 rng(20260101);
  int yes = 0;
  for (int k = 0; k < kPartitionSamples; ++k) {
    const std::size_t n = 1 + rng() % 8;
    std::vector<std::int64_t> a(n);
    for (auto& v : a) v = 1 + static_cast<std::int64_t>(rng() % 12);
    const PartitionReduction r = reduce_partition(a);
    g_checked_instances.push_back(r.instance);
    const Rational best = solve(r.instance).objective;
    const bool balanced = testing::has_balanced_split(a);
    yes += balanced ? 1 : 0;
    if (balanced ? best != r.target : best >= r.target) {
      o.fail("optimum " + to_string(best) + " vs target " + to_string(r.target));
    }
  }
  o.detail = std::to_string(kPartitionSamples) + " multisets (" + std::to_string(yes) + " balanced), " +
             std::to_string(o.failures) + " mismatches";
  return o;
}

Outcome criterion_fptas() {
  Outcome o;
  const Rational epsilons[] = {Rational(1, 2), Rational(1, 4), Rational(1, 10)};
  Rational worst_ratio = 1;
  for (int k = 0; k < kFptasInstances; ++k) {
    const auto seed = static_cast<std::uint64_t>(3000 + k);
    Instance inst = gen_random(seed, 2 + k % 3, Variant::kWP3, 12);
    for (auto* v : {&inst.Ux, &inst.Uy}) {
      for (auto& u : *v) u = Rational(4 + numerator_of(u) % 9);  // trade bounds in [4, 12]
    }
    // payoff linear in the trades: no holding cost
    inst.holding.assign(inst.holding.size(), Rational(0));
    g_checked_instances.push_back(inst);
    const Rational opt = oracle_solve(inst).objective;
    for (const Rational& eps : epsilons) {
      const Solution approx = fptas_solve(inst, eps);
      if (!check_solution(inst, approx).feasible) o.fail("infeasible output, seed " + std::to_string(seed));
      if (approx.objective < (1 - eps) * opt) {
        o.fail("ratio below 1-eps, seed " + std::to_string(seed) + " eps " + to_string(eps));
      }
      if (opt > 0) worst_ratio = std::min(worst_ratio, Rational(approx.objective / opt));
    }
  }
  o.detail = std::to_string(kFptasInstances) + " instances x 3 epsilons, " + std::to_string(o.failures) +
             " failures, worst ratio " + to_string(worst_ratio);
  return o;
}

Outcome criterion_balanced_flow() {
  Outcome o;
  Instance inst = Instance::zeros(4, Variant::kWP3);
  inst.s0 = 3;
  inst.Us = testing::rv({10, 10, 10, 10});
  inst.Ux = testing::rv({5, 5, 5, 5});
  inst.Uy = testing::rv({5, 5, 5, 5});
  const Solution sol = testing::make_solution(testing::rv({3, 0, 0, 2}), testing::rv({0, 2, 3, 0}), inst);
  const BalancedFlow flow = balanced_flow_decompose(inst, sol);
  const std::vector<FlowPair> expected = {{1, 2, 2}, {1, 3, 1}, {4, 3, 2}};
  std::ostringstream d;
  for (const auto& p : flow.pairs) {
    d << (d.tellp() > 0 ? " " : "") << "f" << p.purchase_period << p.sale_period << "=" << to_string(p.amount);
  }
  if (flow.pairs != expected) o.fail("unexpected pairs");
  o.detail = d.str();
  return o;
}

Outcome criterion_flow_reduction() {
  Outcome o;
  std::mt19937_64 rng(777);
  int trials = 0;
  for (std::uint64_t seed = 5000; trials < kFlowReductionTrials; ++seed) {
    const Instance inst = normalize_terminal(gen_random(seed, 2 + static_cast<int>(seed % 4), Variant::kWP3, 10));
    const auto plan = testing::random_terminal_plan(inst, rng);
    if (!plan) continue;
    const BalancedFlow flow = balanced_flow_decompose(inst, *plan);
    if (flow.pairs.empty()) continue;
    const std::size_t index = rng() % flow.pairs.size();
    const Rational delta = flow.pairs[index].amount * Rational(static_cast<std::int64_t>(rng() % 9), 8);
    const Solution reduced = reduce_flow(inst, *plan, flow, index, delta);
    if (!check_solution(inst, reduced).feasible) o.fail("seed " + std::to_string(seed));
    ++trials;
  }
  o.detail = std::to_string(trials) + " trials, " + std::to_string(o.failures) + " infeasible outputs";
  return o;
}

std::uint64_t quartic(int T) {
  const std::uint64_t n = static_cast<std::uint64_t>(T) + 1;
  return (3 * n * n * n * n + 3) / 4;
}

Outcome criterion_size_bounds() {
  Outcome o;
  int checked = 0;
  auto check_network = [&](const Instance& inst) {
    SolveResult r;
    try {
      r = solve_detailed(inst);
    } catch (const Error&) {
      return;
    }
    const auto periods = static_cast<std::size_t>(r.network.periods());
    const std::size_t S = r.levels.S_size;
    if (r.network.node_count() > periods * S + 1) o.fail("node count above T*S+1");
    if (r.network.arc_count() > periods * S * S) o.fail("arc count above T*S^2");
  };
  for (const Instance& inst : g_checked_instances) {
    ++checked;
    const StockLevels levels = gen_stock_levels(inst);
    Rational span = 0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(inst.T); ++i) span = std::max(span, Rational(inst.Us[i] - inst.Ls[i]));
    for (const auto& l : levels.levels) {
      if (Rational(static_cast<std::int64_t>(l.size())) > span + 1) o.fail("|S_t| above span + 1");
    }
    check_network(inst);
  }
  for (int k = 0; k < kTimeIndependentInstances; ++k) {
    const int T = 1 + k % 8;
    const Variant v = k % 2 ? Variant::kWP3 : Variant::kWP1;
    const Instance inst = gen_time_independent(static_cast<std::uint64_t>(7000 + k), T, v, 40);
    ++checked;
    if (gen_stock_levels(inst).S_size > quartic(T)) o.fail("S above quartic bound at T=" + std::to_string(T));
    check_network(inst);
  }
  o.detail = std::to_string(checked) + " instances, " + std::to_string(o.failures) + " violations";
  return o;
}

Outcome criterion_extended_formulation() {
  Outcome o;
  std::size_t max_vars = 0, max_rows = 0;
  for (const auto& [inst, r] : g_solved) {
    const Instance& net_inst = r.network_instance(inst);
    const LPModel model = build_extended_formulation(net_inst, r.network);
    const LPPoint point = lift_point(model, net_inst, r.network, r.network_solution);
    const FeasibilityReport report = check_point(model, point);
    if (!report.feasible) o.fail("violated rows after lifting");
    if (evaluate_objective(model, point) != r.solution.objective) o.fail("lifted objective differs");
    const auto periods = static_cast<std::size_t>(r.network.periods());
    const std::size_t S = r.levels.S_size;
    const std::size_t cap = kExtformSizeFactor * periods * S * S;
    if (model.variables.size() > cap || model.rows.size() > cap) o.fail("model above 20*T*S^2");
    max_vars = std::max(max_vars, model.variables.size());
    max_rows = std::max(max_rows, model.rows.size());
  }
  o.detail = std::to_string(g_solved.size()) + " lifted solutions, " + std::to_string(o.failures) +
             " failures, largest model " + std::to_string(max_vars) + " vars / " + std::to_string(max_rows) +
             " rows";
  return o;
}

Outcome criterion_lotsizing() {
  Outcome o;
  int feasible = 0, infeasible = 0;
  for (std::uint64_t seed = 9000; feasible < kLotSizingFeasibleTarget && seed < 9000 + kLotSizingSeedLimit; ++seed) {
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
      ++infeasible;
      if (sol.objective >= r.M * demand) o.fail("infeasible lot-sizing not flagged, seed " + std::to_string(seed));
      continue;
    }
    ++feasible;
    // the lot-sizing optimum as a (nonpositive) profit is -cost
    if (sol.objective != r.M * demand - *opt) o.fail("WP2 optimum mismatch, seed " + std::to_string(seed));
    if (extract_lotsizing_plan(ls, sol).cost != *opt) o.fail("extracted plan cost, seed " + std::to_string(seed));
  }
  if (feasible < 50) o.fail("only " + std::to_string(feasible) + " feasible instances");
  o.detail = std::to_string(feasible) + " feasible instances matched, " + std::to_string(infeasible) +
             " infeasible flagged, " + std::to_string(o.failures) + " mismatches";
  return o;
}

std::string drop_last_column(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
  return out;
}

Outcome criterion_determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "warehouse_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir / "bench");
  auto p = [&](const std::string& name) { return (dir / name).string(); };

  write_text_file(p("i1.json"), serialize(testing::make_i1()));
  write_text_file(p("i5.json"), serialize(testing::make_i5()));
  write_text_file(p("wp2.json"), serialize(gen_random(12, 4, Variant::kWP2, 6)));
  write_text_file(p("ls.json"), serialize(gen_lotsizing(9001, 3, 4)));
  for (int k = 0; k < 6; ++k) {
    write_text_file((dir / "bench" / ("g" + std::to_string(k) + ".json")).string(),
                    serialize(gen_time_independent(static_cast<std::uint64_t>(k), 2 + k, Variant::kWP1, 8)));
  }
  std::ostringstream sink;
  cli::run({"solve", "--input", p("i1.json"), "--output", p("sol.json")}, sink, sink);

  struct Command {
    std::vector<std::string> args;
    std::string result_file;  // empty: compare standard output
    bool bench = false;
  };
  const std::vector<Command> commands = {
      {{"solve", "--input", p("wp2.json"), "--output", p("out.json"), "--dot", p("out.dot")}, p("out.json")},
      {{"oracle", "--input", p("wp2.json"), "--output", p("out.json")}, p("out.json")},
      {{"fptas", "--input", p("i5.json"), "--epsilon", "1/4", "--output", p("out.json")}, p("out.json")},
      {{"emit-lp", "--input", p("wp2.json"), "--output", p("out.lp")}, p("out.lp")},
      {{"check", "--input", p("i1.json"), "--solution", p("sol.json"), "--output", p("out.json")}, p("out.json")},
      {{"levels", "--input", p("wp2.json")}, ""},
      {{"gen", "--seed", "5", "--T", "6", "--variant", "wp2", "--output", p("out.json")}, p("out.json")},
      {{"reduce", "partition", "--numbers", "3,1,4,1,5", "--output", p("out.json")}, p("out.json")},
      {{"reduce", "lotsizing", "--input", p("ls.json"), "--output", p("out.json")}, p("out.json")},
      {{"bench", "--dir", (dir / "bench").string(), "--jobs", "3", "--output", p("out.csv")}, p("out.csv"), true},
  };
  for (const auto& c : commands) {
    std::string results[2];
    for (auto& result : results) {
      std::ostringstream out, err;
      const int code = cli::run(c.args, out, err);
      if (code != 0) o.fail(c.args[0] + " exited " + std::to_string(code) + ": " + err.str());
      result = out.str() + "\n--\n" + (c.result_file.empty() ? "" : read_text_file(c.result_file));
      if (c.bench) result = drop_last_column(result);
      if (!c.result_file.empty()) fs::remove(c.result_file);
    }
    if (results[0] != results[1]) o.fail(c.args[0] + " output differs between runs");
  }
  fs::remove_all(dir);
  o.detail = std::to_string(commands.size()) + " subcommands run twice, " + std::to_string(o.failures) +
             " differences";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle equivalence", criterion_oracle},
      {"partition iff 3A/2", criterion_partition},
      {"fptas guarantee", criterion_fptas},
      {"balanced-flow example", criterion_balanced_flow},
      {"flow reduction keeps feasibility", criterion_flow_reduction},
      {"size bounds", criterion_size_bounds},
      {"extended formulation lift", criterion_extended_formulation},
      {"lot-sizing reduction", criterion_lotsizing},
      {"determinism", criterion_determinism},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: " << (o.pass ? "PASS" : "FAIL") << " ("
              << o.detail << ")";
    if (!o.pass) std::cout << "; first failure: " << o.first_failure;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
