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

// Command-line frontend. Exit codes: 0 success, 1 infeasible, 2 invalid
// input or arguments. Results go to `out` (or --output files), diagnostics to
// `err`.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "warehouse/warehouse.hpp"

namespace warehouse::cli {

enum ExitCode { kOk = 0, kInfeasibleExit = 1, kInvalidExit = 2 };

namespace detail {

inline Instance load_instance(const std::string& path) { return parse_instance(read_text_file(path)); }

// Writes to `path`, or to `out` when no path was given.
inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

struct BenchRow {
  std::string name;
  std::string fields;  // every column except the trailing wall time
  double wall_ms = 0;
};

inline BenchRow bench_one(const std::filesystem::path& file) {
  BenchRow row;
  row.name = file.filename().string();
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream f;
  try {
    const Instance inst = parse_instance(read_text_file(file.string()));
    const SolveResult r = solve_detailed(inst);
    f << inst.T << "," << r.levels.S_size << "," << r.network.node_count() << "," << r.network.arc_count()
      << "," << to_string(r.solution.objective);
  } catch (const Error& e) {
    f << ",,,," << error_code_name(e.code());
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  row.fields = f.str();
  return row;
}

inline std::string run_bench(const std::string& dir, int jobs) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<BenchRow> rows(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) rows[i] = bench_one(files[i]);
  };
  std::vector<std::thread> pool;
  for (int k = 1; k < std::max(1, jobs); ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) { return a.name < b.name; });

  std::ostringstream csv;
  csv << "instance,T,S_size,nodes,arcs,objective,wall_ms\n";
  for (const auto& r : rows) {
    csv << r.name << "," << r.fields << "," << std::fixed << std::setprecision(3) << r.wall_ms << "\n";
  }
  return csv.str();
}

inline std::string objective_line(const Rational& v) { return "objective: " + to_string(v) + "\n"; }

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deterministic warehouse problem solver", "warehouse"};
  app.require_subcommand(1);

  std::string input, output, solution_path, dot_path, epsilon_text, dir, variant_name_arg = "wp1";
  std::uint64_t seed = 0;
  int T = 3, jobs = 1;
  std::int64_t max_bound = 8;
  bool time_independent = false;
  std::vector<std::int64_t> numbers;

  auto* solve_cmd = app.add_subcommand("solve", "Exact optimum via the layered network");
  solve_cmd->add_option("--input", input, "Instance JSON")->required();
  solve_cmd->add_option("--output", output, "Solution JSON (default: standard output)");
  solve_cmd->add_option("--dot", dot_path, "Write the network in DOT format");

  auto* oracle_cmd = app.add_subcommand("oracle", "Integer dynamic-programming optimum");
  oracle_cmd->add_option("--input", input, "Instance JSON")->required();
  oracle_cmd->add_option("--output", output, "Solution JSON (default: standard output)");

  auto* fptas_cmd = app.add_subcommand("fptas", "Approximate optimum for WP3");
  fptas_cmd->add_option("--input", input, "Instance JSON")->required();
  fptas_cmd->add_option("--epsilon", epsilon_text, "Accuracy as p/q in (0, 1)")->required();
  fptas_cmd->add_option("--output", output, "Solution JSON (default: standard output)");

  auto* lp_cmd = app.add_subcommand("emit-lp", "Extended formulation in CPLEX-LP format");
  lp_cmd->add_option("--input", input, "Instance JSON")->required();
  lp_cmd->add_option("--output", output, "LP file")->required();

  auto* check_cmd = app.add_subcommand("check", "Feasibility report for a solution");
  check_cmd->add_option("--input", input, "Instance JSON")->required();
  check_cmd->add_option("--solution", solution_path, "Solution JSON")->required();
  check_cmd->add_option("--output", output, "Report JSON (default: standard output)");

  auto* levels_cmd = app.add_subcommand("levels", "Candidate stock levels, one line per period");
  levels_cmd->add_option("--input", input, "Instance JSON")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Seeded random instance");
  gen_cmd->add_option("--seed", seed)->required();
  gen_cmd->add_option("--T", T)->required();
  gen_cmd->add_option("--variant", variant_name_arg)->check(CLI::IsMember({"wp1", "wp2", "wp3"}));
  gen_cmd->add_option("--max-bound", max_bound);
  gen_cmd->add_flag("--time-independent", time_independent, "Same bounds in every period");
  gen_cmd->add_option("--output", output, "Instance JSON (default: standard output)");

  auto* reduce_cmd = app.add_subcommand("reduce", "Instances from the hardness reductions");
  reduce_cmd->require_subcommand(1);
  auto* partition_cmd = reduce_cmd->add_subcommand("partition", "Partition to WP3");
  partition_cmd->add_option("--numbers", numbers, "Comma-separated positive integers")
      ->required()
      ->delimiter(',');
  partition_cmd->add_option("--output", output, "Instance JSON (default: standard output)");
  auto* lotsizing_cmd = reduce_cmd->add_subcommand("lotsizing", "Lot-sizing to WP2");
  lotsizing_cmd->add_option("--input", input, "Lot-sizing JSON")->required();
  lotsizing_cmd->add_option("--output", output, "Instance JSON (default: standard output)");

  auto* bench_cmd = app.add_subcommand("bench", "Solve every instance in a directory");
  bench_cmd->add_option("--dir", dir)->required();
  bench_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--output", output, "CSV file (default: standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInvalidExit;
  }

  try {
    if (solve_cmd->parsed()) {
      const SolveResult r = solve_detailed(detail::load_instance(input));
      out << detail::objective_line(r.solution.objective);
      if (!dot_path.empty()) write_text_file(dot_path, to_dot(r.network));
      detail::emit(output, serialize(r.solution), out);
    } else if (oracle_cmd->parsed()) {
      const Solution sol = oracle_solve(detail::load_instance(input));
      out << detail::objective_line(sol.objective);
      detail::emit(output, serialize(sol), out);
    } else if (fptas_cmd->parsed()) {
      const FptasResult r = fptas_solve_detailed(detail::load_instance(input), parse_rational(epsilon_text));
      out << detail::objective_line(r.solution.objective);
      out << "K: " << to_string(r.params.K) << "\n";
      detail::emit(output, serialize(r.solution), out);
    } else if (lp_cmd->parsed()) {
      const Instance inst = detail::load_instance(input);
      const SolveResult r = solve_detailed(inst);
      const Instance& net_inst = r.network_instance(inst);
      const LPModel model = build_extended_formulation(net_inst, r.network);
      write_text_file(output, write_lp(model, net_inst, r.network));
      out << "variables: " << model.variables.size() << "\nconstraints: " << model.rows.size() << "\n";
    } else if (check_cmd->parsed()) {
      const Instance inst = detail::load_instance(input);
      const Solution sol = parse_solution(read_text_file(solution_path));
      detail::emit(output, serialize(check_solution(inst, sol)), out);
    } else if (levels_cmd->parsed()) {
      const Instance inst = detail::load_instance(input);
      try {
        validate_instance(inst);
      } catch (const Error& e) {
        throw Error(ErrorCode::kInvalidInstance, e.what(), e.period());
      }
      const StockLevels levels = gen_stock_levels(inst);
      for (int t = 1; t <= inst.T; ++t) {
        const auto& row = levels.at(t);
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << to_string(row[j]);
        out << "\n";
      }
    } else if (gen_cmd->parsed()) {
      const Variant v = parse_variant(variant_name_arg);
      const Instance inst = time_independent ? gen_time_independent(seed, T, v, max_bound)
                                             : gen_random(seed, T, v, max_bound);
      detail::emit(output, serialize(inst), out);
    } else if (partition_cmd->parsed()) {
      const PartitionReduction r = reduce_partition(numbers);
      err << "target: " << to_string(r.target) << "\n";
      detail::emit(output, serialize(r.instance), out);
    } else if (lotsizing_cmd->parsed()) {
      const LotSizingReduction r = reduce_lotsizing(lotsizing_from_json(parse_json_text(read_text_file(input))));
      err << "M: " << to_string(r.M) << "\n";
      detail::emit(output, serialize(r.instance), out);
    } else if (bench_cmd->parsed()) {
      detail::emit(output, detail::run_bench(dir, jobs), out);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInfeasible) {
      err << "infeasible: " << e.what() << "\n";
      return kInfeasibleExit;
    }
    err << e.what() << "\n";
    return kInvalidExit;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kInvalidExit;
  }
  return kOk;
}

}  // namespace warehouse::cli
