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


// Builds a two-period instance in code, solves it exactly and prints the
// plan with its feasibility report.

#include <iostream>

#include "warehouse/warehouse.hpp"

int main() {
  using namespace warehouse;
  Instance inst = Instance::zeros(2, Variant::kWP1);
  inst.Us = {10, 10};
  inst.Ux = {5, 5};
  inst.Uy = {5, 5};
  inst.cost = {1, 0};
  inst.revenue = {0, 3};

  const Solution sol = solve(inst);
  std::cout << "objective: " << to_string(sol.objective) << "\n";
  for (int t = 1; t <= inst.T; ++t) {
    const auto i = static_cast<std::size_t>(t - 1);
    std::cout << "t=" << t << " buy " << to_string(sol.x[i]) << " sell " << to_string(sol.y[i]) << " stock "
              << to_string(sol.s[i]) << "\n";
  }
  std::cout << "feasible: " << (check_solution(inst, sol).feasible ? "yes" : "no") << "\n";
  return 0;
}
