// Copyright 2026 The GOAS Solver Authors
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

#include <string>
#include <vector>

#include "dp_internal.hpp"
#include "goas/error.hpp"

namespace goas {

DpTables BuildIntegerTables(const Instance& inst,
                            const SolverOptions& options) {
  for (VertexId v = 0; v < inst.vertex_count(); ++v) {
    if (!IsInteger(inst.cost(v))) {
      throw Error(ErrorCode::kNonIntegerCost,
                  "edge (" + inst.name(inst.parent(v)) + ", " + inst.name(v) +
                      ") has cost " + FormatRational(inst.cost(v)));
    }
  }
  // Budgets beyond the total cost buy nothing more.
  BigInt k = Floor(inst.budget());
  const BigInt total = Floor(inst.TotalCost());
  if (k > total) k = total;
  std::int64_t max_index = 0;
  if (!ToInt64(k, &max_index) || max_index >= (std::int64_t{1} << 40)) {
    throw Error(ErrorCode::kTableTooLarge,
                "integer budget " + k.get_str() + " is too large for a table");
  }
  CheckCellBudget(inst, static_cast<std::uint64_t>(max_index) + 1, options);
  std::vector<std::int64_t> step(inst.vertex_count(), 0);
  for (VertexId v = 0; v < inst.vertex_count(); ++v) {
    const BigInt& c = inst.cost(v).get_num();
    // Weights above the budget never fit; clamp so they stay in int64.
    step[v] = c > max_index ? max_index + 1 : c.get_si();
  }
  return TableBuilder::AtMost(inst, TableKind::kInteger, std::move(step),
                              max_index, options);
}

SolveResult SolveInteger(const Instance& inst, const SolverOptions& options) {
  const DpTables tables = BuildIntegerTables(inst, options);
  SolveResult result = ResultFromTables(inst, tables, "integer");
  const BigInt floor_budget = Floor(inst.budget());
  const std::int64_t width = static_cast<std::int64_t>(tables.width());
  result.effective_budget = Rational(floor_budget);
  result.parameters.emplace_back("B", floor_budget.get_str());
  result.parameters.emplace_back("table_k", std::to_string(width - 1));
  result.op_bound = Rational(2 * inst.edge_count()) * (width - 1) * (width - 1);
  return result;
}

}  // namespace goas
