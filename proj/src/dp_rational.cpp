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

#include <algorithm>
#include <string>
#include <vector>

#include "dp_internal.hpp"
#include "goas/error.hpp"

namespace goas {

namespace {

struct AlphabetLayout {
  std::vector<std::int64_t> step;    // alphabet index per vertex
  std::vector<std::int64_t> counts;  // n_j
  std::vector<std::int64_t> caps;    // m_j
  Rational extended_budget;          // B' = B + sum c_j
};

AlphabetLayout LayOut(const Instance& inst, std::vector<Rational> costs,
                      const SolverOptions& options) {
  for (Rational& c : costs) c.canonicalize();
  if (costs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cost alphabet is empty");
  }
  if (static_cast<int>(costs.size()) > options.max_alphabet) {
    throw Error(ErrorCode::kTooManyCostValues,
                std::to_string(costs.size()) + " cost values exceed the cap of " +
                    std::to_string(options.max_alphabet));
  }
  AlphabetLayout layout;
  layout.extended_budget = inst.budget();
  for (std::size_t j = 0; j < costs.size(); ++j) {
    if (costs[j] <= 0) {
      throw Error(ErrorCode::kZeroCost, "alphabet value " +
                                            FormatRational(costs[j]) +
                                            " is not positive");
    }
    for (std::size_t i = 0; i < j; ++i) {
      if (costs[i] == costs[j]) {
        throw Error(ErrorCode::kDuplicateCostValue,
                    "alphabet value " + FormatRational(costs[j]) +
                        " appears twice");
      }
    }
    layout.extended_budget += costs[j];
  }
  layout.step.assign(inst.vertex_count(), 0);
  layout.counts.assign(costs.size(), 0);
  for (VertexId v = 0; v < inst.vertex_count(); ++v) {
    if (v == inst.root()) continue;
    const auto it = std::find(costs.begin(), costs.end(), inst.cost(v));
    if (it == costs.end()) {
      throw Error(ErrorCode::kUnknownCostValue,
                  "edge (" + inst.name(inst.parent(v)) + ", " + inst.name(v) +
                      ") has cost " + FormatRational(inst.cost(v)) +
                      " outside the alphabet");
    }
    layout.step[v] = it - costs.begin();
    ++layout.counts[layout.step[v]];
  }
  for (std::size_t j = 0; j < costs.size(); ++j) {
    const BigInt cap = Ceil(layout.extended_budget / costs[j]);
    layout.caps.push_back(cap < layout.counts[j] ? cap.get_si()
                                                 : layout.counts[j]);
  }
  return layout;
}

}  // namespace

DpTables BuildRationalTables(const Instance& inst,
                             const std::vector<Rational>& costs_in,
                             const SolverOptions& options) {
  std::vector<Rational> costs = costs_in;
  for (Rational& c : costs) c.canonicalize();
  AlphabetLayout layout = LayOut(inst, costs, options);
  BigInt cells = 1;
  std::vector<std::int64_t> extents;
  for (std::int64_t cap : layout.caps) {
    extents.push_back(cap + 1);
    cells *= cap + 1;
  }
  if (cells > BigInt(std::to_string(options.max_table_cells))) {
    throw Error(ErrorCode::kTableTooLarge,
                "cost-count box has " + cells.get_str() + " entries");
  }
  BoxShape box(std::move(extents));
  std::vector<char> feasible(box.size, 0);
  for (std::int64_t k = 0; k < box.size; ++k) {
    const std::vector<std::int64_t> coords = box.Decode(k);
    Rational spent = 0;
    for (std::size_t j = 0; j < coords.size(); ++j) spent += costs[j] * coords[j];
    feasible[k] = spent <= inst.budget();
  }
  return TableBuilder::Exact(inst, std::move(layout.step), std::move(box),
                             feasible, options);
}

SolveResult SolveRationalD(const Instance& inst,
                           const std::vector<Rational>& costs,
                           const SolverOptions& options) {
  const AlphabetLayout layout = LayOut(inst, costs, options);
  const DpTables tables = BuildRationalTables(inst, costs, options);
  SolveResult result = ResultFromTables(inst, tables, "rational-d");
  result.effective_budget = inst.budget();

  const std::int64_t d = static_cast<std::int64_t>(costs.size());
  std::int64_t m = 0;
  std::string caps;
  std::string alphabet;
  for (std::size_t j = 0; j < costs.size(); ++j) {
    m += layout.caps[j];
    caps += (j ? "," : "") + std::to_string(layout.caps[j]);
    alphabet += (j ? "," : "") + FormatRational(costs[j]);
  }
  result.parameters.emplace_back("d", std::to_string(d));
  result.parameters.emplace_back("alphabet", alphabet);
  result.parameters.emplace_back("m", std::to_string(m));
  result.parameters.emplace_back("m_j", caps);
  result.parameters.emplace_back("box", std::to_string(tables.box().size));
  result.parameters.emplace_back("extended_budget",
                                 FormatRational(layout.extended_budget));

  // 4(n-1)(m/d+1)^{2d} + (m/d+1)^d with (n-1) = |E|.
  const Rational base = Rational(m, d) + 1;
  Rational power = 1;
  for (std::int64_t j = 0; j < d; ++j) power *= base;
  result.op_bound = Rational(4 * inst.edge_count()) * power * power + power;
  return result;
}

}  // namespace goas
