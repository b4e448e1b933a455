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

namespace {

void ValidateConstantCost(const Instance& inst, const Rational& c) {
  if (c <= 0) {
    throw Error(ErrorCode::kZeroCost,
                "constant cost must be positive, got " + FormatRational(c) +
                    "; contract zero-cost edges first");
  }
  for (VertexId v = 0; v < inst.vertex_count(); ++v) {
    if (v == inst.root() || inst.cost(v) == c) continue;
    throw Error(ErrorCode::kNonConstantCost,
                "edge (" + inst.name(inst.parent(v)) + ", " + inst.name(v) +
                    ") has cost " + FormatRational(inst.cost(v)) +
                    ", expected " + FormatRational(c));
  }
}

}  // namespace

DpTables BuildConstantTables(const Instance& inst, const Rational& cost,
                             const SolverOptions& options) {
  const Rational c = Canonical(cost);
  ValidateConstantCost(inst, c);
  const BigInt m_raw = Floor(inst.budget() / c);
  const std::int64_t n = inst.edge_count();
  const std::int64_t m = m_raw >= n ? n : m_raw.get_si();
  std::vector<std::int64_t> step(inst.vertex_count(), 1);
  step[inst.root()] = 0;
  return TableBuilder::AtMost(inst, TableKind::kConstant, std::move(step), m,
                              options);
}

SolveResult SolveConstant(const Instance& inst, const Rational& cost,
                          const SolverOptions& options) {
  const Rational c = Canonical(cost);
  ValidateConstantCost(inst, c);
  const BigInt m_raw = Floor(inst.budget() / c);
  const std::int64_t n = inst.edge_count();

  bool prizes_non_negative = true;
  for (VertexId v = 0; v < inst.vertex_count(); ++v) {
    if (inst.prize(v) < 0) prizes_non_negative = false;
  }

  SolveResult result;
  std::int64_t m = 0;
  if (m_raw >= n && prizes_non_negative) {
    // Every subtree is affordable and prizes only add up: take all of T.
    std::vector<VertexId> all(inst.vertex_count());
    for (VertexId v = 0; v < inst.vertex_count(); ++v) all[v] = v;
    result.solver = "constant";
    result.strategy = MakeStrategy(inst, std::move(all));
    result.prize = result.strategy.prize;
    result.goas_met = result.prize >= inst.threshold();
    m = n;
    result.parameters.emplace_back("shortcut", "whole-tree");
  } else {
    const DpTables tables = BuildConstantTables(inst, c, options);
    m = static_cast<std::int64_t>(tables.width()) - 1;
    result = ResultFromTables(inst, tables, "constant");
  }
  result.effective_budget = inst.budget();
  result.parameters.emplace(result.parameters.begin(), "c", FormatRational(c));
  result.parameters.emplace(result.parameters.begin() + 1, "m",
                            m_raw.get_str());
  result.parameters.emplace_back("table_m", std::to_string(m));
  result.op_bound = Rational(2 * n) * m * m;
  return result;
}

}  // namespace goas
