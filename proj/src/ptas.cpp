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

#include "goas/ptas.hpp"

#include <string>
#include <vector>

#include "goas/error.hpp"

namespace goas {

std::string_view ScaleModeName(ScaleMode mode) {
  switch (mode) {
    case ScaleMode::kInteger: return "integer";
    case ScaleMode::kBinaryFraction: return "binary-fraction";
    case ScaleMode::kLcm: return "lcm";
  }
  return "unknown";
}

std::int64_t ChooseT(const Rational& epsilon, const Rational& budget,
                     std::int64_t n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "n must be at least 1");
  }
  if (epsilon < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "epsilon " + FormatRational(epsilon) + " is negative");
  }
  const Rational x = epsilon * budget / n;
  if (x < 1) return 0;
  return FloorLog2(x);
}

Instance TruncateCosts(const Instance& inst, std::int64_t t) {
  if (t < 0) {
    throw Error(ErrorCode::kInvalidArgument, "t must be non-negative");
  }
  std::vector<EdgeSpec> edges = inst.EdgeSpecs();
  BigInt low;
  for (EdgeSpec& e : edges) {
    if (!IsInteger(e.cost)) {
      throw Error(ErrorCode::kNonIntegerCost,
                  "edge (" + e.parent + ", " + e.child + ") has cost " +
                      FormatRational(e.cost));
    }
    mpz_fdiv_r_2exp(low.get_mpz_t(), e.cost.get_num_mpz_t(),
                    static_cast<mp_bitcnt_t>(t));
    e.cost -= low;
  }
  return BuildInstance(inst.VertexSpecs(), edges, inst.name(inst.root()),
                       inst.budget(), inst.threshold())
      .WithDeclaredAlphabet(inst.declared_alphabet());
}

TruncationPlan PlanTruncation(const Instance& inst, const Rational& epsilon,
                              std::optional<ScaleMode> forced_mode) {
  if (epsilon < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "epsilon " + FormatRational(epsilon) + " is negative");
  }
  TruncationPlan plan;
  plan.epsilon = epsilon;
  BigInt lcm = 1;
  for (VertexId v = 0; v < inst.vertex_count(); ++v) {
    lcm = Lcm(lcm, inst.cost(v).get_den());
  }
  const bool power_of_two = mpz_popcount(lcm.get_mpz_t()) == 1;
  ScaleMode mode = lcm == 1        ? ScaleMode::kInteger
                   : power_of_two ? ScaleMode::kBinaryFraction
                                  : ScaleMode::kLcm;
  if (forced_mode) {
    const bool ok = *forced_mode == ScaleMode::kLcm ||
                    (*forced_mode == ScaleMode::kBinaryFraction && power_of_two) ||
                    (*forced_mode == ScaleMode::kInteger && lcm == 1);
    if (!ok) {
      throw Error(ErrorCode::kInvalidArgument,
                  "scale mode " + std::string(ScaleModeName(*forced_mode)) +
                      " cannot make these costs integral");
    }
    mode = *forced_mode;
  }
  plan.mode = mode;
  plan.scale = mode == ScaleMode::kInteger ? BigInt(1) : lcm;
  if (mode == ScaleMode::kBinaryFraction) {
    plan.fractional_bits =
        static_cast<int>(mpz_sizeinbase(lcm.get_mpz_t(), 2)) - 1;
  }
  const std::int64_t n = inst.edge_count();
  if (n >= 1 && inst.budget() > 0) {
    plan.requested_t = ChooseT(epsilon, inst.budget(), n);
    plan.truncated_bits =
        ChooseT(epsilon, inst.budget() * Rational(plan.scale), n);
  }
  return plan;
}

SolveResult SolvePtas(const Instance& inst, const Rational& epsilon,
                      const SolverOptions& options,
                      std::optional<ScaleMode> forced_mode) {
  const TruncationPlan plan = PlanTruncation(inst, epsilon, forced_mode);
  const Rational scale(plan.scale);
  const std::int64_t t = plan.truncated_bits;

  // Scaled costs c'' = S c, truncated to multiples of 2^t and divided by
  // 2^t; budget floor(S B / 2^t).
  BigInt unit = 1;
  unit <<= static_cast<mp_bitcnt_t>(t);
  std::vector<EdgeSpec> edges = inst.EdgeSpecs();
  for (EdgeSpec& e : edges) {
    const BigInt scaled = Rational(e.cost * scale).get_num();
    BigInt reduced;
    mpz_fdiv_q_2exp(reduced.get_mpz_t(), scaled.get_mpz_t(),
                    static_cast<mp_bitcnt_t>(t));
    e.cost = reduced;
  }
  const Rational reduced_budget(Floor(inst.budget() * scale / unit));
  const Instance reduced =
      BuildInstance(inst.VertexSpecs(), edges, inst.name(inst.root()),
                    reduced_budget, inst.threshold());

  SolveResult result;
  Strategy strategy;
  bool contracted = false;
  bool has_zero = false;
  for (VertexId v = 0; v < reduced.vertex_count(); ++v) {
    if (v != reduced.root() && reduced.cost(v) == 0) has_zero = true;
  }
  if (has_zero && ContractionIsExact(reduced)) {
    const Contraction contraction = ContractZeroCostEdges(reduced);
    result = SolveInteger(contraction.contracted, options);
    strategy = ExpandStrategy(contraction, inst, result.strategy);
    contracted = true;
  } else {
    result = SolveInteger(reduced, options);
    strategy = MakeStrategy(inst, result.strategy.vertices);
  }

  result.solver = "ptas";
  result.strategy = strategy;
  result.prize = strategy.prize;
  result.goas_met = result.prize >= inst.threshold();
  result.effective_budget = inst.budget();

  PtasReport report;
  report.epsilon = epsilon;
  report.scale_mode = std::string(ScaleModeName(plan.mode));
  report.scale = plan.scale;
  report.requested_t = plan.requested_t;
  report.truncated_bits = t;
  report.cost_bound =
      inst.budget() + Rational(inst.edge_count()) * Rational(unit) / scale;
  report.contracted = contracted;
  if (strategy.cost > report.cost_bound) {
    throw std::logic_error("approximation exceeded its cost bound");
  }
  result.parameters.emplace_back("epsilon", FormatRational(epsilon));
  result.parameters.emplace_back("scale_mode", report.scale_mode);
  result.parameters.emplace_back("scale", plan.scale.get_str());
  result.parameters.emplace_back("t", std::to_string(t));
  result.parameters.emplace_back("reduced_budget",
                                 FormatRational(reduced_budget));
  result.ptas = std::move(report);
  return result;
}

}  // namespace goas
