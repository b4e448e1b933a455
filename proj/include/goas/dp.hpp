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

#ifndef GOAS_DP_HPP_
#define GOAS_DP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "goas/rational.hpp"
#include "goas/tree.hpp"

namespace goas {

// Additions and comparisons performed while filling DP tables (and, for the
// d-rational solver, the final scan over cost-count vectors).
struct OpCounts {
  std::uint64_t additions = 0;
  std::uint64_t comparisons = 0;

  std::uint64_t total() const { return additions + comparisons; }
  OpCounts& operator+=(const OpCounts& o) {
    additions += o.additions;
    comparisons += o.comparisons;
    return *this;
  }
  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

enum class Kernel { kSerial, kParallel };

struct SolverOptions {
  Kernel kernel = Kernel::kParallel;
  // solve_rational_d refuses alphabets larger than this.
  int max_alphabet = 6;
  // Upper limit on retained table entries across all vertices.
  std::uint64_t max_table_cells = 200'000'000;
};

// Extra facts reported by the approximation scheme.
struct PtasReport {
  Rational epsilon;
  std::string scale_mode;  // "integer", "binary-fraction" or "lcm"
  BigInt scale;            // S: costs and budget are multiplied by S
  std::int64_t requested_t = 0;   // floor(lg(eps*B/n)) on the unscaled budget
  std::int64_t truncated_bits = 0;  // digits dropped from the scaled costs
  Rational cost_bound;     // B + n * 2^truncated_bits / S
  bool contracted = false;
};

struct SolveResult {
  std::string solver;
  Rational prize;
  Strategy strategy;
  bool goas_met = false;
  OpCounts ops;
  // Budget the optimum is taken against (e.g. floor(B) for the integer
  // solver).
  Rational effective_budget;
  // Solver parameters in a fixed order (m, K, d, box sizes, ...).
  std::vector<std::pair<std::string, std::string>> parameters;
  // Worst-case operation bound for this run, when one applies.
  std::optional<Rational> op_bound;
  std::optional<PtasReport> ptas;
};

// Constant penetration cost `c` on every edge. Optimum over rooted subtrees
// with at most m = floor(B/c) edges. Throws NonConstantCost, ZeroCost.
SolveResult SolveConstant(const Instance& inst, const Rational& c,
                          const SolverOptions& options = {});

// Non-negative integer costs; the budget is floored. Throws NonIntegerCost,
// TableTooLarge.
SolveResult SolveInteger(const Instance& inst,
                         const SolverOptions& options = {});

// Every edge cost is one of `costs` (d distinct positive rationals). Throws
// UnknownCostValue, DuplicateCostValue, TooManyCostValues, ZeroCost,
// TableTooLarge.
SolveResult SolveRationalD(const Instance& inst,
                           const std::vector<Rational>& costs,
                           const SolverOptions& options = {});

// GOAS-DP verdict: prize >= G.
bool DecideGoas(const Instance& inst, const SolveResult& result);

// Distinct edge costs in first-seen pre-order.
std::vector<Rational> DistinctCosts(const Instance& inst);

}  // namespace goas

#endif  // GOAS_DP_HPP_
