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

#ifndef GOAS_PTAS_HPP_
#define GOAS_PTAS_HPP_

#include <cstdint>
#include <optional>

#include "goas/dp.hpp"
#include "goas/rational.hpp"
#include "goas/tree.hpp"

namespace goas {

enum class ScaleMode { kInteger, kBinaryFraction, kLcm };

std::string_view ScaleModeName(ScaleMode mode);

// How costs are brought to integers and how many low binary digits are
// dropped.
struct TruncationPlan {
  Rational epsilon;
  ScaleMode mode = ScaleMode::kInteger;
  int fractional_bits = 0;  // binary-fraction mode: S = 2^fractional_bits
  BigInt scale = 1;         // S
  std::int64_t requested_t = 0;  // ChooseT(eps, B, n)
  std::int64_t truncated_bits = 0;  // ChooseT(eps, S*B, n)
};

// floor(lg(eps * B / n)), or 0 when eps == 0 or eps*B/n < 1 (exact
// fallback). Requires n >= 1, B > 0, eps >= 0.
std::int64_t ChooseT(const Rational& epsilon, const Rational& budget,
                     std::int64_t n);

// Replaces every (integer) cost c(e) by c(e) - (c(e) mod 2^t). Throws
// NonIntegerCost.
Instance TruncateCosts(const Instance& inst, std::int64_t t);

// Picks the cheapest scaling that makes every cost integral. A forced mode
// must still yield integers (kLcm always does).
TruncationPlan PlanTruncation(const Instance& inst, const Rational& epsilon,
                              std::optional<ScaleMode> forced_mode = {});

// Budget-relaxing approximation: the returned strategy costs at most
// B + n 2^t / S <= (1+eps) B under the original costs and its prize is at
// least the exact optimum at budget B.
SolveResult SolvePtas(const Instance& inst, const Rational& epsilon,
                      const SolverOptions& options = {},
                      std::optional<ScaleMode> forced_mode = {});

}  // namespace goas

#endif  // GOAS_PTAS_HPP_
