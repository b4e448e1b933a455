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

#ifndef GOAS_GENERATOR_HPP_
#define GOAS_GENERATOR_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "goas/rational.hpp"
#include "goas/tree.hpp"

namespace goas {

enum class Shape { kRandom, kPath, kStar, kBAry };
enum class CostModel { kConstant, kUniform, kAlphabet };
enum class BudgetPolicy { kAbsolute, kFractionOfTotalCost };

struct GeneratorConfig {
  std::uint64_t seed = 1;
  int n = 10;  // non-root vertices
  Shape shape = Shape::kRandom;
  int arity = 2;  // b-ary shape only

  CostModel cost_model = CostModel::kUniform;
  Rational constant_cost = 1;
  std::int64_t cost_min = 1;  // uniform integer range, inclusive
  std::int64_t cost_max = 10;
  std::vector<Rational> alphabet;
  std::vector<std::uint32_t> alphabet_weights;  // empty means uniform

  // Prizes are uniform integers in [prize_min, prize_max] divided by
  // prize_denominator. The root's prize is 0.
  std::int64_t prize_min = 0;
  std::int64_t prize_max = 10;
  std::int64_t prize_denominator = 1;
  bool allow_negative_prizes = false;

  BudgetPolicy budget_policy = BudgetPolicy::kFractionOfTotalCost;
  Rational budget = Rational(1, 2);
  Rational threshold = 0;
};

// Vertex ids are "r", "v1" .. "vn" in creation order; v_i's parent is drawn
// from earlier vertices, so ids follow a valid pre-tree order. Identical
// configs give identical instances on every platform (mt19937_64 with our
// own bounded draws). Throws InvalidConfig.
Instance Generate(const GeneratorConfig& config);

std::optional<Shape> ParseShape(std::string_view name);
std::optional<CostModel> ParseCostModel(std::string_view name);

// Unbiased draw in [lo, hi] from a 64-bit engine.
std::int64_t UniformInt(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

}  // namespace goas

#endif  // GOAS_GENERATOR_HPP_
