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

#include "goas/generator.hpp"

#include <string>

#include "goas/error.hpp"

namespace goas {

std::int64_t UniformInt(std::mt19937_64& rng, std::int64_t lo,
                        std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) -
                             static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());  // full range
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

std::optional<Shape> ParseShape(std::string_view name) {
  if (name == "random") return Shape::kRandom;
  if (name == "path") return Shape::kPath;
  if (name == "star") return Shape::kStar;
  if (name == "b-ary" || name == "bary") return Shape::kBAry;
  return std::nullopt;
}

std::optional<CostModel> ParseCostModel(std::string_view name) {
  if (name == "constant") return CostModel::kConstant;
  if (name == "uniform") return CostModel::kUniform;
  if (name == "alphabet") return CostModel::kAlphabet;
  return std::nullopt;
}

namespace {

void Validate(const GeneratorConfig& c) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidConfig, what);
  };
  if (c.n < 0) fail("n must be non-negative");
  if (c.shape == Shape::kBAry && c.arity < 1) fail("arity must be at least 1");
  switch (c.cost_model) {
    case CostModel::kConstant:
      if (c.constant_cost < 0) fail("constant cost must be non-negative");
      break;
    case CostModel::kUniform:
      if (c.cost_min < 0 || c.cost_min > c.cost_max) {
        fail("cost range must satisfy 0 <= min <= max");
      }
      break;
    case CostModel::kAlphabet:
      if (c.alphabet.empty()) fail("alphabet cost model needs values");
      for (const Rational& a : c.alphabet) {
        if (a < 0) fail("alphabet values must be non-negative");
      }
      if (!c.alphabet_weights.empty() &&
          c.alphabet_weights.size() != c.alphabet.size()) {
        fail("alphabet weights must match alphabet size");
      }
      break;
  }
  if (c.prize_min > c.prize_max) fail("prize range must satisfy min <= max");
  if (c.prize_denominator < 1) fail("prize denominator must be positive");
  if (c.prize_min < 0 && !c.allow_negative_prizes) {
    fail("negative prizes requested but not allowed");
  }
  if (c.budget < 0) fail("budget must be non-negative");
}

VertexId DrawParent(std::mt19937_64& rng, const GeneratorConfig& c, int i) {
  switch (c.shape) {
    case Shape::kPath: return i - 1;
    case Shape::kStar: return 0;
    case Shape::kBAry: return (i - 1) / c.arity;
    case Shape::kRandom: break;
  }
  return static_cast<VertexId>(UniformInt(rng, 0, i - 1));
}

Rational DrawCost(std::mt19937_64& rng, const GeneratorConfig& c) {
  switch (c.cost_model) {
    case CostModel::kConstant: return Canonical(c.constant_cost);
    case CostModel::kUniform: return Rational(BigInt(static_cast<long>(
        UniformInt(rng, c.cost_min, c.cost_max))));
    case CostModel::kAlphabet: break;
  }
  if (c.alphabet_weights.empty()) {
    return c.alphabet[UniformInt(rng, 0,
                                 static_cast<std::int64_t>(c.alphabet.size()) - 1)];
  }
  std::uint64_t total = 0;
  for (std::uint32_t w : c.alphabet_weights) total += w;
  std::int64_t pick = UniformInt(rng, 0, static_cast<std::int64_t>(total) - 1);
  for (std::size_t j = 0; j < c.alphabet.size(); ++j) {
    pick -= c.alphabet_weights[j];
    if (pick < 0) return c.alphabet[j];
  }
  return c.alphabet.back();
}

}  // namespace

Instance Generate(const GeneratorConfig& config) {
  Validate(config);
  std::mt19937_64 rng(config.seed);
  std::vector<VertexSpec> vertices{{"r", 0}};
  std::vector<EdgeSpec> edges;
  std::vector<VertexId> parent(config.n + 1, kNoVertex);
  for (int i = 1; i <= config.n; ++i) parent[i] = DrawParent(rng, config, i);
  Rational total_cost = 0;
  for (int i = 1; i <= config.n; ++i) {
    const Rational cost = DrawCost(rng, config);
    total_cost += cost;
    const std::string parent_id = parent[i] == 0 ? "r" : "v" + std::to_string(parent[i]);
    edges.push_back({parent_id, "v" + std::to_string(i), cost});
  }
  for (int i = 1; i <= config.n; ++i) {
    const std::int64_t draw = UniformInt(rng, config.prize_min, config.prize_max);
    Rational prize(BigInt(static_cast<long>(draw)),
                   BigInt(static_cast<long>(config.prize_denominator)));
    prize.canonicalize();
    vertices.push_back({"v" + std::to_string(i), prize});
  }
  const Rational budget = config.budget_policy == BudgetPolicy::kAbsolute
                              ? Canonical(config.budget)
                              : Canonical(config.budget) * total_cost;
  return BuildInstance(vertices, edges, "r", budget, config.threshold);
}

}  // namespace goas
