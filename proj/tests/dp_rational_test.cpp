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

#include <gtest/gtest.h>

#include "goas/dp.hpp"
#include "goas/dp_tables.hpp"
#include "goas/error.hpp"
#include "goas/oracle.hpp"
#include "test_util.hpp"

namespace goas {
namespace {

using testing::Q;

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kInvalidArgument;
}

TEST(SolveRationalDTest, TwoCostPath) {
  const Instance inst = testing::Path3(Q("1/2"), Q("3/2"), 2, 9, 2);
  const SolveResult r = SolveRationalD(inst, {Q("1/2"), Q("3/2")});
  EXPECT_EQ(r.prize, 11);
  EXPECT_EQ(r.strategy.cost, 2);
  EXPECT_EQ(SolveRationalD(inst.WithBudget(Q("19/10")), {Q("1/2"), Q("3/2")}).prize,
            2);
}

TEST(SolveRationalDTest, AlphabetOrderDoesNotMatter) {
  const Instance inst = testing::Path3(Q("1/2"), Q("3/2"), 2, 9, 2);
  EXPECT_EQ(SolveRationalD(inst, {Q("3/2"), Q("1/2")}).prize, 11);
}

TEST(SolveRationalDTest, MatchesOracleTwoValues) {
  const std::vector<Rational> alphabet{Q("1/3"), Q("5/2")};
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Instance inst = testing::RandomAlphabet(
        seed, static_cast<int>(seed % 13), alphabet, seed % 4 == 0);
    const SolveResult r = SolveRationalD(inst, alphabet);
    ASSERT_EQ(r.prize, BruteForceOptimum(inst).prize) << "seed " << seed;
    EXPECT_LE(r.strategy.cost, inst.budget());
    EXPECT_EQ(StrategyCostPrize(inst, r.strategy.vertices).prize, r.prize);
  }
}

TEST(SolveRationalDTest, MatchesOracleThreeValues) {
  const std::vector<Rational> alphabet{Q("2/7"), 1, Q("9/4")};
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const Instance inst = testing::RandomAlphabet(
        seed, static_cast<int>(seed % 12), alphabet, seed % 3 == 0);
    ASSERT_EQ(SolveRationalD(inst, alphabet).prize, BruteForceOptimum(inst).prize)
        << "seed " << seed;
  }
}

TEST(SolveRationalDTest, SingleValueMatchesConstant) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Rational c = seed % 2 ? Q("3/4") : Rational(2);
    const Instance inst =
        testing::RandomConstant(seed, static_cast<int>(seed % 14), c, seed % 5 == 0);
    EXPECT_EQ(SolveRationalD(inst, {c}).prize, SolveConstant(inst, c).prize)
        << "seed " << seed;
  }
}

TEST(SolveRationalDTest, ExtraAlphabetValuesAreHarmless) {
  const Instance inst = testing::Path3(Q("1/2"), Q("3/2"), 2, 9, 2);
  EXPECT_EQ(SolveRationalD(inst, {Q("1/2"), Q("3/2"), 7}).prize, 11);
}

TEST(SolveRationalDTest, Errors) {
  const Instance inst = testing::Path3(Q("1/2"), Q("3/2"), 2, 9, 2);
  EXPECT_EQ(CodeOf([&] { SolveRationalD(inst, {Q("1/2")}); }),
            ErrorCode::kUnknownCostValue);
  EXPECT_EQ(CodeOf([&] { SolveRationalD(inst, {Q("1/2"), Q("3/2"), Q("1/2")}); }),
            ErrorCode::kDuplicateCostValue);
  EXPECT_EQ(CodeOf([&] { SolveRationalD(inst, {Q("1/2"), Q("3/2"), 0}); }),
            ErrorCode::kZeroCost);
  EXPECT_EQ(CodeOf([&] { SolveRationalD(inst, {}); }),
            ErrorCode::kInvalidArgument);
  SolverOptions small;
  small.max_alphabet = 1;
  EXPECT_EQ(CodeOf([&] { SolveRationalD(inst, {Q("1/2"), Q("3/2")}, small); }),
            ErrorCode::kTooManyCostValues);
  SolverOptions tiny;
  tiny.max_table_cells = 4;
  EXPECT_EQ(CodeOf([&] { SolveRationalD(inst, {Q("1/2"), Q("3/2")}, tiny); }),
            ErrorCode::kTableTooLarge);
}

TEST(SolveRationalDTest, OperationBound) {
  const std::vector<Rational> alphabet{Q("1/3"), Q("5/2")};
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = testing::RandomAlphabet(seed, 4 + seed % 10, alphabet);
    const SolveResult r = SolveRationalD(inst, alphabet);
    ASSERT_TRUE(r.op_bound.has_value());
    EXPECT_LE(Rational(r.ops.total()), *r.op_bound) << "seed " << seed;
  }
}

TEST(RationalTablesTest, UnreachableVectorsAreMarked) {
  const Instance inst = testing::Path3(Q("1/2"), Q("3/2"), 2, 9, 2);
  const DpTables t = BuildRationalTables(inst, {Q("1/2"), Q("3/2")});
  const VertexId b = *inst.Find("b");
  // A leaf reaches only the zero vector.
  EXPECT_EQ(*t.Entry(b, 1, 0), 9);
  for (std::size_t k = 1; k < t.width(); ++k) {
    EXPECT_FALSE(t.Entry(b, 1, k).has_value());
  }
}

}  // namespace
}  // namespace goas
