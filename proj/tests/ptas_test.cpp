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

#include <gtest/gtest.h>

#include "goas/error.hpp"
#include "goas/oracle.hpp"
#include "test_util.hpp"

namespace goas {
namespace {

using testing::Q;

TEST(ChooseTTest, Examples) {
  EXPECT_EQ(ChooseT(Q("1/2"), 8, 2), 1);
  EXPECT_EQ(ChooseT(1, 1024, 4), 8);
  EXPECT_EQ(ChooseT(Q("1/100"), 10, 50), 0);
  EXPECT_EQ(ChooseT(0, 1000, 1), 0);
  EXPECT_EQ(ChooseT(1, 3, 1), 1);
  EXPECT_THROW(ChooseT(-1, 8, 2), Error);
  EXPECT_THROW(ChooseT(1, 8, 0), Error);
}

TEST(TruncateCostsTest, Examples) {
  const Instance inst = testing::Path3(13, 6, 1, 1, 20);
  const Instance t2 = TruncateCosts(inst, 2);
  EXPECT_EQ(t2.cost(*t2.Find("a")), 12);
  EXPECT_EQ(t2.cost(*t2.Find("b")), 4);
  EXPECT_EQ(TruncateCosts(inst, 0), inst);
  const Instance small = testing::Path3(5, 7, 1, 1, 20);
  const Instance t3 = TruncateCosts(small, 3);
  EXPECT_EQ(t3.cost(*t3.Find("a")), 0);
  EXPECT_EQ(t3.cost(*t3.Find("b")), 0);
}

// Truncated cost plus the dropped low bits gives back the original.
TEST(TruncateCostsTest, LowBitsIdentity) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance inst = testing::RandomInteger(seed, 15, 1, 1000);
    const std::int64_t t = static_cast<std::int64_t>(seed % 9);
    const Instance tr = TruncateCosts(inst, t);
    const BigInt unit = BigInt(1) << static_cast<unsigned>(t);
    for (VertexId v = 0; v < inst.vertex_count(); ++v) {
      const BigInt c = inst.cost(v).get_num();
      const BigInt r = tr.cost(v).get_num();
      EXPECT_EQ(r % unit, 0);
      EXPECT_GE(c - r, 0);
      EXPECT_LT(c - r, unit);
    }
  }
}

TEST(SolvePtasTest, ZeroEpsilonIsExact) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance inst = testing::RandomInteger(seed, 1 + seed % 12, 1, 40);
    const SolveResult p = SolvePtas(inst, 0);
    EXPECT_EQ(p.prize, SolveInteger(inst).prize);
    EXPECT_EQ(p.ptas->truncated_bits, 0);
  }
}

// prize >= OPT(B) and cost <= B + n 2^t <= (1 + eps) B.
TEST(SolvePtasTest, Guarantee) {
  const std::vector<Rational> eps{Q("1/4"), Q("1/2"), 1, Q("1/10"), 3};
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Instance inst = testing::RandomInteger(
        seed, 1 + static_cast<int>(seed % 12), 1, 200, seed % 4 == 0);
    const Rational e = eps[seed % eps.size()];
    const SolveResult p = SolvePtas(inst, e);
    const SolveResult o = BruteForceOptimum(inst);
    ASSERT_GE(p.prize, o.prize) << "seed " << seed;
    const Rational bound =
        inst.budget() + Rational(inst.edge_count()) *
                            Rational(BigInt(1) << static_cast<unsigned>(
                                         p.ptas->truncated_bits));
    EXPECT_EQ(p.ptas->cost_bound, bound);
    EXPECT_LE(p.strategy.cost, bound) << "seed " << seed;
    EXPECT_LE(p.strategy.cost, (1 + e) * inst.budget()) << "seed " << seed;
    EXPECT_EQ(StrategyCostPrize(inst, p.strategy.vertices).prize, p.prize);
  }
}

TEST(SolvePtasTest, FractionalCosts) {
  const std::vector<Rational> alphabet{Q("3/8"), Q("5/4"), Q("7/2")};
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance inst = testing::RandomAlphabet(seed, 1 + seed % 11, alphabet);
    const SolveResult p = SolvePtas(inst, Q("1/3"));
    EXPECT_NE(p.ptas->scale_mode, "lcm");
    EXPECT_EQ(8 % p.ptas->scale, 0);
    EXPECT_GE(p.prize, BruteForceOptimum(inst).prize);
    EXPECT_LE(p.strategy.cost, p.ptas->cost_bound);
  }
  const std::vector<Rational> thirds{Q("1/3"), Q("5/2")};
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance inst = testing::RandomAlphabet(seed, 1 + seed % 11, thirds);
    const SolveResult p = SolvePtas(inst, 1);
    bool third = false;
    for (VertexId v = 0; v < inst.vertex_count(); ++v) {
      third = third || inst.cost(v) == Q("1/3");
    }
    if (third) EXPECT_EQ(p.ptas->scale_mode, "lcm");
    EXPECT_GE(p.prize, BruteForceOptimum(inst).prize);
    EXPECT_LE(p.strategy.cost, p.ptas->cost_bound);
  }
}

TEST(SolvePtasTest, LcmModeOnIntegersMatchesIntegerMode) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = testing::RandomInteger(seed, 12, 1, 300);
    const SolveResult a = SolvePtas(inst, Q("1/2"), {}, ScaleMode::kLcm);
    const SolveResult b = SolvePtas(inst, Q("1/2"), {}, ScaleMode::kInteger);
    EXPECT_EQ(a.prize, b.prize);
    EXPECT_EQ(a.strategy, b.strategy);
    EXPECT_EQ(a.ptas->truncated_bits, b.ptas->truncated_bits);
  }
}

TEST(SolvePtasTest, IncompatibleForcedMode) {
  const Instance inst = testing::Path3(Q("1/3"), 1, 1, 1, 2);
  EXPECT_THROW(SolvePtas(inst, 1, {}, ScaleMode::kInteger), Error);
  EXPECT_THROW(SolvePtas(inst, 1, {}, ScaleMode::kBinaryFraction), Error);
  EXPECT_NO_THROW(SolvePtas(inst, 1, {}, ScaleMode::kLcm));
  EXPECT_THROW(SolvePtas(inst, -1), Error);
}

TEST(SolvePtasTest, ContractsOnlyWhenExact) {
  // Costs 1 and 2 both truncate to zero at t = 2.
  const Instance pos = testing::Path3(1, 2, 5, 5, 16);
  const SolveResult a = SolvePtas(pos, Q("1/2"));
  EXPECT_EQ(a.ptas->truncated_bits, 2);
  EXPECT_TRUE(a.ptas->contracted);
  EXPECT_EQ(a.prize, 10);
  const Instance neg = testing::Path3(1, 2, -5, 1, 16);
  const SolveResult b = SolvePtas(neg, Q("1/2"));
  EXPECT_FALSE(b.ptas->contracted);
  EXPECT_EQ(b.prize, 0);
}

}  // namespace
}  // namespace goas
