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

// Acceptance gate: one PASS/FAIL line per criterion; nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "goas/dp.hpp"
#include "goas/generator.hpp"
#include "goas/io.hpp"
#include "goas/oracle.hpp"
#include "goas/ptas.hpp"
#include "goas/reductions.hpp"
#include "goas/tree.hpp"

namespace goas {
namespace {

// Pinned limits.
constexpr int kOracleInstancesPerClass = 500;
constexpr int kMaxOracleN = 12;
constexpr double kOracleSeconds = 60.0;
constexpr int kOpCountInstances = 50;
constexpr double kBudgetDoublingLimit = 5.0;
constexpr double kSizeDoublingLimit = 10.0;
constexpr int kTimingRepeats = 3;
constexpr int kPtasInstances = 300;

int failures = 0;

void Line(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id,
              what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void Info(const std::string& text) {
  std::printf("    %s\n", text.c_str());
  std::fflush(stdout);
}

double Seconds(const std::function<void()>& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

double MinSeconds(const std::function<void()>& f) {
  double best = Seconds(f);
  for (int r = 1; r < kTimingRepeats; ++r) best = std::min(best, Seconds(f));
  return best;
}

GeneratorConfig BaseConfig(std::uint64_t seed, int n) {
  GeneratorConfig c;
  c.seed = seed;
  c.n = n;
  c.shape = static_cast<Shape>(seed % 4);
  c.arity = 2 + static_cast<int>(seed % 3);
  c.prize_max = 12;
  if (seed % 3 == 0) {
    c.allow_negative_prizes = true;
    c.prize_min = -6;
  }
  c.prize_denominator = 1 + static_cast<std::int64_t>(seed % 2);
  c.budget = Rational(1 + seed % 4, 5);
  return c;
}

std::string Fraction(long good, long total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

// 1. Exact solvers equal the enumeration oracle.
void OracleEquivalence() {
  struct Class {
    std::string name;
    std::function<Instance(std::uint64_t, int)> make;
    std::function<SolveResult(const Instance&)> solve;
  };
  const std::vector<Rational> two{Rational(1, 3), Rational(5, 2)};
  const std::vector<Rational> three{Rational(2, 7), 1, Rational(9, 4)};
  const std::vector<Class> classes{
      {"constant",
       [](std::uint64_t s, int n) {
         GeneratorConfig c = BaseConfig(s, n);
         c.cost_model = CostModel::kConstant;
         c.constant_cost = s % 2 ? Rational(1) : Rational(3, 2);
         return Generate(c);
       },
       [](const Instance& inst) {
         const auto costs = DistinctCosts(inst);
         return SolveConstant(inst, costs.empty() ? Rational(1) : costs[0]);
       }},
      {"integer",
       [](std::uint64_t s, int n) {
         GeneratorConfig c = BaseConfig(s, n);
         c.cost_max = 9;
         return Generate(c);
       },
       [](const Instance& inst) { return SolveInteger(inst); }},
      {"rational d=2",
       [&](std::uint64_t s, int n) {
         GeneratorConfig c = BaseConfig(s, n);
         c.cost_model = CostModel::kAlphabet;
         c.alphabet = two;
         return Generate(c);
       },
       [&](const Instance& inst) { return SolveRationalD(inst, two); }},
      {"rational d=3",
       [&](std::uint64_t s, int n) {
         GeneratorConfig c = BaseConfig(s, n);
         c.cost_model = CostModel::kAlphabet;
         c.alphabet = three;
         return Generate(c);
       },
       [&](const Instance& inst) { return SolveRationalD(inst, three); }},
  };
  std::ostringstream detail;
  bool ok = true;
  const double secs = Seconds([&] {
    for (const Class& k : classes) {
      int agree = 0;
      for (int s = 1; s <= kOracleInstancesPerClass; ++s) {
        const Instance inst = k.make(s, s % (kMaxOracleN + 1));
        const SolveResult r = k.solve(inst);
        const SolveResult o = BruteForceOptimum(inst);
        const CostPrize cp = StrategyCostPrize(inst, r.strategy.vertices);
        if (r.prize == o.prize && cp.prize == r.prize && cp.cost <= inst.budget()) {
          ++agree;
        }
      }
      ok = ok && agree == kOracleInstancesPerClass;
      detail << k.name << " " << Fraction(agree, kOracleInstancesPerClass) << ", ";
    }
  });
  ok = ok && secs < kOracleSeconds;
  detail << secs << " s";
  Line(1, ok, "exact solvers equal the oracle", detail.str());
}

// 2. Constant-cost table work equals 2|E|m^2 exactly.
void ConstantOpCount() {
  std::mt19937_64 rng(2);
  int equal = 0, derived = 0, bounded = 0;
  std::string first_miss;
  for (int i = 0; i < kOpCountInstances; ++i) {
    const int edges = static_cast<int>(UniformInt(rng, 4, 49));  // n in 5..50
    const std::int64_t m = UniformInt(rng, 1, edges - 1);
    GeneratorConfig c = BaseConfig(100 + i, edges);
    c.cost_model = CostModel::kConstant;
    c.budget_policy = BudgetPolicy::kAbsolute;
    c.budget = m;
    const Instance inst = Generate(c);
    const SolveResult r = SolveConstant(inst, 1);
    const std::uint64_t e = static_cast<std::uint64_t>(edges);
    const std::uint64_t mm = static_cast<std::uint64_t>(m);
    const std::uint64_t stated = 2 * e * mm * mm;
    if (r.ops.total() == stated) {
      ++equal;
    } else if (first_miss.empty()) {
      first_miss = "|E|=" + std::to_string(e) + " m=" + std::to_string(m) +
                   ": counted " + std::to_string(r.ops.total()) + " vs " +
                   std::to_string(stated);
    }
    if (r.ops.total() == e * mm * (mm + 1)) ++derived;
    if (r.ops.total() <= stated) ++bounded;
  }
  Line(2, equal == kOpCountInstances, "constant-cost ops equal 2|E|m^2",
       Fraction(equal, kOpCountInstances) + " equal" +
           (first_miss.empty() ? "" : "; first miss " + first_miss));
  Info("counted ops equal |E|m(m+1) on " + Fraction(derived, kOpCountInstances) +
       ", within 2|E|m^2 on " + Fraction(bounded, kOpCountInstances));
}

// 3. Integer-cost bound and quadratic growth in B.
void IntegerBound() {
  std::mt19937_64 rng(3);
  int within = 0;
  for (int i = 0; i < kOpCountInstances; ++i) {
    GeneratorConfig c = BaseConfig(200 + i, static_cast<int>(UniformInt(rng, 1, 60)));
    c.cost_max = 12;
    c.budget_policy = BudgetPolicy::kAbsolute;
    c.budget = UniformInt(rng, 0, 200);
    const Instance inst = Generate(c);
    const SolveResult r = SolveInteger(inst);
    const Rational b = Floor(inst.budget());
    if (Rational(r.ops.total()) <= 2 * inst.edge_count() * b * b) ++within;
  }
  GeneratorConfig c = BaseConfig(7, 400);
  c.cost_max = 10;
  c.budget_policy = BudgetPolicy::kAbsolute;
  SolverOptions serial;
  serial.kernel = Kernel::kSerial;
  c.budget = 600;
  const Instance small = Generate(c);
  c.budget = 1200;
  const Instance large = Generate(c);
  const double t1 = MinSeconds([&] { SolveInteger(small, serial); });
  const double t2 = MinSeconds([&] { SolveInteger(large, serial); });
  const double ratio = t2 / t1;
  std::ostringstream d;
  d << Fraction(within, kOpCountInstances) << " within 2|E|B^2; B 600->1200 at n=400: "
    << t1 << " s -> " << t2 << " s, ratio " << ratio << " (limit "
    << kBudgetDoublingLimit << ")";
  Line(3, within == kOpCountInstances && ratio <= kBudgetDoublingLimit,
       "integer ops within 2|E|B^2, time ~B^2", d.str());
}

// 4. PTAS guarantee and cubic growth in n.
void PtasGuarantee() {
  const std::vector<Rational> eps{Rational(1, 4), Rational(1, 2), 1};
  int good = 0;
  for (int s = 1; s <= kPtasInstances; ++s) {
    GeneratorConfig c = BaseConfig(300 + s, 1 + s % kMaxOracleN);
    c.cost_max = 1000;
    const Instance inst = Generate(c);
    const Rational& e = eps[s % eps.size()];
    const SolveResult p = SolvePtas(inst, e);
    const SolveResult o = BruteForceOptimum(inst);
    const CostPrize cp = StrategyCostPrize(inst, p.strategy.vertices);
    if (p.prize >= o.prize && cp.cost <= (1 + e) * inst.budget() &&
        cp.prize == p.prize) {
      ++good;
    }
  }
  // B = 2^16 n / eps makes eps B / n an exact power of two, so the reduced
  // budget is n / eps at both sizes.
  auto make = [](int n) {
    GeneratorConfig c;
    c.seed = 4;
    c.n = n;
    c.cost_max = 1'000'000;
    c.budget_policy = BudgetPolicy::kAbsolute;
    c.budget = Rational(2 * n) * 65536;
    return Generate(c);
  };
  SolverOptions serial;
  serial.kernel = Kernel::kSerial;
  const Instance small = make(250), large = make(500);
  const double t1 = MinSeconds([&] { SolvePtas(small, Rational(1, 2), serial); });
  const double t2 = MinSeconds([&] { SolvePtas(large, Rational(1, 2), serial); });
  const double ratio = t2 / t1;
  std::ostringstream d;
  d << Fraction(good, kPtasInstances) << " runs with prize >= OPT and cost <= (1+eps)B; "
    << "n 250->500 at eps=1/2: " << t1 << " s -> " << t2 << " s, ratio " << ratio
    << " (limit " << kSizeDoublingLimit << ")";
  Line(4, good == kPtasInstances && ratio <= kSizeDoublingLimit,
       "PTAS guarantee and time ~n^3", d.str());
}

// 5. d = 1 rational solver equals the constant solver.
void Specialization() {
  int same = 0;
  for (int s = 1; s <= 100; ++s) {
    GeneratorConfig c = BaseConfig(500 + s, 1 + s % 30);
    c.cost_model = CostModel::kConstant;
    c.constant_cost = Rational(1 + s % 5, 1 + s % 3);
    const Instance inst = Generate(c);
    if (SolveRationalD(inst, {c.constant_cost}).prize ==
        SolveConstant(inst, c.constant_cost).prize) {
      ++same;
    }
  }
  Line(5, same == 100, "d=1 equals constant solver", Fraction(same, 100));
}

// 6. Contracting zero-cost edges keeps the optimum at every budget.
void ContractionSoundness() {
  int instances = 0, same = 0, checks = 0;
  for (std::uint64_t seed = 1; instances < 100; ++seed) {
    GeneratorConfig c = BaseConfig(600 + seed, 2 + seed % 11);
    c.allow_negative_prizes = false;
    c.prize_min = 0;
    c.cost_min = 0;
    c.cost_max = 3;
    Instance inst = Generate(c);
    bool zero = false;
    for (VertexId v = 0; v < inst.vertex_count(); ++v) {
      zero = zero || (v != inst.root() && inst.cost(v) == 0);
    }
    if (!zero) continue;
    ++instances;
    const Rational total = inst.TotalCost();
    for (int k = 0; k < 5; ++k) {
      const Instance at = inst.WithBudget(total * k / 4);
      const Contraction con = ContractZeroCostEdges(at);
      ++checks;
      if (BruteForceOptimum(at).prize == SolveInteger(con.contracted).prize) ++same;
    }
  }
  Line(6, same == checks, "zero-cost contraction preserves the optimum",
       Fraction(same, checks) + " instance-budget pairs");
}

// 7. Knapsack decisions through the star reduction.
void KnapsackReduction() {
  std::mt19937_64 rng(7);
  int agree = 0;
  for (int i = 0; i < 100; ++i) {
    KnapsackInput kp;
    const int k = static_cast<int>(UniformInt(rng, 0, 12));
    std::int64_t total = 0;
    for (int j = 0; j < k; ++j) {
      kp.items.push_back({UniformInt(rng, 1, 40), UniformInt(rng, 0, 60)});
      total += kp.items.back().weight.get_num().get_si();
    }
    kp.capacity = UniformInt(rng, 0, total);
    Rational best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
      Rational w = 0, v = 0;
      for (int j = 0; j < k; ++j) {
        if (mask >> j & 1) {
          w += kp.items[j].weight;
          v += kp.items[j].value;
        }
      }
      if (w <= kp.capacity) best = std::max(best, v);
    }
    bool all = true;
    for (const Rational& g : {best, Rational(best + 1), Rational(best / 2)}) {
      const Instance star = KnapsackToStar(kp, g);
      all = all && DecideGoas(star, SolveInteger(star)) == (best >= g);
    }
    if (all) ++agree;
  }
  Line(7, agree == 100, "knapsack decisions agree with subset enumeration",
       Fraction(agree, 100) + " knapsacks, 3 thresholds each");
}

// 8. Unrooted trees: rooting plus the integer solver equals edge subsets.
void GeneralTrees() {
  std::mt19937_64 rng(8);
  int agree = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = static_cast<int>(UniformInt(rng, 1, 10));
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back("x" + std::to_string(v));
    std::vector<GeneralEdge> edges;
    Rational total = 0;
    for (int v = 1; v < n; ++v) {
      const int u = static_cast<int>(UniformInt(rng, 0, v - 1));
      edges.push_back({names[u], names[v], UniformInt(rng, -2, 9), UniformInt(rng, 1, 6)});
      total += edges.back().cost;
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    const GeneralTree tree(names, edges, total * UniformInt(rng, 0, 4) / 4, 0);
    const std::string root = names[UniformInt(rng, 0, n - 1)];
    Rational best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << edges.size()); ++mask) {
      std::unordered_map<std::string, bool> in{{root, true}};
      for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t j = 0; j < edges.size(); ++j) {
          if ((mask >> j & 1) && in[edges[j].a] != in[edges[j].b]) {
            in[edges[j].a] = in[edges[j].b] = true;
            grew = true;
          }
        }
      }
      Rational w = 0, cost = 0;
      bool connected = true;
      for (std::size_t j = 0; j < edges.size(); ++j) {
        if (!(mask >> j & 1)) continue;
        connected = connected && in[edges[j].a];
        w += edges[j].prize;
        cost += edges[j].cost;
      }
      if (connected && cost <= tree.budget()) best = std::max(best, w);
    }
    if (SolveInteger(RootGeneralTree(tree, root)).prize == best) ++agree;
  }
  Line(8, agree == 100, "rooted general trees equal edge-subset enumeration",
       Fraction(agree, 100));
}

// 9. Byte-identical structured output on repeated runs and across kernels.
void Determinism() {
  int same = 0, total = 0;
  SolverOptions serial, parallel;
  serial.kernel = Kernel::kSerial;
  parallel.kernel = Kernel::kParallel;
  const std::vector<Rational> two{Rational(1, 3), Rational(5, 2)};
  for (int s = 1; s <= 20; ++s) {
    GeneratorConfig c = BaseConfig(900 + s, 10 + s * 7);
    c.cost_max = 40;
    const std::string g1 = SerializeInstance(Generate(c));
    const std::string g2 = SerializeInstance(Generate(c));
    ++total;
    if (g1 == g2) ++same;
    const Instance inst = ParseInstance(g1);
    GeneratorConfig a = c;
    a.cost_model = CostModel::kAlphabet;
    a.alphabet = two;
    a.n = 6 + s % 10;
    const Instance alpha = Generate(a);
    GeneratorConfig k = c;
    k.cost_model = CostModel::kConstant;
    const Instance constant = Generate(k);
    const std::vector<std::function<std::string(const SolverOptions&)>> runs{
        [&](const SolverOptions& o) {
          return FormatStructured(constant, SolveConstant(constant, 1, o));
        },
        [&](const SolverOptions& o) {
          return FormatStructured(inst, SolveInteger(inst, o));
        },
        [&](const SolverOptions& o) {
          return FormatStructured(alpha, SolveRationalD(alpha, two, o));
        },
        [&](const SolverOptions& o) {
          return FormatStructured(inst, SolvePtas(inst, Rational(1, 3), o));
        },
        [&](const SolverOptions&) {
          return FormatStructured(alpha, BruteForceOptimum(alpha));
        },
    };
    for (const auto& run : runs) {
      const std::string first = run(parallel);
      ++total;
      if (first == run(parallel) && first == run(serial)) ++same;
    }
  }
  Line(9, same == total, "repeated runs give byte-identical output",
       Fraction(same, total) + " generator and solver comparisons");
}

}  // namespace
}  // namespace goas

int main() {
  const std::vector<void (*)()> criteria{
      goas::OracleEquivalence, goas::ConstantOpCount,     goas::IntegerBound,
      goas::PtasGuarantee,     goas::Specialization,      goas::ContractionSoundness,
      goas::KnapsackReduction, goas::GeneralTrees,        goas::Determinism};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      goas::Line(static_cast<int>(i + 1), false, "threw", e.what());
    }
  }
  std::printf("%d criterion(s) failed\n", goas::failures);
  return goas::failures == 0 ? 0 : 1;
}
