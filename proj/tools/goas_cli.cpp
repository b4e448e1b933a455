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

// goas: solve, decide, enumerate, generate, verify and benchmark GOAS
// instances from the command line.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "goas/dp.hpp"
#include "goas/error.hpp"
#include "goas/generator.hpp"
#include "goas/io.hpp"
#include "goas/oracle.hpp"
#include "goas/ptas.hpp"

namespace goas {
namespace {

constexpr int kExitNo = 1;
constexpr int kExitError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational RationalFlag(const std::string& flag, const std::string& text) {
  auto q = ParseRational(text);
  if (!q) throw UsageError(flag + ": '" + text + "' is not a rational");
  return *q;
}

std::vector<Rational> RationalList(const std::string& flag,
                                   const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    out.push_back(RationalFlag(flag, item));
  }
  return out;
}

struct SolveFlags {
  std::string input;
  std::string mode = "auto";
  std::string epsilon;
  std::string output = "text";
  std::string kernel = "parallel";
  int max_alphabet = SolverOptions{}.max_alphabet;
};

void AddSolveFlags(CLI::App* cmd, SolveFlags& f) {
  cmd->add_option("--input,-i", f.input, "instance or container document")
      ->required();
  cmd->add_option("--mode", f.mode, "solver")
      ->check(CLI::IsMember({"auto", "constant", "integer", "rational-d", "ptas"}));
  cmd->add_option("--epsilon", f.epsilon, "PTAS accuracy (rational)");
  cmd->add_option("--output", f.output)->check(CLI::IsMember({"text", "structured"}));
  cmd->add_option("--kernel", f.kernel)->check(CLI::IsMember({"serial", "parallel"}));
  cmd->add_option("--max-alphabet", f.max_alphabet,
                  "largest cost alphabet for the d-rational solver")
      ->check(CLI::PositiveNumber);
}

SolverOptions OptionsFrom(const SolveFlags& f) {
  SolverOptions o;
  o.kernel = f.kernel == "serial" ? Kernel::kSerial : Kernel::kParallel;
  o.max_alphabet = f.max_alphabet;
  return o;
}

bool HasZeroCostEdge(const Instance& inst) {
  for (VertexId v = 0; v < inst.vertex_count(); ++v) {
    if (v != inst.root() && inst.cost(v) == 0) return true;
  }
  return false;
}

SolveResult RunPtas(const Instance& inst, const SolveFlags& f,
                    const SolverOptions& o) {
  if (f.epsilon.empty()) {
    throw UsageError("this instance needs the PTAS; pass --epsilon");
  }
  return SolvePtas(inst, RationalFlag("--epsilon", f.epsilon), o);
}

SolveResult RunRationalD(const Instance& inst, const SolverOptions& o) {
  auto alphabet = [](const Instance& t) {
    return t.declared_alphabet().empty() ? DistinctCosts(t) : t.declared_alphabet();
  };
  if (HasZeroCostEdge(inst) && ContractionIsExact(inst)) {
    const Contraction c = ContractZeroCostEdges(inst);
    SolveResult r = SolveRationalD(c.contracted, alphabet(c.contracted), o);
    r.strategy = ExpandStrategy(c, inst, r.strategy);
    r.prize = r.strategy.prize;
    r.parameters.emplace_back("contracted", "true");
    return r;
  }
  return SolveRationalD(inst, alphabet(inst), o);
}

SolveResult Solve(const Instance& inst, const SolveFlags& f) {
  const SolverOptions o = OptionsFrom(f);
  if (f.mode == "constant") {
    const Rational c = inst.edge_count() ? inst.cost(inst.children(inst.root())[0])
                                         : Rational(1);
    return SolveConstant(inst, c, o);
  }
  if (f.mode == "integer") return SolveInteger(inst, o);
  if (f.mode == "rational-d") return RunRationalD(inst, o);
  if (f.mode == "ptas") return RunPtas(inst, f, o);

  if (inst.edge_count() == 0) return SolveInteger(inst, o);
  const std::vector<Rational> costs = DistinctCosts(inst);
  if (costs.size() == 1 && costs[0] > 0) return SolveConstant(inst, costs[0], o);
  bool integral = true;
  for (const Rational& c : costs) integral = integral && IsInteger(c);
  if (integral) return SolveInteger(inst, o);
  const bool zero = HasZeroCostEdge(inst);
  if (zero && !ContractionIsExact(inst)) return RunPtas(inst, f, o);
  const std::size_t d = costs.size() - (zero ? 1 : 0);
  const std::size_t declared = inst.declared_alphabet().size();
  if (std::max(d, declared) <= static_cast<std::size_t>(f.max_alphabet)) {
    return RunRationalD(inst, o);
  }
  return RunPtas(inst, f, o);
}

void Print(const Instance& inst, const SolveResult& r, const std::string& output) {
  std::cout << (output == "structured" ? FormatStructured(inst, r)
                                       : FormatText(inst, r));
}

int OracleCap() {
  const char* env = std::getenv("GOAS_ORACLE_CAP");
  if (!env || !*env) return kDefaultOracleCap;
  char* end = nullptr;
  const long cap = std::strtol(env, &end, 10);
  if (*end || cap < 0 || cap > 62) {
    throw UsageError(std::string("GOAS_ORACLE_CAP='") + env +
                     "' is not an integer in 0..62");
  }
  return static_cast<int>(cap);
}

// --- gen --------------------------------------------------------------

struct GenFlags {
  GeneratorConfig config;
  std::string shape = "random";
  std::string cost = "uniform";
  std::string constant_cost = "1";
  std::string alphabet;
  std::string budget;
  std::string budget_fraction = "1/2";
  std::string threshold = "0";
  std::string out;
};

void AddGenFlags(CLI::App* cmd, GenFlags& g) {
  cmd->add_option("--seed", g.config.seed);
  cmd->add_option("--n", g.config.n, "non-root vertices");
  cmd->add_option("--shape", g.shape)
      ->check(CLI::IsMember({"random", "path", "star", "b-ary", "bary"}));
  cmd->add_option("--arity", g.config.arity);
  cmd->add_option("--cost", g.cost)
      ->check(CLI::IsMember({"constant", "uniform", "alphabet"}));
  cmd->add_option("--cost-value", g.constant_cost, "constant cost");
  cmd->add_option("--cost-min", g.config.cost_min);
  cmd->add_option("--cost-max", g.config.cost_max);
  cmd->add_option("--alphabet", g.alphabet, "comma-separated costs");
  cmd->add_option("--alphabet-weights", g.config.alphabet_weights)->delimiter(',');
  cmd->add_option("--prize-min", g.config.prize_min);
  cmd->add_option("--prize-max", g.config.prize_max);
  cmd->add_option("--prize-den", g.config.prize_denominator);
  cmd->add_flag("--negative-prizes", g.config.allow_negative_prizes);
  auto* abs = cmd->add_option("--budget", g.budget, "absolute budget");
  cmd->add_option("--budget-fraction", g.budget_fraction,
                  "budget as a fraction of total cost")
      ->excludes(abs);
  cmd->add_option("--threshold", g.threshold);
  cmd->add_option("--out,-o", g.out, "output file (default stdout)");
}

GeneratorConfig ConfigFrom(GenFlags g) {
  GeneratorConfig c = g.config;
  c.shape = *ParseShape(g.shape);
  c.cost_model = *ParseCostModel(g.cost);
  c.constant_cost = RationalFlag("--cost-value", g.constant_cost);
  if (!g.alphabet.empty()) c.alphabet = RationalList("--alphabet", g.alphabet);
  if (!g.budget.empty()) {
    c.budget_policy = BudgetPolicy::kAbsolute;
    c.budget = RationalFlag("--budget", g.budget);
  } else {
    c.budget = RationalFlag("--budget-fraction", g.budget_fraction);
  }
  c.threshold = RationalFlag("--threshold", g.threshold);
  return c;
}

// --- verify -----------------------------------------------------------

Instance VerifyInstance(const std::string& mode, std::uint64_t seed, int n) {
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
  c.budget = Rational(1 + seed % 4, 5);
  if (mode == "constant") {
    c.cost_model = CostModel::kConstant;
    c.constant_cost = seed % 2 ? Rational(1) : Rational(3, 2);
  } else if (mode == "integer") {
    c.cost_min = 1;
    c.cost_max = 10;
  } else if (mode == "rational-d") {
    c.cost_model = CostModel::kAlphabet;
    c.alphabet = seed % 2 ? std::vector<Rational>{Rational(1, 3), Rational(5, 2)}
                          : std::vector<Rational>{Rational(2, 7), 1, Rational(9, 4)};
  } else {
    c.cost_min = 1;
    c.cost_max = 200;
  }
  return Generate(c);
}

// Empty string when the solver agrees with the oracle.
std::string VerifyOne(const std::string& mode, std::uint64_t seed, int n,
                      const Rational& eps, const SolverOptions& o) {
  const Instance inst = VerifyInstance(mode, seed, n);
  const SolveResult truth = BruteForceOptimum(inst, OracleCap());
  std::optional<SolveResult> r;
  if (mode == "constant") {
    r = SolveConstant(inst, DistinctCosts(inst).empty() ? Rational(1)
                                                        : DistinctCosts(inst)[0], o);
  } else if (mode == "integer") {
    r = SolveInteger(inst, o);
  } else if (mode == "rational-d") {
    r = SolveRationalD(inst, DistinctCosts(inst).empty() ? std::vector<Rational>{1}
                                                         : DistinctCosts(inst), o);
  } else {
    r = SolvePtas(inst, eps, o);
  }
  std::ostringstream why;
  const CostPrize check = StrategyCostPrize(inst, r->strategy.vertices);
  if (check.prize != r->prize) why << " strategy prize " << FormatRational(check.prize);
  if (mode == "ptas") {
    if (r->prize < truth.prize) why << " prize below optimum";
    if (r->strategy.cost > (1 + eps) * inst.budget()) why << " cost over (1+eps)B";
  } else {
    if (r->prize != truth.prize) why << " prize " << FormatRational(r->prize);
    if (r->strategy.cost > inst.budget()) why << " over budget";
  }
  if (why.str().empty()) return "";
  return mode + " seed " + std::to_string(seed) + ": oracle " +
         FormatRational(truth.prize) + why.str();
}

int RunVerify(const std::string& seeds, int n, const std::string& modes,
              const std::string& epsilon, const std::string& kernel) {
  std::uint64_t lo = 0, hi = 0;
  const auto dots = seeds.find("..");
  try {
    lo = std::stoull(seeds.substr(0, dots));
    hi = dots == std::string::npos ? lo : std::stoull(seeds.substr(dots + 2));
  } catch (const std::exception&) {
    throw UsageError("--seeds: expected A..B, got '" + seeds + "'");
  }
  if (hi < lo) throw UsageError("--seeds: empty range " + seeds);
  std::vector<std::string> mode_list;
  std::stringstream in(modes);
  for (std::string m; std::getline(in, m, ',');) {
    if (m != "constant" && m != "integer" && m != "rational-d" && m != "ptas") {
      throw UsageError("--modes: unknown mode '" + m + "'");
    }
    mode_list.push_back(m);
  }
  const Rational eps = RationalFlag("--epsilon", epsilon);
  SolverOptions o;
  o.kernel = kernel == "serial" ? Kernel::kSerial : Kernel::kParallel;
  OracleCap();  // reject a bad override before fanning out

  const std::int64_t count = static_cast<std::int64_t>(hi - lo + 1);
  const std::int64_t jobs = count * static_cast<std::int64_t>(mode_list.size());
  std::vector<std::string> failures(static_cast<std::size_t>(jobs));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t j = 0; j < jobs; ++j) {
    const std::string& mode = mode_list[static_cast<std::size_t>(j / count)];
    const std::uint64_t seed = lo + static_cast<std::uint64_t>(j % count);
    try {
      failures[j] = VerifyOne(mode, seed, n, eps, o);
    } catch (const std::exception& e) {
      failures[j] = mode + " seed " + std::to_string(seed) + ": " + e.what();
    }
  }
  std::size_t bad = 0;
  for (const std::string& f : failures) {
    if (f.empty()) continue;
    ++bad;
    std::cout << f << '\n';
  }
  std::cout << jobs << " runs, " << bad << " mismatches\n";
  return bad == 0 ? 0 : kExitNo;
}

// --- bench ------------------------------------------------------------

struct BenchFlags {
  std::string sweep = "B";
  std::string values;
  int n = 200;
  std::string budget = "100";
  std::string epsilon = "1/2";
  std::uint64_t seed = 1;
  int repeats = 3;
  std::string kernel = "parallel";
};

std::vector<std::string> DefaultValues(const std::string& sweep) {
  if (sweep == "n") return {"50", "100", "200", "400"};
  if (sweep == "B") return {"50", "100", "200", "400"};
  if (sweep == "m") return {"10", "20", "40", "80"};
  return {"1", "1/2", "1/4", "1/8"};
}

int RunBench(const BenchFlags& b) {
  std::vector<std::string> values;
  if (b.values.empty()) {
    values = DefaultValues(b.sweep);
  } else {
    std::stringstream in(b.values);
    for (std::string v; std::getline(in, v, ',');) values.push_back(v);
  }
  SolverOptions o;
  o.kernel = b.kernel == "serial" ? Kernel::kSerial : Kernel::kParallel;
  std::cout << "sweep,value,n,budget,solver,ms,additions,comparisons,ops,"
               "op_bound,within_bound\n";
  for (const std::string& value : values) {
    const Rational v = RationalFlag("--values", value);
    GeneratorConfig c;
    c.seed = b.seed;
    c.n = b.n;
    c.budget_policy = BudgetPolicy::kAbsolute;
    c.budget = RationalFlag("--budget", b.budget);
    c.cost_min = 1;
    c.cost_max = 10;
    Rational eps = RationalFlag("--epsilon", b.epsilon);
    if (b.sweep == "n") {
      if (!IsInteger(v) || v < 1 || v > 10'000'000) {
        throw UsageError("n values must be integers in 1..10^7");
      }
      c.n = static_cast<int>(v.get_num().get_si());
    } else if (b.sweep == "B") {
      c.budget = v;
    } else if (b.sweep == "m") {
      c.cost_model = CostModel::kConstant;
      c.constant_cost = 1;
      c.budget = v;
    } else {
      eps = v;
      c.cost_max = 1'000'000;
      c.budget_policy = BudgetPolicy::kFractionOfTotalCost;
      c.budget = Rational(1, 2);
    }
    const Instance inst = Generate(c);
    SolveResult r;
    double best_ms = 0;
    for (int rep = 0; rep < std::max(1, b.repeats); ++rep) {
      const auto start = std::chrono::steady_clock::now();
      if (b.sweep == "m") {
        r = SolveConstant(inst, 1, o);
      } else if (b.sweep == "epsilon") {
        r = SolvePtas(inst, eps, o);
      } else {
        r = SolveInteger(inst, o);
      }
      const double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
      if (rep == 0 || ms < best_ms) best_ms = ms;
    }
    const bool within = !r.op_bound || Rational(r.ops.total()) <= *r.op_bound;
    std::cout << b.sweep << ',' << value << ',' << inst.edge_count() << ','
              << FormatRational(inst.budget()) << ',' << r.solver << ','
              << best_ms << ',' << r.ops.additions << ',' << r.ops.comparisons
              << ',' << r.ops.total() << ','
              << (r.op_bound ? FormatRational(*r.op_bound) : "none") << ','
              << (within ? "true" : "false") << '\n';
  }
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Game-over attack strategy solvers for weighted rooted trees"};
  app.require_subcommand(1);

  SolveFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "solve the optimization problem");
  AddSolveFlags(solve, solve_flags);

  SolveFlags decide_flags;
  auto* decide = app.add_subcommand(
      "decide", "is there a strategy within budget reaching the threshold? "
                "exit 0 = yes, 1 = no");
  AddSolveFlags(decide, decide_flags);

  std::string oracle_input, oracle_output = "text";
  auto* oracle = app.add_subcommand(
      "oracle", "exhaustive enumeration (cap from GOAS_ORACLE_CAP, default 20)");
  oracle->add_option("--input,-i", oracle_input)->required();
  oracle->add_option("--output", oracle_output)
      ->check(CLI::IsMember({"text", "structured"}));

  GenFlags gen_flags;
  auto* gen = app.add_subcommand("gen", "write a seeded random instance");
  AddGenFlags(gen, gen_flags);

  std::string seeds = "1..100", modes = "constant,integer,rational-d,ptas",
              verify_eps = "1/2", verify_kernel = "parallel";
  int verify_n = 10;
  auto* verify = app.add_subcommand("verify", "solver-versus-oracle sweep");
  verify->add_option("--seeds", seeds, "inclusive range A..B");
  verify->add_option("--n", verify_n)->check(CLI::Range(0, 20));
  verify->add_option("--modes", modes, "comma-separated solvers");
  verify->add_option("--epsilon", verify_eps);
  verify->add_option("--kernel", verify_kernel)
      ->check(CLI::IsMember({"serial", "parallel"}));

  BenchFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "CSV of wall time and operation counts");
  bench->add_option("--sweep", bench_flags.sweep)
      ->check(CLI::IsMember({"n", "B", "m", "epsilon"}));
  bench->add_option("--values", bench_flags.values, "comma-separated sweep values");
  bench->add_option("--n", bench_flags.n, "fixed n")->check(CLI::PositiveNumber);
  bench->add_option("--budget", bench_flags.budget, "fixed budget");
  bench->add_option("--epsilon", bench_flags.epsilon);
  bench->add_option("--seed", bench_flags.seed);
  bench->add_option("--repeats", bench_flags.repeats);
  bench->add_option("--kernel", bench_flags.kernel)
      ->check(CLI::IsMember({"serial", "parallel"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "goas: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (*solve || *decide) {
      const SolveFlags& f = *solve ? solve_flags : decide_flags;
      const Instance inst = ParseAnyDocument(ReadFile(f.input));
      const SolveResult r = Solve(inst, f);
      if (*solve) {
        Print(inst, r, f.output);
        return 0;
      }
      const bool yes = DecideGoas(inst, r);
      std::cout << (yes ? "yes" : "no") << '\n';
      if (f.output == "structured") Print(inst, r, f.output);
      return yes ? 0 : kExitNo;
    }
    if (*oracle) {
      const Instance inst = ParseAnyDocument(ReadFile(oracle_input));
      Print(inst, BruteForceOptimum(inst, OracleCap()), oracle_output);
      return 0;
    }
    if (*gen) {
      const std::string text = SerializeInstance(Generate(ConfigFrom(gen_flags)));
      if (gen_flags.out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(gen_flags.out, std::ios::binary);
        if (!(out << text)) throw UsageError("cannot write " + gen_flags.out);
      }
      return 0;
    }
    if (*verify) {
      return RunVerify(seeds, verify_n, modes, verify_eps, verify_kernel);
    }
    return RunBench(bench_flags);
  } catch (const UsageError& e) {
    std::cerr << "goas: " << e.what() << '\n';
  } catch (const Error& e) {
    std::cerr << "goas: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace
}  // namespace goas

int main(int argc, char** argv) { return goas::Main(argc, argv); }
