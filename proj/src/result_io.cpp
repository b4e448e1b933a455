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

#include <sstream>
#include <string>

#include "goas/io.hpp"

namespace goas {

namespace {

std::string StrategyNames(const Instance& inst, const Strategy& s) {
  std::string out;
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    if (i) out += ',';
    out += inst.name(s.vertices[i]);
  }
  return out;
}

}  // namespace

std::string FormatStructured(const Instance& inst, const SolveResult& r) {
  std::ostringstream out;
  out << "format=goas-result " << kFormatVersion << '\n'
      << "solver=" << r.solver << '\n'
      << "prize=" << FormatRational(r.prize) << '\n'
      << "cost=" << FormatRational(r.strategy.cost) << '\n'
      << "budget=" << FormatRational(inst.budget()) << '\n'
      << "effective_budget=" << FormatRational(r.effective_budget) << '\n'
      << "threshold=" << FormatRational(inst.threshold()) << '\n'
      << "goas_met=" << (r.goas_met ? "true" : "false") << '\n'
      << "strategy_size=" << r.strategy.vertices.size() << '\n'
      << "strategy=" << StrategyNames(inst, r.strategy) << '\n'
      << "additions=" << r.ops.additions << '\n'
      << "comparisons=" << r.ops.comparisons << '\n'
      << "ops=" << r.ops.total() << '\n'
      << "op_bound=" << (r.op_bound ? FormatRational(*r.op_bound) : "none")
      << '\n';
  for (const auto& [key, value] : r.parameters) {
    out << "param." << key << '=' << value << '\n';
  }
  if (r.ptas) {
    const PtasReport& p = *r.ptas;
    out << "ptas.epsilon=" << FormatRational(p.epsilon) << '\n'
        << "ptas.scale_mode=" << p.scale_mode << '\n'
        << "ptas.scale=" << p.scale.get_str() << '\n'
        << "ptas.requested_t=" << p.requested_t << '\n'
        << "ptas.truncated_bits=" << p.truncated_bits << '\n'
        << "ptas.cost_bound=" << FormatRational(p.cost_bound) << '\n'
        << "ptas.contracted=" << (p.contracted ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string FormatText(const Instance& inst, const SolveResult& r) {
  std::ostringstream out;
  out << "solver:    " << r.solver << '\n'
      << "prize:     " << FormatRational(r.prize) << '\n'
      << "cost:      " << FormatRational(r.strategy.cost) << " (budget "
      << FormatRational(inst.budget()) << ", effective "
      << FormatRational(r.effective_budget) << ")\n"
      << "strategy:  {" << StrategyNames(inst, r.strategy) << "} ("
      << r.strategy.vertices.size() << " vertices)\n"
      << "GOAS:      " << (r.goas_met ? "yes" : "no") << " (threshold "
      << FormatRational(inst.threshold()) << ")\n"
      << "ops:       " << r.ops.total() << " (" << r.ops.additions
      << " additions, " << r.ops.comparisons << " comparisons";
  if (r.op_bound) out << ", bound " << FormatRational(*r.op_bound);
  out << ")\n";
  if (!r.parameters.empty()) {
    out << "params:   ";
    for (const auto& [key, value] : r.parameters) out << ' ' << key << '=' << value;
    out << '\n';
  }
  if (r.ptas) {
    const PtasReport& p = *r.ptas;
    out << "ptas:      epsilon=" << FormatRational(p.epsilon)
        << " scale_mode=" << p.scale_mode << " scale=" << p.scale.get_str()
        << " requested_t=" << p.requested_t
        << " truncated_bits=" << p.truncated_bits
        << " cost_bound=" << FormatRational(p.cost_bound)
        << " contracted=" << (p.contracted ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace goas
