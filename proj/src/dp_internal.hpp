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

#ifndef GOAS_SRC_DP_INTERNAL_HPP_
#define GOAS_SRC_DP_INTERNAL_HPP_

#include <cstdint>
#include <vector>

#include "goas/dp.hpp"
#include "goas/dp_tables.hpp"
#include "goas/tree.hpp"

namespace goas {

// Shared bottom-up driver for the three table families.
class TableBuilder {
 public:
  // `step[v]` is the integer weight of e(v); entries k = 0..max_index.
  static DpTables AtMost(const Instance& inst, TableKind kind,
                         std::vector<std::int64_t> step,
                         std::int64_t max_index, const SolverOptions& options);

  // `step[v]` is the alphabet index of e(v). The answer is the first
  // maximizing reachable box index with feasible[k] set.
  static DpTables Exact(const Instance& inst, std::vector<std::int64_t> step,
                        BoxShape box, const std::vector<char>& feasible,
                        const SolverOptions& options);
};

// Result fields shared by the exact solvers.
SolveResult ResultFromTables(const Instance& inst, const DpTables& tables,
                             std::string solver);

void CheckCellBudget(const Instance& inst, std::uint64_t width,
                     const SolverOptions& options);

}  // namespace goas

#endif  // GOAS_SRC_DP_INTERNAL_HPP_
