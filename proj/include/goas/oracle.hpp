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

#ifndef GOAS_ORACLE_HPP_
#define GOAS_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <span>

#include "goas/dp.hpp"
#include "goas/tree.hpp"

namespace goas {

inline constexpr int kDefaultOracleCap = 20;

// Calls `visit` once for every vertex set that contains the root and is
// closed under parents. The span lists the set in pre-order and is only
// valid during the call. Throws TooLarge when n exceeds `cap`.
std::uint64_t EnumerateRootedSubtrees(
    const Instance& inst,
    const std::function<void(std::span<const VertexId>)>& visit,
    int cap = kDefaultOracleCap);

// Exhaustive GOAS-OP: maximum prize over subtrees with cost <= B. Ties go
// to the lexicographically smallest sorted vertex-index set.
SolveResult BruteForceOptimum(const Instance& inst, int cap = kDefaultOracleCap);

}  // namespace goas

#endif  // GOAS_ORACLE_HPP_
