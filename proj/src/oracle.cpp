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

#include "goas/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "goas/error.hpp"

namespace goas {

namespace {

void CheckCap(const Instance& inst, int cap) {
  if (inst.edge_count() > cap) {
    throw Error(ErrorCode::kTooLarge,
                "oracle limited to n <= " + std::to_string(cap) + ", got n = " +
                    std::to_string(inst.edge_count()));
  }
}

// Walks the pre-order deciding each vertex in turn. A vertex is only
// reached when its parent is in the set; excluding it skips its subtree.
class SubtreeWalker {
 public:
  SubtreeWalker(const Instance& inst,
                const std::function<void(std::span<const VertexId>)>& visit)
      : visit_(visit), order_(inst.pre_order()) {
    std::vector<int> size(inst.vertex_count(), 1);
    for (VertexId v : inst.post_order()) {
      if (v != inst.root()) size[inst.parent(v)] += size[v];
    }
    skip_.resize(order_.size());
    for (std::size_t pos = 0; pos < order_.size(); ++pos) {
      skip_[pos] = pos + size[order_[pos]];
    }
  }

  std::uint64_t Run() {
    current_.push_back(order_[0]);
    Step(1);
    return count_;
  }

 private:
  void Step(std::size_t pos) {
    if (pos == order_.size()) {
      ++count_;
      visit_(current_);
      return;
    }
    Step(skip_[pos]);
    current_.push_back(order_[pos]);
    Step(pos + 1);
    current_.pop_back();
  }

  const std::function<void(std::span<const VertexId>)>& visit_;
  const std::vector<VertexId>& order_;
  std::vector<std::size_t> skip_;
  std::vector<VertexId> current_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t EnumerateRootedSubtrees(
    const Instance& inst,
    const std::function<void(std::span<const VertexId>)>& visit, int cap) {
  CheckCap(inst, cap);
  return SubtreeWalker(inst, visit).Run();
}

SolveResult BruteForceOptimum(const Instance& inst, int cap) {
  CheckCap(inst, cap);
  bool found = false;
  Rational best_prize;
  std::vector<VertexId> best_set;
  std::vector<VertexId> sorted;
  Rational cost;
  Rational prize;
  EnumerateRootedSubtrees(
      inst,
      [&](std::span<const VertexId> set) {
        cost = 0;
        prize = 0;
        for (VertexId v : set) {
          cost += inst.cost(v);
          prize += inst.prize(v);
        }
        if (cost > inst.budget()) return;
        if (found && prize < best_prize) return;
        sorted.assign(set.begin(), set.end());
        std::sort(sorted.begin(), sorted.end());
        if (!found || prize > best_prize || sorted < best_set) {
          found = true;
          best_prize = prize;
          best_set = sorted;
        }
      },
      cap);

  SolveResult result;
  result.solver = "oracle";
  result.strategy = MakeStrategy(inst, best_set);
  result.prize = result.strategy.prize;
  result.goas_met = result.prize >= inst.threshold();
  result.effective_budget = inst.budget();
  result.parameters.emplace_back("cap", std::to_string(cap));
  return result;
}

}  // namespace goas
