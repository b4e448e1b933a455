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

#include "goas/tree.hpp"

#include <algorithm>

#include "goas/error.hpp"

namespace goas {

std::optional<VertexId> Instance::Find(const std::string& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Rational Instance::TotalCost() const {
  Rational total = 0;
  for (const Rational& c : cost_) total += c;
  return total;
}

Instance Instance::WithBudget(const Rational& budget) const {
  if (budget < 0) {
    throw Error(ErrorCode::kNegativeBudget,
                "budget " + FormatRational(budget) + " is negative");
  }
  Instance copy = *this;
  copy.budget_ = Canonical(budget);
  return copy;
}

Instance Instance::WithThreshold(const Rational& threshold) const {
  Instance copy = *this;
  copy.threshold_ = Canonical(threshold);
  return copy;
}

Instance Instance::WithDeclaredAlphabet(std::vector<Rational> alphabet) const {
  Instance copy = *this;
  for (Rational& a : alphabet) a.canonicalize();
  copy.declared_alphabet_ = std::move(alphabet);
  return copy;
}

std::vector<VertexSpec> Instance::VertexSpecs() const {
  std::vector<VertexSpec> out;
  out.reserve(names_.size());
  for (VertexId v = 0; v < vertex_count(); ++v) {
    out.push_back({names_[v], prize_[v]});
  }
  return out;
}

std::vector<EdgeSpec> Instance::EdgeSpecs() const {
  std::vector<EdgeSpec> out;
  out.reserve(names_.size());
  for (VertexId v : pre_order_) {
    if (v == root_) continue;
    out.push_back({names_[parent_[v]], names_[v], cost_[v]});
  }
  return out;
}

bool operator==(const Instance& a, const Instance& b) {
  return a.names_ == b.names_ && a.root_ == b.root_ &&
         a.parent_ == b.parent_ && a.children_ == b.children_ &&
         a.prize_ == b.prize_ && a.cost_ == b.cost_ &&
         a.budget_ == b.budget_ && a.threshold_ == b.threshold_ &&
         a.declared_alphabet_ == b.declared_alphabet_;
}

Instance BuildInstance(const std::vector<VertexSpec>& vertices,
                       const std::vector<EdgeSpec>& edges,
                       const std::string& root, const Rational& budget,
                       const Rational& threshold) {
  Instance inst;
  const int count = static_cast<int>(vertices.size());
  inst.names_.reserve(count);
  inst.prize_.reserve(count);
  for (const VertexSpec& spec : vertices) {
    const VertexId id = static_cast<VertexId>(inst.names_.size());
    if (!inst.index_.emplace(spec.id, id).second) {
      throw Error(ErrorCode::kDuplicateId, "vertex '" + spec.id + "'");
    }
    inst.names_.push_back(spec.id);
    inst.prize_.push_back(Canonical(spec.prize));
  }
  const auto root_it = inst.index_.find(root);
  if (root_it == inst.index_.end()) {
    throw Error(ErrorCode::kUnknownVertex, "root '" + root + "'");
  }
  if (budget < 0) {
    throw Error(ErrorCode::kNegativeBudget,
                "budget " + FormatRational(budget) + " is negative");
  }
  inst.root_ = root_it->second;
  inst.budget_ = Canonical(budget);
  inst.threshold_ = Canonical(threshold);
  inst.parent_.assign(count, kNoVertex);
  inst.children_.assign(count, {});
  inst.cost_.assign(count, Rational(0));

  for (const EdgeSpec& edge : edges) {
    const auto p = inst.index_.find(edge.parent);
    const auto c = inst.index_.find(edge.child);
    const std::string label = "(" + edge.parent + ", " + edge.child + ")";
    if (p == inst.index_.end()) {
      throw Error(ErrorCode::kUnknownVertex,
                  "edge " + label + " names unknown vertex '" + edge.parent + "'");
    }
    if (c == inst.index_.end()) {
      throw Error(ErrorCode::kUnknownVertex,
                  "edge " + label + " names unknown vertex '" + edge.child + "'");
    }
    if (edge.cost < 0) {
      throw Error(ErrorCode::kNegativeCost, "edge " + label + " has cost " +
                                                FormatRational(edge.cost));
    }
    if (c->second == inst.root_ || c->second == p->second) {
      throw Error(ErrorCode::kCycleDetected, "edge " + label + " enters " +
                                                 (c->second == inst.root_
                                                      ? "the root"
                                                      : "its own parent"));
    }
    if (inst.parent_[c->second] != kNoVertex) {
      throw Error(ErrorCode::kMultipleParents,
                  "vertex '" + edge.child + "' has parents '" +
                      inst.names_[inst.parent_[c->second]] + "' and '" +
                      edge.parent + "'");
    }
    inst.parent_[c->second] = p->second;
    inst.cost_[c->second] = Canonical(edge.cost);
    inst.children_[p->second].push_back(c->second);
  }

  // Iterative DFS from the root; anything unreached either has no parent
  // (disconnected) or sits on a parent cycle.
  std::vector<char> seen(count, 0);
  std::vector<std::pair<VertexId, std::size_t>> stack;
  inst.pre_order_.reserve(count);
  inst.post_order_.reserve(count);
  stack.emplace_back(inst.root_, 0);
  seen[inst.root_] = 1;
  inst.pre_order_.push_back(inst.root_);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < inst.children_[v].size()) {
      const VertexId c = inst.children_[v][next++];
      seen[c] = 1;
      inst.pre_order_.push_back(c);
      stack.emplace_back(c, 0);
    } else {
      inst.post_order_.push_back(v);
      stack.pop_back();
    }
  }
  for (VertexId v = 0; v < count; ++v) {
    if (seen[v]) continue;
    if (inst.parent_[v] == kNoVertex) {
      throw Error(ErrorCode::kDisconnectedVertex,
                  "vertex '" + inst.names_[v] + "' is not reachable from root '" +
                      root + "'");
    }
    throw Error(ErrorCode::kCycleDetected,
                "vertex '" + inst.names_[v] + "' lies on a parent cycle");
  }
  return inst;
}

CostPrize StrategyCostPrize(const Instance& inst,
                            std::span<const VertexId> subset) {
  std::vector<char> member(inst.vertex_count(), 0);
  for (VertexId v : subset) {
    if (v < 0 || v >= inst.vertex_count()) {
      throw Error(ErrorCode::kNotASubtree,
                  "vertex index " + std::to_string(v) + " out of range");
    }
    member[v] = 1;
  }
  if (!member[inst.root()]) {
    throw Error(ErrorCode::kNotASubtree, "root '" + inst.name(inst.root()) +
                                             "' is not in the subset");
  }
  CostPrize out{0, 0};
  for (VertexId v = 0; v < inst.vertex_count(); ++v) {
    if (!member[v]) continue;
    if (v != inst.root() && !member[inst.parent(v)]) {
      throw Error(ErrorCode::kNotASubtree,
                  "vertex '" + inst.name(v) + "' is in the subset but its parent '" +
                      inst.name(inst.parent(v)) + "' is not");
    }
    out.cost += inst.cost(v);
    out.prize += inst.prize(v);
  }
  return out;
}

Strategy MakeStrategy(const Instance& inst, std::vector<VertexId> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  CostPrize cp = StrategyCostPrize(inst, subset);
  return Strategy{std::move(subset), std::move(cp.cost), std::move(cp.prize)};
}

namespace {

void CollectSubtree(const Instance& inst, VertexId u,
                    std::vector<VertexId>* out) {
  std::vector<VertexId> stack{u};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    out->push_back(v);
    for (VertexId c : inst.children(v)) stack.push_back(c);
  }
}

}  // namespace

std::vector<VertexId> SubtreeVertices(const Instance& inst, VertexId u) {
  std::vector<VertexId> out;
  CollectSubtree(inst, u, &out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> BranchSubtree(const Instance& inst, VertexId u, int i) {
  if (i < 1 || i > inst.degree(u) + 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "branch index " + std::to_string(i) + " outside 1.." +
                    std::to_string(inst.degree(u) + 1));
  }
  std::vector<VertexId> out{u};
  const auto kids = inst.children(u);
  for (std::size_t j = static_cast<std::size_t>(i - 1); j < kids.size(); ++j) {
    CollectSubtree(inst, kids[j], &out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Decomposition Decompose(const Instance& inst, VertexId u, int i) {
  Decomposition d;
  if (i > inst.degree(u)) {
    d.remainder = BranchSubtree(inst, u, i);
    return d;
  }
  d.leftmost_child = inst.children(u)[i - 1];
  d.left_part = SubtreeVertices(inst, d.leftmost_child);
  d.remainder = BranchSubtree(inst, u, i + 1);
  return d;
}

}  // namespace goas
