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

#ifndef GOAS_TREE_HPP_
#define GOAS_TREE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "goas/rational.hpp"

namespace goas {

// Vertices are indexed 0..n in declaration order.
using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;

struct VertexSpec {
  std::string id;
  Rational prize;
};

// Sibling order is the order in which edges leaving the same parent appear.
struct EdgeSpec {
  std::string parent;
  std::string child;
  Rational cost;
};

// A doubly weighted planted plane tree together with budget and threshold:
// the model (T, c, p, B, G). Immutable once built; share freely across
// threads.
class Instance {
 public:
  int vertex_count() const { return static_cast<int>(names_.size()); }
  // Number of non-root vertices, equal to the number of edges.
  int edge_count() const { return vertex_count() - 1; }

  VertexId root() const { return root_; }
  const std::string& name(VertexId v) const { return names_[v]; }
  std::optional<VertexId> Find(const std::string& id) const;

  VertexId parent(VertexId v) const { return parent_[v]; }
  std::span<const VertexId> children(VertexId v) const {
    return children_[v];
  }
  int degree(VertexId v) const {
    return static_cast<int>(children_[v].size());
  }

  const Rational& prize(VertexId v) const { return prize_[v]; }
  // Cost of the parent edge e(v); zero for the root.
  const Rational& cost(VertexId v) const { return cost_[v]; }

  const Rational& budget() const { return budget_; }
  const Rational& threshold() const { return threshold_; }

  // Optional cost alphabet declared by the input document.
  const std::vector<Rational>& declared_alphabet() const {
    return declared_alphabet_;
  }

  // Children before parents; root last.
  const std::vector<VertexId>& post_order() const { return post_order_; }
  // Parents before children, siblings left to right.
  const std::vector<VertexId>& pre_order() const { return pre_order_; }

  Rational TotalCost() const;

  // Same tree with different budget or threshold.
  Instance WithBudget(const Rational& budget) const;
  Instance WithThreshold(const Rational& threshold) const;
  Instance WithDeclaredAlphabet(std::vector<Rational> alphabet) const;

  std::vector<VertexSpec> VertexSpecs() const;
  // Edges in pre-order of their child, so sibling order is preserved.
  std::vector<EdgeSpec> EdgeSpecs() const;

  friend bool operator==(const Instance& a, const Instance& b);

 private:
  friend Instance BuildInstance(const std::vector<VertexSpec>&,
                                const std::vector<EdgeSpec>&,
                                const std::string&, const Rational&,
                                const Rational&);

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  VertexId root_ = 0;
  std::vector<VertexId> parent_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<Rational> prize_;
  std::vector<Rational> cost_;
  Rational budget_;
  Rational threshold_;
  std::vector<Rational> declared_alphabet_;
  std::vector<VertexId> post_order_;
  std::vector<VertexId> pre_order_;
};

// Validates and builds an instance. Throws Error with CycleDetected,
// MultipleParents, DisconnectedVertex, NegativeCost, DuplicateId,
// UnknownVertex or NegativeBudget.
Instance BuildInstance(const std::vector<VertexSpec>& vertices,
                       const std::vector<EdgeSpec>& edges,
                       const std::string& root, const Rational& budget,
                       const Rational& threshold);

// A rooted subtree T' (an attack strategy). Vertices are sorted ascending.
struct Strategy {
  std::vector<VertexId> vertices;
  Rational cost;
  Rational prize;

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

struct CostPrize {
  Rational cost;
  Rational prize;
};

// Sums c(e(u)) and p(u) over the subset. Throws NotASubtree if the root is
// missing, a member's parent is missing, or an index is out of range.
CostPrize StrategyCostPrize(const Instance& inst,
                            std::span<const VertexId> subset);

// Builds a validated Strategy from an arbitrary-order subset.
Strategy MakeStrategy(const Instance& inst, std::vector<VertexId> subset);

// Leftmost-child split of T^i(u) (1-based i): the subtree under the i-th
// child and the remainder T^{i+1}(u).
struct Decomposition {
  VertexId leftmost_child = kNoVertex;  // kNoVertex when i > d(u)
  std::vector<VertexId> left_part;      // V(tau_l)
  std::vector<VertexId> remainder;      // V(tau'')
};

// V(T^i(u)) for 1 <= i <= d(u) + 1; T^{d(u)+1}(u) = {u}.
std::vector<VertexId> BranchSubtree(const Instance& inst, VertexId u, int i);
std::vector<VertexId> SubtreeVertices(const Instance& inst, VertexId u);
Decomposition Decompose(const Instance& inst, VertexId u, int i);

// Result of merging every zero-cost edge into its parent.
struct Contraction {
  Instance contracted;
  // Original vertex -> surviving vertex of `contracted`.
  std::vector<VertexId> vertex_map;
};

// Contracts every edge of cost zero: the child's prize moves to its
// surviving ancestor and its children are spliced into the ancestor's child
// list at the child's position. The optimum prize at every budget is
// preserved whenever the contracted vertices have non-negative prizes.
Contraction ContractZeroCostEdges(const Instance& inst);

// True when contraction preserves optimal values: every vertex entered by
// a zero-cost edge has a non-negative prize.
bool ContractionIsExact(const Instance& inst);

// Maps a strategy on the contracted instance back to the original vertices
// and re-prices it under the original instance.
Strategy ExpandStrategy(const Contraction& contraction, const Instance& original,
                        const Strategy& contracted_strategy);

}  // namespace goas

#endif  // GOAS_TREE_HPP_
