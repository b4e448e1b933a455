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

#ifndef GOAS_REDUCTIONS_HPP_
#define GOAS_REDUCTIONS_HPP_

#include <string>
#include <vector>

#include "goas/rational.hpp"
#include "goas/tree.hpp"

namespace goas {

// 0/1 knapsack.
struct KnapsackItem {
  Rational weight;  // > 0
  Rational value;
};

struct KnapsackInput {
  std::vector<KnapsackItem> items;
  Rational capacity;  // >= 0
};

// Star centred at "r" with one leaf "item<i>" (1-based) per item: edge cost
// = weight, leaf prize = value, B = capacity. Throws InvalidArgument on a
// non-positive weight or negative capacity.
Instance KnapsackToStar(const KnapsackInput& knapsack, const Rational& threshold);

// Unrooted tree with two edge-weight functions: `prize` (w) and `cost` (w').
struct GeneralEdge {
  std::string a;
  std::string b;
  Rational prize;
  Rational cost;
};

class GeneralTree {
 public:
  // Throws DuplicateId, UnknownVertex, CycleDetected, DisconnectedVertex.
  GeneralTree(std::vector<std::string> vertices, std::vector<GeneralEdge> edges,
              Rational budget, Rational threshold);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<GeneralEdge>& edges() const { return edges_; }
  const Rational& budget() const { return budget_; }
  const Rational& threshold() const { return threshold_; }

 private:
  std::vector<std::string> vertices_;
  std::vector<GeneralEdge> edges_;
  Rational budget_;
  Rational threshold_;
};

// Roots the tree at `root` and pushes each edge's prize down to its child
// endpoint; the root's prize is 0. Children follow edge-list order. Throws
// UnknownVertex.
Instance RootGeneralTree(const GeneralTree& tree, const std::string& root);

// Container model: targets with acquisition values sit in level-1
// containers; each container lists (outermost first) the containers that
// must be penetrated before it.
struct Container {
  std::string id;
  Rational cost;
  std::vector<std::string> penetration_list;
};

struct Target {
  std::string id;
  Rational value;
  std::string location;
};

struct ContainerModel {
  std::vector<Container> containers;
  std::vector<Target> targets;
  Rational budget;
  Rational threshold;
};

// One vertex per container under a fresh root, edge cost = penetration cost,
// vertex prize = sum of values of targets located at level 1 in it.
// Top-level containers hang off the root in declaration order. Throws
// NotWellFormed (mutual or self dependence), NotNested (a penetration list
// that is not its container's ancestor chain), UnknownVertex, DuplicateId.
Instance ContainersToTree(const ContainerModel& model);

}  // namespace goas

#endif  // GOAS_REDUCTIONS_HPP_
