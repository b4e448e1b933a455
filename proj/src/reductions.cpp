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

#include "goas/reductions.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "goas/error.hpp"

namespace goas {

Instance KnapsackToStar(const KnapsackInput& knapsack,
                        const Rational& threshold) {
  if (knapsack.capacity < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "capacity " + FormatRational(knapsack.capacity) + " is negative");
  }
  std::vector<VertexSpec> vertices{{"r", 0}};
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < knapsack.items.size(); ++i) {
    const KnapsackItem& item = knapsack.items[i];
    const std::string id = "item" + std::to_string(i + 1);
    if (item.weight <= 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  id + " has non-positive weight " + FormatRational(item.weight));
    }
    vertices.push_back({id, item.value});
    edges.push_back({"r", id, item.weight});
  }
  return BuildInstance(vertices, edges, "r", knapsack.capacity, threshold);
}

GeneralTree::GeneralTree(std::vector<std::string> vertices,
                         std::vector<GeneralEdge> edges, Rational budget,
                         Rational threshold)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      budget_(std::move(budget)),
      threshold_(std::move(threshold)) {
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index.emplace(vertices_[i], static_cast<int>(i)).second) {
      throw Error(ErrorCode::kDuplicateId, "vertex '" + vertices_[i] + "'");
    }
  }
  // Union-find: an edge joining two already-connected vertices closes a
  // cycle.
  std::vector<int> parent(vertices_.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const GeneralEdge& e : edges_) {
    const auto a = index.find(e.a);
    const auto b = index.find(e.b);
    if (a == index.end() || b == index.end()) {
      throw Error(ErrorCode::kUnknownVertex,
                  "edge {" + e.a + ", " + e.b + "} names an unknown vertex");
    }
    const int ra = find(a->second);
    const int rb = find(b->second);
    if (ra == rb) {
      throw Error(ErrorCode::kCycleDetected,
                  "edge {" + e.a + ", " + e.b + "} closes a cycle");
    }
    parent[ra] = rb;
  }
  if (!vertices_.empty() && edges_.size() + 1 != vertices_.size()) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (find(static_cast<int>(i)) != find(0)) {
        throw Error(ErrorCode::kDisconnectedVertex,
                    "vertex '" + vertices_[i] + "' is not connected to '" +
                        vertices_[0] + "'");
      }
    }
  }
}

Instance RootGeneralTree(const GeneralTree& tree, const std::string& root) {
  const auto& names = tree.vertices();
  if (std::find(names.begin(), names.end(), root) == names.end()) {
    throw Error(ErrorCode::kUnknownVertex, "root '" + root + "'");
  }
  std::unordered_map<std::string, std::vector<std::size_t>> incident;
  for (std::size_t i = 0; i < tree.edges().size(); ++i) {
    incident[tree.edges()[i].a].push_back(i);
    incident[tree.edges()[i].b].push_back(i);
  }
  std::unordered_map<std::string, Rational> prize{{root, Rational(0)}};
  std::vector<EdgeSpec> edges;
  std::vector<std::string> stack{root};
  std::unordered_set<std::string> seen{root};
  while (!stack.empty()) {
    const std::string u = stack.back();
    stack.pop_back();
    std::vector<std::string> next;
    for (std::size_t i : incident[u]) {
      const GeneralEdge& e = tree.edges()[i];
      const std::string& v = e.a == u ? e.b : e.a;
      if (!seen.insert(v).second) continue;
      prize[v] = e.prize;
      edges.push_back({u, v, e.cost});
      next.push_back(v);
    }
    stack.insert(stack.end(), next.rbegin(), next.rend());
  }
  std::vector<VertexSpec> vertices;
  for (const std::string& name : names) vertices.push_back({name, prize[name]});
  return BuildInstance(vertices, edges, root, tree.budget(), tree.threshold());
}

Instance ContainersToTree(const ContainerModel& model) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < model.containers.size(); ++i) {
    if (!index.emplace(model.containers[i].id, i).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "container '" + model.containers[i].id + "'");
    }
  }
  std::vector<std::unordered_set<std::string>> depends(model.containers.size());
  for (std::size_t i = 0; i < model.containers.size(); ++i) {
    const Container& c = model.containers[i];
    for (const std::string& dep : c.penetration_list) {
      if (!index.count(dep)) {
        throw Error(ErrorCode::kUnknownVertex, "container '" + c.id +
                                                   "' depends on unknown '" +
                                                   dep + "'");
      }
      if (dep == c.id) {
        throw Error(ErrorCode::kNotWellFormed,
                    "container '" + c.id + "' depends on itself");
      }
      depends[i].insert(dep);
    }
  }
  for (std::size_t i = 0; i < model.containers.size(); ++i) {
    for (const std::string& dep : depends[i]) {
      if (depends[index[dep]].count(model.containers[i].id)) {
        throw Error(ErrorCode::kNotWellFormed,
                    "containers '" + model.containers[i].id + "' and '" + dep +
                        "' depend on each other");
      }
    }
  }
  // Strict nesting: C_i = C_parent followed by the parent itself.
  for (const Container& c : model.containers) {
    if (c.penetration_list.empty()) continue;
    const Container& parent = model.containers[index[c.penetration_list.back()]];
    const std::vector<std::string> prefix(c.penetration_list.begin(),
                                          c.penetration_list.end() - 1);
    if (parent.penetration_list != prefix) {
      throw Error(ErrorCode::kNotNested,
                  "penetration list of '" + c.id +
                      "' is not the ancestor chain of '" + parent.id + "'");
    }
  }

  std::string root = "r";
  while (index.count(root)) root += "_";

  std::vector<Rational> lumped(model.containers.size(), Rational(0));
  std::unordered_set<std::string> target_ids;
  for (const Target& t : model.targets) {
    if (!target_ids.insert(t.id).second) {
      throw Error(ErrorCode::kDuplicateId, "target '" + t.id + "'");
    }
    const auto it = index.find(t.location);
    if (it == index.end()) {
      throw Error(ErrorCode::kUnknownVertex, "target '" + t.id +
                                                 "' located in unknown '" +
                                                 t.location + "'");
    }
    lumped[it->second] += t.value;
  }

  std::vector<VertexSpec> vertices{{root, 0}};
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < model.containers.size(); ++i) {
    const Container& c = model.containers[i];
    vertices.push_back({c.id, lumped[i]});
    const std::string& parent =
        c.penetration_list.empty() ? root : c.penetration_list.back();
    edges.push_back({parent, c.id, c.cost});
  }
  return BuildInstance(vertices, edges, root, model.budget, model.threshold);
}

}  // namespace goas
