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

namespace goas {

namespace {

// Appends to `out` the surviving children that take the place of `v`'s
// children: positive-cost children stay, zero-cost children are replaced by
// their own (recursively expanded) child lists.
void SpliceChildren(const Instance& inst, VertexId v,
                    std::vector<VertexId>* out) {
  for (VertexId c : inst.children(v)) {
    if (inst.cost(c) > 0) {
      out->push_back(c);
    } else {
      SpliceChildren(inst, c, out);
    }
  }
}

}  // namespace

Contraction ContractZeroCostEdges(const Instance& inst) {
  const int count = inst.vertex_count();
  std::vector<VertexId> representative(count, kNoVertex);
  for (VertexId v : inst.pre_order()) {
    const bool survives = v == inst.root() || inst.cost(v) > 0;
    representative[v] = survives ? v : representative[inst.parent(v)];
  }

  std::vector<Rational> lumped(count, Rational(0));
  for (VertexId v = 0; v < count; ++v) {
    lumped[representative[v]] += inst.prize(v);
  }

  std::vector<VertexSpec> vertices;
  std::vector<VertexId> new_index(count, kNoVertex);
  for (VertexId v = 0; v < count; ++v) {
    if (representative[v] != v) continue;
    new_index[v] = static_cast<VertexId>(vertices.size());
    vertices.push_back({inst.name(v), lumped[v]});
  }

  std::vector<EdgeSpec> edges;
  std::vector<VertexId> kids;
  for (VertexId v : inst.pre_order()) {
    if (representative[v] != v) continue;
    kids.clear();
    SpliceChildren(inst, v, &kids);
    for (VertexId c : kids) {
      edges.push_back({inst.name(v), inst.name(c), inst.cost(c)});
    }
  }

  Contraction out{
      BuildInstance(vertices, edges, inst.name(inst.root()), inst.budget(),
                    inst.threshold())
          .WithDeclaredAlphabet(inst.declared_alphabet()),
      std::vector<VertexId>(count, kNoVertex)};
  for (VertexId v = 0; v < count; ++v) {
    out.vertex_map[v] = new_index[representative[v]];
  }
  return out;
}

bool ContractionIsExact(const Instance& inst) {
  for (VertexId v = 0; v < inst.vertex_count(); ++v) {
    if (v != inst.root() && inst.cost(v) == 0 && inst.prize(v) < 0) {
      return false;
    }
  }
  return true;
}

Strategy ExpandStrategy(const Contraction& contraction, const Instance& original,
                        const Strategy& contracted_strategy) {
  std::vector<char> chosen(contraction.contracted.vertex_count(), 0);
  for (VertexId v : contracted_strategy.vertices) chosen[v] = 1;
  std::vector<VertexId> subset;
  for (VertexId v = 0; v < original.vertex_count(); ++v) {
    if (chosen[contraction.vertex_map[v]]) subset.push_back(v);
  }
  return MakeStrategy(original, std::move(subset));
}

}  // namespace goas
