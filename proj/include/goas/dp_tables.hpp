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

#ifndef GOAS_DP_TABLES_HPP_
#define GOAS_DP_TABLES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "goas/dp.hpp"
#include "goas/rational.hpp"
#include "goas/tree.hpp"

namespace goas {

enum class TableKind {
  kConstant,  // M_k^i(u): at most k edges
  kInteger,   // N_k^i(u): total cost at most k
  kRational,  // A_k^i(u): exactly k_j edges of cost c_j, k in a box
};

// Shape of the cost-count box {0..m_1} x ... x {0..m_d}, flattened
// row-major (last coordinate fastest).
struct BoxShape {
  std::vector<std::int64_t> extents;  // m_j + 1
  std::vector<std::int64_t> strides;
  std::int64_t size = 1;

  explicit BoxShape(std::vector<std::int64_t> extents = {});
  std::vector<std::int64_t> Decode(std::int64_t flat) const;
  std::int64_t Encode(const std::vector<std::int64_t>& coords) const;
};

namespace internal {

template <typename V>
struct TableStore {
  // Per vertex: rows 0..d(u), each `width` wide. Row i-1 holds T^i(u);
  // row d(u) holds the single vertex {u}.
  std::vector<std::vector<V>> cells;
  std::size_t width = 0;
  V unreachable{};

  const V* Row(VertexId u, int row) const {
    return cells[u].data() + static_cast<std::size_t>(row) * width;
  }
  V* Row(VertexId u, int row) {
    return cells[u].data() + static_cast<std::size_t>(row) * width;
  }
};

}  // namespace internal

// All DP tables of one solve, retained for strategy recovery. Prizes are
// stored multiplied by prize_scale() (the LCM of prize denominators) so the
// recursions run on integers; Entry() converts back.
class DpTables {
 public:
  TableKind kind() const { return kind_; }
  // k ranges over 0..width()-1 (m+1, K+1 or the box size).
  std::size_t width() const;
  const BigInt& prize_scale() const { return prize_scale_; }
  const OpCounts& ops() const { return ops_; }
  const BoxShape& box() const { return box_; }
  // Alphabet index (kRational) or integer edge weight of e(v).
  std::int64_t step(VertexId v) const { return step_[v]; }
  bool uses_bigint() const { return store_.index() == 1; }

  // Table entry for T^i(u), 1 <= i <= d(u)+1, at index k. nullopt marks
  // an unreachable cost-count vector.
  std::optional<Rational> Entry(VertexId u, int i, std::size_t k) const;

  // Index of the optimum in the root's first row.
  std::size_t answer_index() const { return answer_index_; }
  Rational OptimumPrize() const;

 private:
  friend DpTables BuildConstantTables(const Instance&, const Rational&,
                                      const SolverOptions&);
  friend DpTables BuildIntegerTables(const Instance&, const SolverOptions&);
  friend DpTables BuildRationalTables(const Instance&,
                                      const std::vector<Rational>&,
                                      const SolverOptions&);
  friend Strategy RecoverStrategy(const DpTables&, const Instance&);
  friend class TableBuilder;

  TableKind kind_ = TableKind::kInteger;
  std::variant<internal::TableStore<std::int64_t>, internal::TableStore<BigInt>>
      store_;
  BigInt prize_scale_ = 1;
  std::vector<std::int64_t> step_;
  BoxShape box_;
  OpCounts ops_;
  std::size_t answer_index_ = 0;
  VertexId root_ = 0;
};

// m = min(floor(B/c), n). Validates costs like SolveConstant.
DpTables BuildConstantTables(const Instance& inst, const Rational& c,
                             const SolverOptions& options = {});
// K = min(floor(B), total cost). Validates costs like SolveInteger.
DpTables BuildIntegerTables(const Instance& inst,
                            const SolverOptions& options = {});
// Box {0..m_1} x ... x {0..m_d} with m_j = min(ceil(B'/c_j), n_j),
// B' = B + sum c_j.
DpTables BuildRationalTables(const Instance& inst,
                             const std::vector<Rational>& costs,
                             const SolverOptions& options = {});

// Walks the retained tables from the root's answer entry. At each split the
// exclude-leftmost-child alternative is preferred, then the smallest index
// into the leftmost child's table.
Strategy RecoverStrategy(const DpTables& tables, const Instance& inst);

}  // namespace goas

#endif  // GOAS_DP_TABLES_HPP_
