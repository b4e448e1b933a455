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

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "dp_internal.hpp"
#include "goas/error.hpp"
#include "kernels.hpp"

namespace goas {

BoxShape::BoxShape(std::vector<std::int64_t> ext) : extents(std::move(ext)) {
  strides.assign(extents.size(), 1);
  size = 1;
  for (std::size_t j = extents.size(); j-- > 0;) {
    strides[j] = size;
    size *= extents[j];
  }
}

std::vector<std::int64_t> BoxShape::Decode(std::int64_t flat) const {
  std::vector<std::int64_t> out(extents.size());
  for (std::size_t j = 0; j < extents.size(); ++j) {
    out[j] = flat / strides[j];
    flat %= strides[j];
  }
  return out;
}

std::int64_t BoxShape::Encode(const std::vector<std::int64_t>& coords) const {
  std::int64_t flat = 0;
  for (std::size_t j = 0; j < extents.size(); ++j) flat += coords[j] * strides[j];
  return flat;
}

std::size_t DpTables::width() const {
  return std::visit([](const auto& s) { return s.width; }, store_);
}

namespace {

template <typename V>
Rational ToRational(const V& v, const BigInt& scale) {
  Rational out;
  if constexpr (std::is_same_v<V, std::int64_t>) {
    out = Rational(BigInt(static_cast<long>(v)), scale);
  } else {
    out = Rational(v, scale);
  }
  out.canonicalize();
  return out;
}

struct ScaledPrizes {
  BigInt scale = 1;
  std::vector<BigInt> values;
  BigInt abs_sum = 0;
};

ScaledPrizes ScalePrizes(const Instance& inst) {
  ScaledPrizes out;
  for (VertexId v = 0; v < inst.vertex_count(); ++v) {
    out.scale = Lcm(out.scale, inst.prize(v).get_den());
  }
  out.values.reserve(inst.vertex_count());
  for (VertexId v = 0; v < inst.vertex_count(); ++v) {
    const Rational& p = inst.prize(v);
    BigInt scaled = p.get_num() * (out.scale / p.get_den());
    out.abs_sum += abs(scaled);
    out.values.push_back(std::move(scaled));
  }
  return out;
}

// Partial sums stay within abs_sum, so int64 is safe below 2^62.
bool FitsInt64(const ScaledPrizes& prizes) {
  BigInt limit = 1;
  limit <<= 62;
  return prizes.abs_sum < limit;
}

template <typename V>
V Convert(const BigInt& x) {
  if constexpr (std::is_same_v<V, std::int64_t>) {
    std::int64_t out = 0;
    ToInt64(x, &out);
    return out;
  } else {
    return x;
  }
}

template <typename V>
internal::TableStore<V> FillAtMost(const Instance& inst,
                                   const ScaledPrizes& prizes,
                                   const std::vector<std::int64_t>& step,
                                   std::int64_t width, Kernel kernel,
                                   OpCounts* ops) {
  internal::TableStore<V> store;
  store.width = static_cast<std::size_t>(width);
  store.cells.resize(inst.vertex_count());
  for (VertexId u : inst.post_order()) {
    const int d = inst.degree(u);
    auto& cells = store.cells[u];
    cells.resize(static_cast<std::size_t>(d + 1) * store.width);
    const V base = Convert<V>(prizes.values[u]);
    std::fill(cells.begin() + static_cast<std::ptrdiff_t>(d) * width,
              cells.end(), base);
    for (int row = d - 1; row >= 0; --row) {
      const VertexId child = inst.children(u)[row];
      const V* child_row = store.Row(child, 0);
      const V* rest = store.Row(u, row + 1);
      V* out = store.Row(u, row);
      *ops += kernel == Kernel::kParallel
                  ? internal::AtMostRowParallel(child_row, rest, step[child],
                                                width, out)
                  : internal::AtMostRowSerial(child_row, rest, step[child],
                                              width, out);
    }
  }
  return store;
}

template <typename V>
internal::TableStore<V> FillExact(const Instance& inst,
                                  const ScaledPrizes& prizes,
                                  const std::vector<std::int64_t>& step,
                                  const BoxShape& box, Kernel kernel,
                                  OpCounts* ops) {
  internal::TableStore<V> store;
  store.width = static_cast<std::size_t>(box.size);
  store.unreachable = Convert<V>(-(prizes.abs_sum + 1));
  store.cells.resize(inst.vertex_count());
  for (VertexId u : inst.post_order()) {
    const int d = inst.degree(u);
    auto& cells = store.cells[u];
    cells.assign(static_cast<std::size_t>(d + 1) * store.width,
                 store.unreachable);
    store.Row(u, d)[0] = Convert<V>(prizes.values[u]);
    for (int row = d - 1; row >= 0; --row) {
      const VertexId child = inst.children(u)[row];
      const int dim = static_cast<int>(step[child]);
      const V* child_row = store.Row(child, 0);
      const V* rest = store.Row(u, row + 1);
      V* out = store.Row(u, row);
      *ops += kernel == Kernel::kParallel
                  ? internal::ExactRowParallel(child_row, rest, box, dim,
                                               store.unreachable, out)
                  : internal::ExactRowSerial(child_row, rest, box, dim,
                                             store.unreachable, out);
    }
  }
  return store;
}

}  // namespace

void CheckCellBudget(const Instance& inst, std::uint64_t width,
                     const SolverOptions& options) {
  const std::uint64_t rows = 2ull * inst.vertex_count() - 1;
  if (width != 0 &&
      (width > options.max_table_cells || rows > options.max_table_cells / width)) {
    throw Error(ErrorCode::kTableTooLarge,
                std::to_string(rows) + " rows of width " + std::to_string(width) +
                    " exceed the limit of " +
                    std::to_string(options.max_table_cells) + " cells");
  }
}

DpTables TableBuilder::AtMost(const Instance& inst, TableKind kind,
                              std::vector<std::int64_t> step,
                              std::int64_t max_index,
                              const SolverOptions& options) {
  CheckCellBudget(inst, static_cast<std::uint64_t>(max_index) + 1, options);
  DpTables tables;
  tables.kind_ = kind;
  tables.root_ = inst.root();
  const ScaledPrizes prizes = ScalePrizes(inst);
  tables.prize_scale_ = prizes.scale;
  if (FitsInt64(prizes)) {
    tables.store_ = FillAtMost<std::int64_t>(inst, prizes, step, max_index + 1,
                                             options.kernel, &tables.ops_);
  } else {
    tables.store_ = FillAtMost<BigInt>(inst, prizes, step, max_index + 1,
                                       options.kernel, &tables.ops_);
  }
  tables.step_ = std::move(step);
  tables.answer_index_ = static_cast<std::size_t>(max_index);
  return tables;
}

DpTables TableBuilder::Exact(const Instance& inst,
                             std::vector<std::int64_t> step, BoxShape box,
                             const std::vector<char>& feasible,
                             const SolverOptions& options) {
  CheckCellBudget(inst, static_cast<std::uint64_t>(box.size), options);
  DpTables tables;
  tables.kind_ = TableKind::kRational;
  tables.root_ = inst.root();
  const ScaledPrizes prizes = ScalePrizes(inst);
  tables.prize_scale_ = prizes.scale;
  if (FitsInt64(prizes)) {
    tables.store_ = FillExact<std::int64_t>(inst, prizes, step, box,
                                            options.kernel, &tables.ops_);
  } else {
    tables.store_ = FillExact<BigInt>(inst, prizes, step, box, options.kernel,
                                      &tables.ops_);
  }
  tables.step_ = std::move(step);
  tables.box_ = std::move(box);

  // Final maximization over feasible cost-count vectors.
  std::visit(
      [&](const auto& store) {
        const auto* row = store.Row(inst.root(), 0);
        bool found = false;
        std::size_t best = 0;
        for (std::size_t k = 0; k < store.width; ++k) {
          if (!feasible[k] || row[k] == store.unreachable) continue;
          if (!found) {
            found = true;
            best = k;
            continue;
          }
          ++tables.ops_.comparisons;
          if (row[k] > row[best]) best = k;
        }
        // k = 0 (root alone) is always feasible and reachable.
        tables.answer_index_ = best;
      },
      tables.store_);
  return tables;
}

std::optional<Rational> DpTables::Entry(VertexId u, int i,
                                        std::size_t k) const {
  return std::visit(
      [&](const auto& store) -> std::optional<Rational> {
        const auto& v = store.Row(u, i - 1)[k];
        if (kind_ == TableKind::kRational && v == store.unreachable) {
          return std::nullopt;
        }
        return ToRational(v, prize_scale_);
      },
      store_);
}

Rational DpTables::OptimumPrize() const {
  return *Entry(root_, 1, answer_index_);
}

namespace {

template <typename V>
std::vector<VertexId> RecoverAtMost(const internal::TableStore<V>& store,
                                    const Instance& inst,
                                    const std::vector<std::int64_t>& step,
                                    std::size_t answer) {
  struct Frame {
    VertexId u;
    int row;
    std::int64_t k;
  };
  std::vector<VertexId> chosen;
  std::vector<Frame> stack{{inst.root(), 0, static_cast<std::int64_t>(answer)}};
  V sum;
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.row == 0) chosen.push_back(f.u);
    if (f.row == inst.degree(f.u)) continue;
    const V& value = store.Row(f.u, f.row)[f.k];
    const V* rest = store.Row(f.u, f.row + 1);
    if (rest[f.k] == value) {
      stack.push_back({f.u, f.row + 1, f.k});
      continue;
    }
    const VertexId child = inst.children(f.u)[f.row];
    const std::int64_t w = step[child];
    const V* child_row = store.Row(child, 0);
    for (std::int64_t j = w; j <= f.k; ++j) {
      sum = child_row[j - w] + rest[f.k - j];
      if (sum == value) {
        stack.push_back({f.u, f.row + 1, f.k - j});
        stack.push_back({child, 0, j - w});
        break;
      }
    }
  }
  return chosen;
}

template <typename V>
std::vector<VertexId> RecoverExact(const internal::TableStore<V>& store,
                                   const Instance& inst, const BoxShape& box,
                                   const std::vector<std::int64_t>& step,
                                   std::size_t answer) {
  struct Frame {
    VertexId u;
    int row;
    std::int64_t k;
  };
  const std::size_t d = box.extents.size();
  std::vector<VertexId> chosen;
  std::vector<Frame> stack{{inst.root(), 0, static_cast<std::int64_t>(answer)}};
  std::vector<std::int64_t> alpha(d);
  V sum;
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.row == 0) chosen.push_back(f.u);
    if (f.row == inst.degree(f.u)) continue;
    const V& value = store.Row(f.u, f.row)[f.k];
    const V* rest = store.Row(f.u, f.row + 1);
    if (rest[f.k] == value) {
      stack.push_back({f.u, f.row + 1, f.k});
      continue;
    }
    const VertexId child = inst.children(f.u)[f.row];
    const V* child_row = store.Row(child, 0);
    std::vector<std::int64_t> bound = box.Decode(f.k);
    --bound[step[child]];
    const std::int64_t target = f.k - box.strides[step[child]];
    std::fill(alpha.begin(), alpha.end(), 0);
    std::int64_t alpha_flat = 0;
    bool found = false;
    while (!found) {
      const V& a = child_row[alpha_flat];
      const V& b = rest[target - alpha_flat];
      if (!(a == store.unreachable) && !(b == store.unreachable)) {
        sum = a + b;
        if (sum == value) {
          stack.push_back({f.u, f.row + 1, target - alpha_flat});
          stack.push_back({child, 0, alpha_flat});
          found = true;
          break;
        }
      }
      bool done = true;
      for (std::size_t j = d; j-- > 0;) {
        if (alpha[j] < bound[j]) {
          ++alpha[j];
          alpha_flat += box.strides[j];
          done = false;
          break;
        }
        alpha_flat -= alpha[j] * box.strides[j];
        alpha[j] = 0;
      }
      if (done) break;
    }
    if (!found) {
      throw std::logic_error("strategy recovery found no matching split");
    }
  }
  return chosen;
}

}  // namespace

Strategy RecoverStrategy(const DpTables& tables, const Instance& inst) {
  std::vector<VertexId> chosen = std::visit(
      [&](const auto& store) {
        return tables.kind_ == TableKind::kRational
                   ? RecoverExact(store, inst, tables.box_, tables.step_,
                                  tables.answer_index_)
                   : RecoverAtMost(store, inst, tables.step_,
                                   tables.answer_index_);
      },
      tables.store_);
  return MakeStrategy(inst, std::move(chosen));
}

SolveResult ResultFromTables(const Instance& inst, const DpTables& tables,
                             std::string solver) {
  SolveResult result;
  result.solver = std::move(solver);
  result.strategy = RecoverStrategy(tables, inst);
  result.prize = tables.OptimumPrize();
  if (result.strategy.prize != result.prize) {
    throw std::logic_error("recovered strategy prize " +
                           FormatRational(result.strategy.prize) +
                           " differs from table optimum " +
                           FormatRational(result.prize));
  }
  result.goas_met = result.prize >= inst.threshold();
  result.ops = tables.ops();
  return result;
}

bool DecideGoas(const Instance& inst, const SolveResult& result) {
  return result.prize >= inst.threshold();
}

std::vector<Rational> DistinctCosts(const Instance& inst) {
  std::vector<Rational> out;
  for (VertexId v : inst.pre_order()) {
    if (v == inst.root()) continue;
    if (std::find(out.begin(), out.end(), inst.cost(v)) == out.end()) {
      out.push_back(inst.cost(v));
    }
  }
  return out;
}

}  // namespace goas
