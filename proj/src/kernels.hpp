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

#ifndef GOAS_SRC_KERNELS_HPP_
#define GOAS_SRC_KERNELS_HPP_

// Row kernels for the leftmost-child recursions. Each computes one row of a
// vertex table from the leftmost child's full table (`child`) and the
// vertex's next row (`rest`). Entries of a row are independent, so the
// OpenMP variants split the index range across threads; the serial
// variants are the reference the tests compare against.

#include <omp.h>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "goas/dp.hpp"
#include "goas/dp_tables.hpp"

namespace goas::internal {

// Rows narrower than this are not worth a parallel region.
inline constexpr std::int64_t kParallelMinWidth = 128;

// "At most k" rows (constant and integer costs). `weight` is the cost of the
// edge into the leftmost child, in table units:
//   out[k] = max(rest[k], max_{weight <= j <= k} child[j-weight] + rest[k-j])
template <typename V>
inline void AtMostEntry(const V* child, const V* rest, std::int64_t weight,
                        std::int64_t k, V* out, std::uint64_t* ops) {
  V best = rest[k];
  V candidate;
  std::uint64_t n = 0;
  for (std::int64_t j = weight; j <= k; ++j) {
    candidate = child[j - weight] + rest[k - j];
    ++n;
    if (candidate > best) best = candidate;
  }
  *out = best;
  *ops += n;
}

template <typename V>
OpCounts AtMostRowSerial(const V* child, const V* rest, std::int64_t weight,
                         std::int64_t width, V* out) {
  std::uint64_t n = 0;
  for (std::int64_t k = 0; k < width; ++k) {
    AtMostEntry(child, rest, weight, k, out + k, &n);
  }
  return {n, n};
}

template <typename V>
OpCounts AtMostRowParallel(const V* child, const V* rest, std::int64_t weight,
                           std::int64_t width, V* out) {
  std::uint64_t n = 0;
#pragma omp parallel for schedule(dynamic, 32) reduction(+ : n) \
    if (width >= kParallelMinWidth)
  for (std::int64_t k = 0; k < width; ++k) {
    AtMostEntry(child, rest, weight, k, out + k, &n);
  }
  return {n, n};
}

// Exact cost-count rows over a box. `dim` is the alphabet index of the edge
// into the leftmost child, so k - delta(e) lowers coordinate `dim` by one:
//   out[k] = max(rest[k], max_{a + b = k - delta} child[a] + rest[b])
// Pairs with an unreachable side are skipped and not counted.
template <typename V>
inline void ExactEntry(const V* child, const V* rest, const BoxShape& box,
                       int dim, const V& unreachable, std::int64_t k, V* out,
                       std::uint64_t* ops, std::vector<std::int64_t>& bound,
                       std::vector<std::int64_t>& alpha) {
  V best = rest[k];
  bool reachable = !(best == unreachable);
  const std::size_t d = box.extents.size();
  // Decode k and check that coordinate `dim` can drop by one.
  std::int64_t rem = k;
  for (std::size_t j = 0; j < d; ++j) {
    bound[j] = rem / box.strides[j];
    rem %= box.strides[j];
  }
  if (bound[dim] > 0) {
    --bound[dim];
    const std::int64_t target = k - box.strides[dim];
    std::fill(alpha.begin(), alpha.end(), 0);
    std::int64_t alpha_flat = 0;
    V candidate;
    std::uint64_t n = 0;
    while (true) {
      const V& a = child[alpha_flat];
      const V& b = rest[target - alpha_flat];
      if (!(a == unreachable) && !(b == unreachable)) {
        candidate = a + b;
        ++n;
        if (!reachable || candidate > best) {
          best = candidate;
          reachable = true;
        }
      }
      // Row-major odometer over alpha <= bound.
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
    *ops += n;
  }
  *out = reachable ? best : unreachable;
}

template <typename V>
OpCounts ExactRowSerial(const V* child, const V* rest, const BoxShape& box,
                        int dim, const V& unreachable, V* out) {
  std::uint64_t n = 0;
  std::vector<std::int64_t> bound(box.extents.size()), alpha(box.extents.size());
  for (std::int64_t k = 0; k < box.size; ++k) {
    ExactEntry(child, rest, box, dim, unreachable, k, out + k, &n, bound, alpha);
  }
  return {n, n};
}

template <typename V>
OpCounts ExactRowParallel(const V* child, const V* rest, const BoxShape& box,
                          int dim, const V& unreachable, V* out) {
  std::uint64_t n = 0;
#pragma omp parallel reduction(+ : n) if (box.size >= kParallelMinWidth)
  {
    std::vector<std::int64_t> bound(box.extents.size()),
        alpha(box.extents.size());
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t k = 0; k < box.size; ++k) {
      ExactEntry(child, rest, box, dim, unreachable, k, out + k, &n, bound,
                 alpha);
    }
  }
  return {n, n};
}

}  // namespace goas::internal

#endif  // GOAS_SRC_KERNELS_HPP_
