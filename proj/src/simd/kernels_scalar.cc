// Copyright 2026 The FairCC Authors
//
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
#include <bit>
#include <limits>

#include "fcc/simd/kernels.hpp"

namespace fcc::simd {
namespace {

double DotScalar(const double* a, const double* b, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void AxpyScalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double MaxTriangleExcessScalar(const double* a, const double* b, double ab,
                               std::size_t n) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t v = 0; v < n; ++v) best = std::max(best, ab - a[v] - b[v]);
  return best;
}

std::size_t TriangleViolationsScalar(const double* a, const double* b,
                                     double ab, double tol, std::size_t n,
                                     std::uint32_t* out) {
  std::size_t written = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (ab - a[v] - b[v] > tol) out[written++] = static_cast<std::uint32_t>(v);
  }
  return written;
}

BallStats BallScanScalar(const double* row, const std::uint64_t* candidates,
                         std::size_t n, double radius,
                         std::uint64_t* out_mask) {
  BallStats stats;
  const std::size_t words = (n + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t cand = candidates[w];
    std::uint64_t hit = 0;
    while (cand != 0) {
      const int bit = std::countr_zero(cand);
      cand &= cand - 1;
      const double d = row[w * 64 + bit];
      if (d <= radius) {
        hit |= std::uint64_t{1} << bit;
        stats.distance_sum += d;
      }
    }
    out_mask[w] = hit;
    stats.count += static_cast<std::size_t>(std::popcount(hit));
  }
  return stats;
}

std::size_t PopcountAndScalar(const std::uint64_t* a, const std::uint64_t* b,
                              std::size_t words) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words; ++w) {
    total += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  }
  return total;
}

}  // namespace

const KernelTable& ScalarKernels() {
  static const KernelTable table{
      Isa::kScalar,           DotScalar,      AxpyScalar,
      MaxTriangleExcessScalar, TriangleViolationsScalar,
      BallScanScalar,         PopcountAndScalar,
  };
  return table;
}

}  // namespace fcc::simd
