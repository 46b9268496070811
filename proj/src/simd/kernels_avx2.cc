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

// Compiled with -mavx2 -mfma -mpopcnt. Only reached through the dispatch table
// after a CPUID check.

#include <immintrin.h>

#include <algorithm>
#include <bit>
#include <limits>

#include "fcc/simd/kernels.hpp"

namespace fcc::simd {
namespace {

inline double HorizontalSum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

inline double HorizontalMax(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_max_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_max_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

double DotAvx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4),
                           _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double sum = HorizontalSum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void AxpyAvx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(
        y + i, _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double MaxTriangleExcessAvx2(const double* a, const double* b, double ab,
                             std::size_t n) {
  const __m256d vab = _mm256_set1_pd(ab);
  __m256d best = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
  std::size_t v = 0;
  for (; v + 4 <= n; v += 4) {
    const __m256d excess = _mm256_sub_pd(
        _mm256_sub_pd(vab, _mm256_loadu_pd(a + v)), _mm256_loadu_pd(b + v));
    best = _mm256_max_pd(best, excess);
  }
  double result = HorizontalMax(best);
  for (; v < n; ++v) result = std::max(result, ab - a[v] - b[v]);
  return result;
}

std::size_t TriangleViolationsAvx2(const double* a, const double* b, double ab,
                                   double tol, std::size_t n,
                                   std::uint32_t* out) {
  const __m256d vab = _mm256_set1_pd(ab);
  const __m256d vtol = _mm256_set1_pd(tol);
  std::size_t written = 0;
  std::size_t v = 0;
  for (; v + 4 <= n; v += 4) {
    const __m256d excess = _mm256_sub_pd(
        _mm256_sub_pd(vab, _mm256_loadu_pd(a + v)), _mm256_loadu_pd(b + v));
    unsigned mask = static_cast<unsigned>(
        _mm256_movemask_pd(_mm256_cmp_pd(excess, vtol, _CMP_GT_OQ)));
    while (mask != 0) {
      out[written++] = static_cast<std::uint32_t>(v + std::countr_zero(mask));
      mask &= mask - 1;
    }
  }
  for (; v < n; ++v) {
    if (ab - a[v] - b[v] > tol) out[written++] = static_cast<std::uint32_t>(v);
  }
  return written;
}

// Lane masks for the 16 possible 4-bit candidate patterns.
const __m256i* CandidateLaneMasks() {
  alignas(32) static const std::int64_t table[16][4] = {
      {0, 0, 0, 0},    {-1, 0, 0, 0},    {0, -1, 0, 0},    {-1, -1, 0, 0},
      {0, 0, -1, 0},   {-1, 0, -1, 0},   {0, -1, -1, 0},   {-1, -1, -1, 0},
      {0, 0, 0, -1},   {-1, 0, 0, -1},   {0, -1, 0, -1},   {-1, -1, 0, -1},
      {0, 0, -1, -1},  {-1, 0, -1, -1},  {0, -1, -1, -1},  {-1, -1, -1, -1},
  };
  return reinterpret_cast<const __m256i*>(table);
}

BallStats BallScanAvx2(const double* row, const std::uint64_t* candidates,
                       std::size_t n, double radius, std::uint64_t* out_mask) {
  const __m256i* lane_masks = CandidateLaneMasks();
  const __m256d vradius = _mm256_set1_pd(radius);
  __m256d sum = _mm256_setzero_pd();
  double tail_sum = 0.0;
  std::size_t count = 0;
  const std::size_t words = (n + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) {
    const std::uint64_t cand = candidates[w];
    std::uint64_t hit = 0;
    if (cand != 0) {
      const std::size_t base = w * 64;
      const std::size_t limit = std::min<std::size_t>(64, n - base);
      std::size_t g = 0;
      for (; g + 4 <= limit; g += 4) {
        const unsigned nibble = static_cast<unsigned>((cand >> g) & 0xF);
        if (nibble == 0) continue;
        const __m256d lane = _mm256_castsi256_pd(
            _mm256_load_si256(lane_masks + nibble));
        const __m256d values = _mm256_loadu_pd(row + base + g);
        const __m256d inside = _mm256_and_pd(
            lane, _mm256_cmp_pd(values, vradius, _CMP_LE_OQ));
        hit |= static_cast<std::uint64_t>(_mm256_movemask_pd(inside)) << g;
        sum = _mm256_add_pd(sum, _mm256_and_pd(inside, values));
      }
      for (; g < limit; ++g) {
        if (((cand >> g) & 1U) == 0) continue;
        const double d = row[base + g];
        if (d <= radius) {
          hit |= std::uint64_t{1} << g;
          tail_sum += d;
        }
      }
    }
    out_mask[w] = hit;
    count += static_cast<std::size_t>(std::popcount(hit));
  }
  return BallStats{count, HorizontalSum(sum) + tail_sum};
}

// Nibble-table popcount (Mula) over 256-bit lanes.
std::size_t PopcountAndAvx2(const std::uint64_t* a, const std::uint64_t* b,
                            std::size_t words) {
  const __m256i lookup = _mm256_setr_epi8(
      0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
      0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_nibble = _mm256_set1_epi8(0x0F);
  __m256i acc = _mm256_setzero_si256();
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i v = _mm256_and_si256(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w)),
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w)));
    const __m256i lo = _mm256_shuffle_epi8(lookup, _mm256_and_si256(v, low_nibble));
    const __m256i hi = _mm256_shuffle_epi8(
        lookup, _mm256_and_si256(_mm256_srli_epi16(v, 4), low_nibble));
    acc = _mm256_add_epi64(
        acc, _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; w < words; ++w) total += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  return total;
}

}  // namespace

const KernelTable& Avx2Kernels() {
  static const KernelTable table{
      Isa::kAvx2,           DotAvx2,      AxpyAvx2,
      MaxTriangleExcessAvx2, TriangleViolationsAvx2,
      BallScanAvx2,         PopcountAndAvx2,
  };
  return table;
}

}  // namespace fcc::simd
