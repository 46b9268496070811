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

#ifndef FCC_SIMD_KERNELS_HPP_
#define FCC_SIMD_KERNELS_HPP_

// Data-parallel inner loops used by the LP engine, the separation oracle and
// the rounding scan. Each kernel has a scalar reference implementation and,
// where the target supports it, an AVX2 variant. The variant is chosen once at
// runtime from CPUID; setting FCC_SIMD=scalar in the environment forces the
// reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace fcc::simd {

enum class Isa { kScalar, kAvx2 };

std::string_view IsaName(Isa isa);

// Result of scanning one metric row against a candidate set.
struct BallStats {
  std::size_t count = 0;
  double distance_sum = 0.0;
};

struct KernelTable {
  Isa isa;

  double (*dot)(const double* a, const double* b, std::size_t n);

  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);

  // max over v of (ab - a[v] - b[v]); returns -inf for n == 0.
  double (*max_triangle_excess)(const double* a, const double* b, double ab,
                                std::size_t n);

  // Writes every v with (ab - a[v] - b[v]) > tol into out, ascending.
  // out must hold n entries. Returns the number written.
  std::size_t (*triangle_violations)(const double* a, const double* b,
                                     double ab, double tol, std::size_t n,
                                     std::uint32_t* out);

  // Marks every candidate v with row[v] <= radius in out_mask (bit v) and
  // accumulates row[v] over the marked entries. candidates and out_mask hold
  // ceil(n / 64) words; bits past n in candidates must be zero.
  BallStats (*ball_scan)(const double* row, const std::uint64_t* candidates,
                         std::size_t n, double radius, std::uint64_t* out_mask);

  std::size_t (*popcount_and)(const std::uint64_t* a, const std::uint64_t* b,
                              std::size_t words);
};

// Kernels selected for this process.
const KernelTable& Kernels();

bool IsaSupported(Isa isa);

// Throws std::invalid_argument when the ISA is not available on this host or
// was not compiled in.
const KernelTable& KernelsFor(Isa isa);

const KernelTable& ScalarKernels();

inline double Dot(std::span<const double> a, std::span<const double> b) {
  return Kernels().dot(a.data(), b.data(), a.size());
}

inline void Axpy(double alpha, std::span<const double> x, std::span<double> y) {
  Kernels().axpy(alpha, x.data(), y.data(), x.size());
}

}  // namespace fcc::simd

#endif  // FCC_SIMD_KERNELS_HPP_
