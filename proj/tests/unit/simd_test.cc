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

#include "fcc/simd/kernels.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

namespace fcc::simd {
namespace {

std::vector<double> RandomVector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = unit(rng);
  return v;
}

TEST(Kernels, ScalarReference) {
  const KernelTable& k = ScalarKernels();
  EXPECT_EQ(k.isa, Isa::kScalar);
  const std::vector<double> a{1, 2, 3}, b{4, 5, 6};
  EXPECT_DOUBLE_EQ(k.dot(a.data(), b.data(), 3), 32.0);
  std::vector<double> y = b;
  k.axpy(2.0, a.data(), y.data(), 3);
  EXPECT_EQ(y, (std::vector<double>{6, 9, 12}));
  EXPECT_EQ(k.max_triangle_excess(a.data(), b.data(), 1.0, 0), -INFINITY);
  EXPECT_DOUBLE_EQ(k.max_triangle_excess(a.data(), b.data(), 10.0, 3), 5.0);
}

TEST(Kernels, BallScanMasksCandidates) {
  const std::vector<double> row{0.0, 0.3, 0.6, 0.1, 0.2};
  const std::uint64_t candidates = 0b11011;  // vertex 2 excluded
  std::uint64_t mask = 0;
  const BallStats s = ScalarKernels().ball_scan(row.data(), &candidates, 5, 0.25, &mask);
  EXPECT_EQ(mask, 0b11001u);
  EXPECT_EQ(s.count, 3u);
  EXPECT_NEAR(s.distance_sum, 0.3, 1e-15);
}

TEST(Kernels, EverySupportedIsaMatchesScalar) {
  const KernelTable& ref = ScalarKernels();
  for (Isa isa : {Isa::kScalar, Isa::kAvx2}) {
    if (!IsaSupported(isa)) {
      EXPECT_THROW(KernelsFor(isa), std::invalid_argument);
      continue;
    }
    const KernelTable& k = KernelsFor(isa);
    SCOPED_TRACE(std::string(IsaName(isa)));
    std::mt19937_64 rng(5);
    for (std::size_t n : {0, 1, 3, 4, 7, 8, 31, 64, 65, 130, 257}) {
      const auto a = RandomVector(n, rng);
      const auto b = RandomVector(n, rng);
      EXPECT_NEAR(k.dot(a.data(), b.data(), n), ref.dot(a.data(), b.data(), n), 1e-12);

      std::vector<double> y1 = b, y2 = b;
      k.axpy(0.7, a.data(), y1.data(), n);
      ref.axpy(0.7, a.data(), y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) EXPECT_DOUBLE_EQ(y1[i], y2[i]);

      EXPECT_EQ(k.max_triangle_excess(a.data(), b.data(), 0.9, n),
                ref.max_triangle_excess(a.data(), b.data(), 0.9, n));

      std::vector<std::uint32_t> o1(n), o2(n);
      const std::size_t c1 = k.triangle_violations(a.data(), b.data(), 0.9, 1e-7, n, o1.data());
      const std::size_t c2 = ref.triangle_violations(a.data(), b.data(), 0.9, 1e-7, n, o2.data());
      ASSERT_EQ(c1, c2);
      for (std::size_t i = 0; i < c1; ++i) EXPECT_EQ(o1[i], o2[i]);

      const std::size_t words = (n + 63) / 64;
      std::vector<std::uint64_t> cand(words), m1(words), m2(words);
      for (std::size_t v = 0; v < n; ++v) {
        if (rng() & 1) cand[v / 64] |= std::uint64_t{1} << (v % 64);
      }
      const BallStats s1 = k.ball_scan(a.data(), cand.data(), n, 0.4, m1.data());
      const BallStats s2 = ref.ball_scan(a.data(), cand.data(), n, 0.4, m2.data());
      EXPECT_EQ(m1, m2);
      EXPECT_EQ(s1.count, s2.count);
      EXPECT_NEAR(s1.distance_sum, s2.distance_sum, 1e-12);
      EXPECT_EQ(k.popcount_and(cand.data(), m1.data(), words),
                ref.popcount_and(cand.data(), m1.data(), words));
    }
  }
}

TEST(Kernels, SelectedTableIsSupported) { EXPECT_TRUE(IsaSupported(Kernels().isa)); }

}  // namespace
}  // namespace fcc::simd
