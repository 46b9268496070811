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

#include "fcc/lp_engine.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fcc/oracle.hpp"
#include "test_util.hpp"

namespace fcc {
namespace {

TEST(SeparateTriangles, ZeroMetricIsClean) {
  EXPECT_TRUE(SeparateTriangles(FractionalMetric(6), 100).empty());
}

TEST(SeparateTriangles, SingleViolation) {
  FractionalMetric x(3);
  x.Set(0, 2, 1.0);
  x.Set(0, 1, 0.2);
  x.Set(1, 2, 0.2);
  const auto found = SeparateTriangles(x, 10);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].cut, (TriangleCut{0, 2, 1}));
  EXPECT_NEAR(found[0].violation, 0.6, 1e-12);
}

TEST(SeparateTriangles, ClosureIsClean) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const FractionalMetric x = testing::ShortestPathClosure(testing::RandomMatrix(9, seed));
    EXPECT_TRUE(SeparateTriangles(x, 1000).empty());
    EXPECT_LE(VerifyMetric(x), 1e-12);
  }
}

TEST(SeparateTriangles, OrderAndBudget) {
  const FractionalMetric x = testing::RandomMatrix(10, 3);
  const auto all = SeparateTriangles(x, 100000);
  ASSERT_GT(all.size(), 3u);
  for (std::size_t i = 1; i < all.size(); ++i) {
    EXPECT_GE(all[i - 1].violation, all[i].violation);
    EXPECT_NEAR(all[i].violation, TriangleExcess(x, all[i].cut), 1e-15);
  }
  const auto top = SeparateTriangles(x, 3);
  ASSERT_EQ(top.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(top[i].cut, all[i].cut);
  EXPECT_NEAR(VerifyMetric(x), all[0].violation, 1e-15);
}

TEST(VerifyMetric, Examples) {
  EXPECT_DOUBLE_EQ(VerifyMetric(FractionalMetric(5, 0.5)), 0.0);
  FractionalMetric x = testing::ShortestPathClosure(FractionalMetric(6, 0.5));
  x.Set(1, 4, 1.3);
  EXPECT_NEAR(VerifyMetric(x), 0.3, 1e-12);
}

TEST(Solve, AllPositiveSingleColor) {
  const ColorModel one(3, {{0, 1, 2}}, {Param::Parse("1")});
  const SolveReport r = Solve(BuildLp(SignedGraph::AllPositive(3), one));
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.objective, 0.0, 1e-9);
  for (double v : r.x.PairValues()) EXPECT_NEAR(v, 0.0, 1e-9);
}

TEST(Solve, PlantedFairCliques) {
  // Two cliques {0..3} and {4..7}; colors alternate so both are balanced.
  const SignedGraph g =
      SignedGraph::FromPredicate(8, [](VertexId u, VertexId v) { return u / 4 == v / 4; });
  const SolveReport r = Solve(BuildLp(g, testing::RedBlue(8)));
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_NEAR(r.objective, 0.0, 1e-7);
  EXPECT_LE(r.certify, 1e-6);
}

TEST(Solve, LowerBoundsFairOptimum) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const SignedGraph g = testing::RandomGraph(4 + seed % 2 * 2, seed);
    const ColorModel colors = testing::RedBlue(g.num_vertices());
    const SolveReport r = Solve(BuildLp(g, colors));
    ASSERT_EQ(r.status, SolveStatus::kOptimal);
    const OracleResult opt = BruteForceOptimum(g, &colors, OracleMode::kFairStrict);
    ASSERT_TRUE(opt.feasible);
    EXPECT_GE(r.objective, -1e-9);
    EXPECT_LE(r.objective, static_cast<double>(*opt.optimum) + 1e-6);
    EXPECT_LE(r.certify, 1e-6);
    EXPECT_LE(r.fairness_residual, 1e-6);
    EXPECT_NEAR(BuildLp(g, colors).Evaluate(r.x), r.objective, 1e-7);
    for (std::size_t i = 1; i < r.round_objectives.size(); ++i) {
      EXPECT_GE(r.round_objectives[i], r.round_objectives[i - 1] - 1e-7);
    }
  }
}

TEST(Solve, PrePooledRowsAreKept) {
  const SignedGraph g = testing::RandomGraph(6, 21);
  const ColorModel colors = testing::RedBlue(6);
  LpProblem pooled = BuildLp(g, colors);
  pooled.ActivateTriangles(AllTriangleCuts(6));
  const SolveReport full = Solve(pooled);
  const SolveReport lazy = Solve(BuildLp(g, colors));
  ASSERT_EQ(full.status, SolveStatus::kOptimal);
  EXPECT_NEAR(full.objective, lazy.objective, 1e-7);
  EXPECT_EQ(full.rows_added, 0u);
}

TEST(Solve, RejectsOversizedInstance) {
  SolverConfig config;
  config.max_columns = 10;
  EXPECT_THROW(Solve(BuildLp(testing::RandomGraph(6, 0), testing::RedBlue(6)), config),
               DomainError);
}

TEST(SolutionFile, RoundTripAndCertify) {
  const SignedGraph g = testing::RandomGraph(6, 8);
  const LpProblem lp = BuildLp(g, testing::RedBlue(6));
  const SolveReport r = Solve(lp);
  const auto path = std::filesystem::temp_directory_path() / "fcc_solution_test.sol";
  WriteSolutionFile(r.x, path.string());
  const FractionalMetric back = ReadSolutionFile(path.string(), 6);
  for (VertexId u = 0; u < 6; ++u) {
    for (VertexId v = u + 1; v < 6; ++v) EXPECT_DOUBLE_EQ(back.at(u, v), r.x.at(u, v));
  }
  const SolveReport imported = ReportFromSolution(lp, back);
  EXPECT_NEAR(imported.objective, r.objective, 1e-12);

  FractionalMetric bad(6, 0.0);
  bad.Set(0, 1, 1.0);
  EXPECT_THROW(ReportFromSolution(lp, bad), DomainError);

  std::ofstream(path) << "x_0_9 1\n";
  EXPECT_THROW(ReadSolutionFile(path.string(), 6), DomainError);
  std::ofstream(path) << "x_0_1\n";
  EXPECT_THROW(ReadSolutionFile(path.string(), 6), DomainError);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace fcc
