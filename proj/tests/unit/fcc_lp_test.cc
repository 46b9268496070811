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

#include "fcc/fcc_lp.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "test_util.hpp"

namespace fcc {
namespace {

std::size_t CountLinesStarting(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::size_t count = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(prefix, 0) == 0) ++count;
  }
  return count;
}

TEST(FractionalMetric, PairValuesRoundTrip) {
  const FractionalMetric x = testing::RandomMatrix(5, 1);
  const auto values = x.PairValues();
  EXPECT_EQ(FractionalMetric::FromPairValues(5, values), x);
  FractionalMetric y = x;
  EXPECT_THROW(y.Set(0, 0, 1.0), DomainError);
}

TEST(BuildLp, ShapeAndObjective) {
  const SignedGraph g = testing::RandomGraph(6, 2);
  const LpProblem lp = BuildLp(g, testing::RedBlue(6));
  EXPECT_EQ(lp.num_columns(), 15u);
  EXPECT_EQ(lp.fairness_rows().size(), 12u);
  EXPECT_DOUBLE_EQ(lp.objective_constant(), static_cast<double>(g.num_negative()));
  EXPECT_TRUE(lp.triangle_pool().empty());
  EXPECT_EQ(lp.ColumnName(lp.Column(4, 1)), "x_1_4");
  EXPECT_THROW(BuildLp(g, testing::RedBlue(5)), DomainError);
}

TEST(BuildLp, AllPositiveSingleColorAtZero) {
  const SignedGraph g = SignedGraph::AllPositive(3);
  const ColorModel one(3, {{0, 1, 2}}, {Param::Parse("1")});
  const LpProblem lp = BuildLp(g, one);
  const FractionalMetric zero(3);
  EXPECT_DOUBLE_EQ(lp.Evaluate(zero), 0.0);
  EXPECT_DOUBLE_EQ(lp.MaxFairnessResidual(zero), 0.0);
}

TEST(BuildLp, RedBluePairAtZeroIsFeasible) {
  const VertexPair edge{0, 1};
  const SignedGraph g(2, {&edge, 1});
  const LpProblem lp = BuildLp(g, testing::RedBlue(2));
  const FractionalMetric zero(2);
  EXPECT_DOUBLE_EQ(lp.Evaluate(zero), 0.0);
  // 1 <= 0.5 * 2 on each side.
  EXPECT_DOUBLE_EQ(lp.MaxFairnessResidual(zero), 0.0);
  // Splitting the pair puts each vertex alone with its own color.
  const FractionalMetric one(2, 1.0);
  EXPECT_GT(lp.MaxFairnessResidual(one), 0.0);
}

TEST(BuildLp, PlantedFairIndicatorIsFeasibleAtZeroCost) {
  // Clusters {0,1} and {2,3}; colors alternate so each cluster is balanced.
  const std::vector<std::uint32_t> planted{0, 0, 1, 1};
  const SignedGraph g = SignedGraph::FromPredicate(
      4, [&](VertexId u, VertexId v) { return planted[u] == planted[v]; });
  const LpProblem lp = BuildLp(g, testing::RedBlue(4));
  const FractionalMetric x = ClusterIndicatorMetric(Clustering::FromLabels(planted));
  EXPECT_DOUBLE_EQ(lp.Evaluate(x), 0.0);
  EXPECT_LE(lp.MaxFairnessResidual(x), 1e-12);
}

TEST(LpCostShare, Examples) {
  const SignedGraph g = testing::RandomGraph(6, 5);
  const FractionalMetric zero(6);
  std::vector<VertexPair> pos, neg;
  for (const VertexPair& p : AllPairs(6)) (g.IsPositive(p.u, p.v) ? pos : neg).push_back(p);
  EXPECT_DOUBLE_EQ(LpCostShare(zero, g, pos), 0.0);
  EXPECT_DOUBLE_EQ(LpCostShare(zero, g, neg), static_cast<double>(neg.size()));

  const FractionalMetric x = testing::RandomMatrix(6, 9);
  double expect = 0.0;
  for (VertexId u = 0; u < 6; ++u) {
    for (VertexId v = u + 1; v < 6; ++v) {
      expect += g.IsPositive(u, v) ? x.at(u, v) : 1.0 - x.at(u, v);
    }
  }
  EXPECT_NEAR(LpCostShare(x, g, AllPairs(6)), expect, 1e-12);
  EXPECT_NEAR(BuildLp(g, testing::RedBlue(6)).Evaluate(x), expect, 1e-12);
}

TEST(TriangleCuts, EnumerationAndPool) {
  const auto cuts = AllTriangleCuts(4);
  EXPECT_EQ(cuts.size(), 12u);
  EXPECT_TRUE(std::is_sorted(cuts.begin(), cuts.end()));
  LpProblem lp = BuildLp(SignedGraph::AllPositive(4), testing::RedBlue(4));
  EXPECT_EQ(lp.ActivateTriangles(cuts), 12u);
  EXPECT_EQ(lp.ActivateTriangles(cuts), 0u);
}

TEST(ExportMps, ThreeVertexCounts) {
  const SignedGraph g = testing::RandomGraph(3, 4);
  const LpProblem lp = BuildLp(g, testing::RedBlue(3));
  std::ostringstream a, b;
  ExportMps(lp, a);
  ExportMps(lp, b);
  const std::string text = a.str();
  EXPECT_EQ(text, b.str());
  EXPECT_EQ(CountLinesStarting(text, " G  tri_"), 3u);
  EXPECT_EQ(CountLinesStarting(text, " L  fair_"), 2u * 3u);
  EXPECT_EQ(CountLinesStarting(text, " UP BND"), 3u);
  EXPECT_NE(text.find("ENDATA"), std::string::npos);
}

}  // namespace
}  // namespace fcc
