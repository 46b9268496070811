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

#include "fcc/bench/ingest.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace fcc::bench {
namespace {

const std::string kFixtures = FCC_FIXTURE_DIR;

TEST(ReadEdgeList, EmptyIsError) {
  std::istringstream in("# nothing here\n\n");
  EXPECT_THROW(ReadEdgeList(in), DomainError);
}

TEST(ReadEdgeList, CompletesSigns) {
  std::istringstream in("a b\nc a\nb c\na b\n");
  std::istringstream one("x y\ny z\n");
  const EdgeListGraph two = ReadEdgeList(one);
  EXPECT_EQ(two.graph.num_vertices(), 3u);
  EXPECT_EQ(two.graph.num_positive(), 2u);
  EXPECT_EQ(two.graph.num_negative(), 1u);
  const EdgeListGraph dup = ReadEdgeList(in);
  EXPECT_EQ(dup.names, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(dup.graph.num_positive(), 3u);
  EXPECT_EQ(dup.warnings.size(), 1u);
}

TEST(ReadEdgeList, Errors) {
  std::istringstream loop("a a\n");
  EXPECT_THROW(ReadEdgeList(loop), DomainError);
  std::istringstream lone("a\n");
  EXPECT_THROW(ReadEdgeList(lone), DomainError);
}

TEST(ReadEdgeList, FixturePairCount) {
  const EdgeListGraph e = ReadEdgeList(kFixtures + "/edges_10.txt");
  const std::size_t n = e.graph.num_vertices();
  EXPECT_EQ(n, 10u);
  EXPECT_EQ(e.graph.num_positive() + e.graph.num_negative(), n * (n - 1) / 2);
  const ColorClasses c = ReadColorFile(kFixtures + "/edges_10.colors", e.names);
  EXPECT_EQ(c.names, (std::vector<std::string>{"blue", "red"}));
  EXPECT_EQ(c.classes[0].size() + c.classes[1].size(), 10u);
}

TEST(CosineThresholdGraph, Extremes) {
  const Matrix rows{{1, 0}, {0, 1}, {1, 1}, {2, 1}};
  EXPECT_EQ(CosineThresholdGraph(rows, 0.1).num_positive(), 0u);
  EXPECT_EQ(CosineThresholdGraph(rows, 1.0).num_positive(), 6u);
  EXPECT_THROW(CosineThresholdGraph({{0, 0}, {1, 1}}, 0.5), DomainError);
  EXPECT_THROW(CosineThresholdGraph(rows, 1.5), DomainError);
}

TEST(CosineThresholdGraph, MatchesFullSort) {
  const Matrix rows = ReadMatrix(kFixtures + "/embeddings_20.csv");
  ASSERT_EQ(rows.size(), 20u);
  const Matrix six(rows.begin(), rows.begin() + 6);
  const SignedGraph g = CosineThresholdGraph(six, 0.5);

  struct Scored {
    double sim;
    VertexId u, v;
  };
  std::vector<Scored> all;
  for (VertexId u = 0; u < 6; ++u) {
    for (VertexId v = u + 1; v < 6; ++v) {
      const double dot = std::inner_product(six[u].begin(), six[u].end(), six[v].begin(), 0.0);
      const double nu = std::sqrt(std::inner_product(six[u].begin(), six[u].end(), six[u].begin(), 0.0));
      const double nv = std::sqrt(std::inner_product(six[v].begin(), six[v].end(), six[v].begin(), 0.0));
      all.push_back({dot / (nu * nv), u, v});
    }
  }
  std::sort(all.begin(), all.end(), [](const Scored& a, const Scored& b) {
    if (a.sim != b.sim) return a.sim > b.sim;
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  const std::size_t keep = 7;  // floor(0.5 * 15)
  EXPECT_EQ(g.num_positive(), keep);
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(g.IsPositive(all[i].u, all[i].v), i < keep) << all[i].u << "," << all[i].v;
  }
}

TEST(ClassesFromColumns, SingleColumnPartitions) {
  std::istringstream in("sex,age\nf,1\nm,2\nf,3\nm,4\n");
  const Table t = ReadTable(in);
  const std::vector<std::string> cols{"sex"};
  const ColorClasses c = ClassesFromColumns(t, cols);
  ASSERT_EQ(c.classes.size(), 2u);
  EXPECT_EQ(c.names, (std::vector<std::string>{"sex=f", "sex=m"}));
  EXPECT_EQ(c.classes[0].size() + c.classes[1].size(), 4u);
}

TEST(ClassesFromColumns, TwoColumnsEachVertexTwice) {
  std::istringstream in("sex\trace\nf\tx\nm\ty\nf\ty\nm\tx\n");
  const Table t = ReadTable(in);
  const std::vector<std::string> cols{"sex", "race"};
  const ColorClasses c = ClassesFromColumns(t, cols);
  ASSERT_EQ(c.classes.size(), 4u);
  std::vector<int> memberships(4, 0);
  for (const auto& cls : c.classes) {
    for (VertexId v : cls) ++memberships[v];
  }
  EXPECT_EQ(memberships, (std::vector<int>{2, 2, 2, 2}));
  EXPECT_EQ(CombinationLabels(t, cols)[2], "f|y");
}

TEST(ClassesFromColumns, BankStyleFiveClasses) {
  const Table t = ReadTable(kFixtures + "/bank_24.csv");
  const std::vector<std::string> cols{"marital", "loan"};
  const ColorClasses c = ClassesFromColumns(t, cols);
  EXPECT_EQ(c.names, (std::vector<std::string>{"marital=divorced", "marital=married",
                                               "marital=single", "loan=no", "loan=yes"}));
  EXPECT_THROW(ColumnIndex(t, "missing"), DomainError);
}

TEST(ParseAlphas, Forms) {
  const auto u = ParseAlphas("uniform:0.5", 3);
  ASSERT_EQ(u.size(), 3u);
  EXPECT_EQ(*u[2].exact, Rational(1, 2));
  const auto p = ParseAlphas("prop:1,3", 2);
  EXPECT_EQ(*p[1].exact, Rational(3, 4));
  const auto l = ParseAlphas("0.2,0.8", 2);
  EXPECT_DOUBLE_EQ(l[0].value, 0.2);
  EXPECT_THROW(ParseAlphas("0.2,0.8", 3), DomainError);
  EXPECT_THROW(ParseAlphas("uniform:x", 2), DomainError);
}

}  // namespace
}  // namespace fcc::bench
