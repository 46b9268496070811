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

#include "fcc/fairness.hpp"

#include <gtest/gtest.h>

#include "fcc/rational.hpp"
#include "test_util.hpp"

namespace fcc {
namespace {

std::vector<Param> Params(std::initializer_list<const char*> texts) {
  std::vector<Param> out;
  for (const char* t : texts) out.push_back(Param::Parse(t));
  return out;
}

TEST(Rational, ParseForms) {
  EXPECT_EQ(Rational::Parse("0.35"), Rational(7, 20));
  EXPECT_EQ(Rational::Parse("1/3"), Rational(1, 3));
  EXPECT_EQ(Rational::Parse("-2.5"), Rational(-5, 2));
  EXPECT_FALSE(Rational::TryParse("abc").has_value());
  EXPECT_THROW(Rational(1, 0), DomainError);
}

TEST(ColorModel, Validation) {
  EXPECT_THROW(ColorModel(2, {{0}, {}}, Params({"0.5", "0.5"})), DomainError);
  EXPECT_THROW(ColorModel(2, {{0}, {2}}, Params({"0.5", "0.5"})), DomainError);
  EXPECT_THROW(ColorModel(2, {{0}, {1}}, Params({"0.5"})), DomainError);
  EXPECT_THROW(ColorModel(2, {{0}, {1}}, Params({"0", "0.5"})), DomainError);
  EXPECT_THROW(ColorModel(2, {{0}, {1}}, Params({"1.5", "0.5"})), DomainError);
}

TEST(AlphaStar, Examples) {
  EXPECT_DOUBLE_EQ(AlphaStar(Params({"0.5", "0.5"})), 1.0);
  EXPECT_DOUBLE_EQ(AlphaStar(Params({"1"})), 0.0);
  // Independent evaluation of (1 - a) / a per entry.
  const std::vector<double> raw{0.25, 0.5, 0.8};
  double expect = 0.0;
  for (double a : raw) expect = std::max(expect, (1 - a) / a);
  EXPECT_DOUBLE_EQ(AlphaStar(Params({"0.25", "0.5", "0.8"})), expect);
  EXPECT_DOUBLE_EQ(expect, 3.0);
  EXPECT_THROW(AlphaStar(std::span<const Param>{}), DomainError);
}

TEST(ProportionalAlphas, Normalizes) {
  auto check = [](std::vector<double> p) {
    double sum = 0.0;
    for (double v : p) sum += v;
    const auto alphas = ProportionalAlphas(std::span<const double>(p));
    ASSERT_EQ(alphas.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) EXPECT_DOUBLE_EQ(alphas[i].value, p[i] / sum);
  };
  check({1, 1});
  check({1, 1, 2});
  check({1, 3});
  const auto exact = ProportionalAlphas(Params({"1", "3"}));
  EXPECT_EQ(*exact[0].exact, Rational(1, 4));
  EXPECT_EQ(*exact[1].exact, Rational(3, 4));
}

TEST(IsEpsFair, RedBlueExamples) {
  const ColorModel colors(3, {{0, 1}, {2}}, Params({"0.5", "0.5"}));
  const std::vector<VertexId> balanced{1, 2};
  const std::vector<VertexId> heavy{0, 1, 2};
  EXPECT_TRUE(IsEpsFair(balanced, colors, Param::Parse("0")));
  EXPECT_FALSE(IsEpsFair(heavy, colors, Param::Parse("0")));
  // 2 <= 1.34 * 1.5 = 2.01
  EXPECT_LE(2.0, 1.34 * 1.5);
  EXPECT_TRUE(IsEpsFair(heavy, colors, Param::Parse("0.34")));
  EXPECT_FALSE(IsEpsFair(heavy, colors, Param::Parse("0.33")));
  EXPECT_TRUE(IsStrictlyFair(balanced, colors));
  EXPECT_FALSE(IsStrictlyFair(heavy, colors));
}

TEST(IsEpsFair, ExactBoundary) {
  // 2 <= (1 + 1/3) * 0.5 * 3 holds with equality.
  const ColorModel colors(3, {{0, 1}, {2}}, Params({"0.5", "0.5"}));
  const std::vector<VertexId> heavy{0, 1, 2};
  EXPECT_TRUE(IsEpsFair(heavy, colors, Param::Parse("1/3")));
  VertexBitset bits(3);
  for (VertexId v : heavy) bits.Set(v);
  EXPECT_TRUE(IsEpsFair(bits, colors, Param::Parse("1/3")));
}

TEST(MaxFairnessViolation, Examples) {
  const ColorModel colors = testing::RedBlue(6);
  const std::vector<std::uint32_t> pairs{0, 0, 1, 1, 2, 2};
  EXPECT_DOUBLE_EQ(*MaxFairnessViolation(Clustering::FromLabels(pairs), colors), 0.0);

  const ColorModel three(3, {{0, 1}, {2}}, Params({"0.5", "0.5"}));
  const double expect = 2.0 / (0.5 * 3.0) - 1.0;
  EXPECT_NEAR(*MaxFairnessViolation(Clustering::SingleCluster(3), three), expect, 1e-12);
  EXPECT_NEAR(expect, 1.0 / 3.0, 1e-12);

  const std::vector<VertexId> all{0, 1, 2};
  EXPECT_FALSE(
      MaxFairnessViolation(Clustering::FromClusters(3, {{0}, {1}, {2}}, all), three).has_value());
}

TEST(MaxAdditiveViolation, WithinAllowance) {
  const ColorModel three(3, {{0, 1}, {2}}, Params({"0.5", "0.5"}));
  // excess 0.5 over max{1, 0.1 * 3 * 0.5}
  EXPECT_NEAR(*MaxAdditiveViolation(Clustering::SingleCluster(3), three, 0.1), 0.5, 1e-12);
}

TEST(ColorModel, InducedDropsEmpty) {
  const ColorModel colors(4, {{0, 1}, {2, 3}}, Params({"0.5", "0.5"}));
  const std::vector<VertexId> keep{3, 2};
  const ColorModel sub = colors.Induced(keep);
  EXPECT_EQ(sub.num_colors(), 1u);
  EXPECT_EQ(sub.class_size(0), 2u);
}

}  // namespace
}  // namespace fcc
