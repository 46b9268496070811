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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "fcc/bench/experiment.hpp"
#include "fcc/bench/report.hpp"
#include "fcc/bench/subsample.hpp"
#include "fcc/bench/synthetic.hpp"

namespace fcc::bench {
namespace {

const std::string kFixtures = FCC_FIXTURE_DIR;

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(LargestRemainder, Examples) {
  const std::vector<std::size_t> three{50, 30, 20};
  EXPECT_EQ(LargestRemainder(three, 10), (std::vector<std::size_t>{5, 3, 2}));
  const std::vector<std::size_t> two{7, 7};
  EXPECT_EQ(LargestRemainder(two, 6), (std::vector<std::size_t>{3, 3}));
  // Quotas 1.5 / 1.5: the tie goes to the earlier stratum.
  const std::vector<std::size_t> odd{5, 5};
  EXPECT_EQ(LargestRemainder(odd, 3), (std::vector<std::size_t>{2, 1}));
  EXPECT_THROW(LargestRemainder(odd, 11), DomainError);
}

TEST(StratifiedSubsample, Proportions) {
  std::vector<std::string> labels;
  for (int i = 0; i < 50; ++i) labels.push_back("a");
  for (int i = 0; i < 30; ++i) labels.push_back("b");
  for (int i = 0; i < 20; ++i) labels.push_back("c");
  const Subsample s = StratifiedSubsample(labels, 10, 4);
  std::map<std::string, int> counts;
  for (VertexId v : s.vertices) ++counts[labels[v]];
  EXPECT_EQ(counts["a"], 5);
  EXPECT_EQ(counts["b"], 3);
  EXPECT_EQ(counts["c"], 2);
  EXPECT_TRUE(std::is_sorted(s.vertices.begin(), s.vertices.end()));
  EXPECT_EQ(StratifiedSubsample(labels, 10, 4).vertices, s.vertices);
}

TEST(StratifiedSubsample, SingleStratumIsUniform) {
  const std::vector<std::string> labels(30, "x");
  const Subsample s = StratifiedSubsample(labels, 8, 1);
  EXPECT_EQ(s.vertices.size(), 8u);
  EXPECT_EQ(std::set<VertexId>(s.vertices.begin(), s.vertices.end()).size(), 8u);
  const std::vector<std::string> halves{"a", "b", "a", "b", "a", "b"};
  const Subsample h = StratifiedSubsample(halves, 4, 1);
  int as = 0;
  for (VertexId v : h.vertices) as += halves[v] == "a";
  EXPECT_EQ(as, 2);
}

TEST(StratifiedSubsample, WarnsWhenStrataOutnumberSeats) {
  const std::vector<std::string> labels{"a", "b", "c", "d"};
  EXPECT_FALSE(StratifiedSubsample(labels, 2, 0).warnings.empty());
}

TEST(PlantedFairClusters, BalancedAndSeeded) {
  PlantedConfig config;
  config.n = 20;
  config.clusters = 2;
  config.noise = 0.0;
  config.seed = 5;
  const PlantedInstance p = PlantedFairClusters(config);
  EXPECT_EQ(p.colors.num_colors(), 2u);
  EXPECT_EQ(p.colors.class_size(0), 10u);
  const Clustering planted = Clustering::FromLabels(p.planted);
  EXPECT_EQ(CorrelationCost(p.graph, planted), 0u);
  for (const auto& members : planted.clusters()) EXPECT_TRUE(IsStrictlyFair(members, p.colors));

  config.noise = 0.2;
  const PlantedInstance a = PlantedFairClusters(config);
  const PlantedInstance b = PlantedFairClusters(config);
  EXPECT_EQ(a.planted, b.planted);
  for (VertexId u = 0; u < 20; ++u) {
    for (VertexId v = u + 1; v < 20; ++v) EXPECT_EQ(a.graph.IsPositive(u, v), b.graph.IsPositive(u, v));
  }
}

TEST(ScaleAlphasToMin, ScalesAndCaps) {
  const std::vector<Param> alphas{Param::Parse("0.25"), Param::Parse("0.5")};
  const auto scaled = ScaleAlphasToMin(alphas, Param::Parse("0.5"));
  EXPECT_EQ(*scaled[0].exact, Rational(1, 2));
  EXPECT_EQ(*scaled[1].exact, Rational(1, 1));
}

TEST(Summarize, SampleDeviation) {
  const std::vector<double> v{1, 2, 3, 4};
  const Stat s = Summarize(v);
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_NEAR(s.sd, std::sqrt(5.0 / 3.0), 1e-12);
  const std::vector<double> one{7};
  EXPECT_DOUBLE_EQ(Summarize(one).sd, 0.0);
}

TEST(DatasetSpec, Validate) {
  DatasetSpec spec;
  spec.source = "embeddings";
  spec.path = "x";
  spec.color_file = "y";
  EXPECT_THROW(spec.Validate(), DomainError);
  spec.theta = 0.5;
  EXPECT_NO_THROW(spec.Validate());
  spec.source = "edges";
  EXPECT_THROW(spec.Validate(), DomainError);
  spec.source = "bogus";
  EXPECT_THROW(spec.Validate(), DomainError);
}

DatasetSpec EmbeddingSpec() {
  DatasetSpec spec;
  spec.id = "emb20";
  spec.source = "embeddings";
  spec.path = kFixtures + "/embeddings_20.csv";
  spec.color_file = kFixtures + "/embeddings_20.colors";
  spec.theta = 0.4;
  return spec;
}

ExperimentConfig SmallConfig() {
  ExperimentConfig config;
  config.sample_size = 8;
  config.subsamples = 2;
  config.stratify = true;
  config.seed = 3;
  config.epsilons = {Param::Parse("0.01"), Param::Parse("0.5")};
  config.alpha_min_targets = {Param::Parse("0.5"), Param::Parse("1")};
  config.grid.shuffles = 2;
  config.grid.threads = 1;
  return config;
}

TEST(RunExperiment, RowsAndInvariants) {
  const Instance inst = LoadInstance(EmbeddingSpec());
  EXPECT_EQ(inst.graph.num_vertices(), 20u);
  const ExperimentOutput out = RunExperiment(inst, SmallConfig());
  ASSERT_EQ(out.rows.size(), 2u * 4u);
  for (const ResultRow& r : out.rows) {
    EXPECT_EQ(r.n, 8u);
    ASSERT_TRUE(r.cost.has_value());
    EXPECT_DOUBLE_EQ(*r.cost_ratio, static_cast<double>(*r.cost) / 28.0);
    EXPECT_DOUBLE_EQ(r.lp_ratio, r.lp_objective / 28.0);
    EXPECT_TRUE(r.eps_fair);
    EXPECT_TRUE(r.within_beta);
    EXPECT_LE(r.violation.value_or(0.0), Param::Parse(r.epsilon).value + 1e-9);
  }
  EXPECT_EQ(out.aggregates.size(), 4u);
  EXPECT_EQ(out.aggregates[0].cost_ratio.count, 2u);
}

TEST(EmitReports, OneRowAndDeterministicRerun) {
  const DatasetSpec spec = EmbeddingSpec();
  ExperimentConfig config = SmallConfig();
  config.subsamples = 1;
  config.epsilons = {Param::Parse("0.1")};
  config.alpha_min_targets.clear();
  const auto manifest = MakeManifest(spec, config);

  const auto base = std::filesystem::temp_directory_path() / "fcc_emit_test";
  std::filesystem::remove_all(base);
  const auto run = [&](const nlohmann::json& m, const std::filesystem::path& dir) {
    const DatasetSpec s = DatasetSpecFromJson(m.at("dataset"));
    const ExperimentConfig c = ExperimentConfigFromJson(m.at("experiment"));
    EmitReports(RunExperiment(LoadInstance(s), c), m, dir);
  };
  run(manifest, base / "a");
  const auto reread = nlohmann::json::parse(Slurp(base / "a" / "manifest.json"));
  run(reread, base / "b");

  const std::string results = Slurp(base / "a" / "results.tsv");
  EXPECT_EQ(std::count(results.begin(), results.end(), '\n'), 2);
  for (const char* f : {"results.tsv", "summary.tsv", "plot_epsilon.tsv", "plot_alpha_min.tsv",
                        "manifest.json"}) {
    EXPECT_EQ(Slurp(base / "a" / f), Slurp(base / "b" / f)) << f;
  }
  EXPECT_TRUE(std::filesystem::exists(base / "a" / "timings.tsv"));
  EXPECT_THROW(EmitReports(ExperimentOutput{}, manifest, base / "c"), DomainError);
  std::filesystem::remove_all(base);
}

TEST(FormatDouble, Shortest) {
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(2.0), "2");
}

}  // namespace
}  // namespace fcc::bench
