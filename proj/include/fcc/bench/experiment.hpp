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

#ifndef FCC_BENCH_EXPERIMENT_HPP_
#define FCC_BENCH_EXPERIMENT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fcc/bench/synthetic.hpp"
#include "fcc/fairness.hpp"
#include "fcc/lp_engine.hpp"
#include "fcc/rational.hpp"
#include "fcc/rounding.hpp"
#include "fcc/signed_graph.hpp"

namespace fcc::bench {

// Where an instance comes from. `theta` applies to embeddings and to
// attribute tables with coordinate columns.
struct DatasetSpec {
  std::string id;
  std::string source = "edges";  // edges | embeddings | attributes | synthetic
  std::string path;
  std::optional<double> theta;
  std::vector<std::string> color_columns;
  std::vector<std::string> coord_columns;
  std::string color_file;
  std::string alphas = "uniform:0.5";
  PlantedConfig synthetic;

  // Throws DomainError on inconsistent fields.
  void Validate() const;
};

struct Instance {
  std::string id;
  SignedGraph graph;
  ColorModel colors;
  // Stratum label per vertex (color combination).
  std::vector<std::string> strata;
  std::vector<std::string> warnings;
};

Instance LoadInstance(const DatasetSpec& spec);

struct ExperimentConfig {
  // 0 keeps every vertex.
  std::size_t sample_size = 0;
  std::size_t subsamples = 1;
  bool stratify = false;
  std::uint64_t seed = 0;
  std::vector<Param> epsilons{Param::Parse("0.01")};
  // Empty skips the alpha-min sweep.
  std::vector<Param> alpha_min_targets;
  Param alpha_sweep_epsilon = Param::Parse("0.01");
  // The seed is replaced per subsample.
  SweepGrid grid = SweepGrid::Default();
  SolverConfig solver;
};

struct ResultRow {
  std::string dataset;
  std::string sweep;  // "epsilon" or "alpha_min"
  std::size_t subsample = 0;
  std::size_t param_id = 0;
  std::size_t n = 0;
  std::string epsilon;
  double alpha_min = 0.0;
  SolveStatus lp_status = SolveStatus::kOptimal;
  double lp_objective = 0.0;
  double lp_ratio = 0.0;
  std::optional<std::uint64_t> cost;
  std::optional<double> cost_ratio;
  std::optional<double> violation;
  double beta = 0.0;
  double rho = 0.0;
  double sigma = 0.0;
  std::uint64_t order_seed = 0;
  std::size_t lp_rounds = 0;
  std::size_t degenerate = 0;
  bool eps_fair = false;
  bool within_beta = false;
};

struct PhaseTiming {
  std::size_t subsample = 0;
  std::string sweep;
  std::size_t param_id = 0;
  std::string phase;  // "lp" or "round"
  double milliseconds = 0.0;
};

struct Stat {
  std::size_t count = 0;
  double mean = 0.0;
  // Sample standard deviation; 0 for a single value.
  double sd = 0.0;
};

Stat Summarize(std::span<const double> values);

struct AggregateRow {
  std::string dataset;
  std::string sweep;
  std::size_t param_id = 0;
  std::string epsilon;
  double alpha_min = 0.0;
  Stat cost_ratio;
  Stat lp_ratio;
  Stat violation;
};

struct ExperimentOutput {
  std::vector<ResultRow> rows;
  std::vector<AggregateRow> aggregates;
  std::vector<PhaseTiming> timings;
  std::vector<std::string> warnings;
};

// alpha_i <- min(1, alpha_i * target / alpha_min). Exact when all inputs are.
std::vector<Param> ScaleAlphasToMin(std::span<const Param> alphas, const Param& target);

// Per subsample: build and solve the LP, sweep the rounding for every
// epsilon, then re-solve and sweep for every alpha-min target. Rows are
// ordered by (subsample, sweep, param id).
ExperimentOutput RunExperiment(const Instance& instance, const ExperimentConfig& config);

}  // namespace fcc::bench

#endif  // FCC_BENCH_EXPERIMENT_HPP_
