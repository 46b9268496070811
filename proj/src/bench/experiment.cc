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

#include "fcc/bench/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>

#include "fcc/bench/ingest.hpp"
#include "fcc/bench/subsample.hpp"

namespace fcc::bench {

void DatasetSpec::Validate() const {
  static const char* kSources[] = {"edges", "embeddings", "attributes", "synthetic"};
  if (std::find(std::begin(kSources), std::end(kSources), source) == std::end(kSources)) {
    throw DomainError("unknown input format " + source);
  }
  if (source != "synthetic" && path.empty()) throw DomainError("input path required");
  const bool wants_theta =
      source == "embeddings" || (source == "attributes" && !coord_columns.empty());
  if (wants_theta && !theta) throw DomainError("theta required for " + source);
  if (!wants_theta && theta) throw DomainError("theta only applies to similarity inputs");
  if (theta && !(*theta >= 0.0 && *theta <= 1.0)) throw DomainError("theta outside [0, 1]");
  if (source == "attributes") {
    if (color_columns.empty()) throw DomainError("attribute input needs color columns");
    if (coord_columns.empty()) throw DomainError("attribute input needs coordinate columns");
  }
  if ((source == "edges" || source == "embeddings") && color_file.empty()) {
    throw DomainError(source + " input needs a color file");
  }
}

Instance LoadInstance(const DatasetSpec& spec) {
  spec.Validate();
  Instance out;
  out.id = spec.id.empty() ? spec.source : spec.id;
  ColorClasses classes;
  std::size_t n = 0;
  if (spec.source == "synthetic") {
    PlantedInstance planted = PlantedFairClusters(spec.synthetic);
    out.graph = std::move(planted.graph);
    n = out.graph.num_vertices();
    for (std::size_t i = 0; i < planted.colors.num_colors(); ++i) {
      classes.classes.push_back(planted.colors.members(i));
      classes.names.push_back(planted.colors.name(i));
    }
    out.strata = std::move(planted.color_labels);
  } else if (spec.source == "edges") {
    EdgeListGraph edges = ReadEdgeList(spec.path);
    out.graph = std::move(edges.graph);
    out.warnings = std::move(edges.warnings);
    n = out.graph.num_vertices();
    classes = ReadColorFile(spec.color_file, edges.names);
    out.strata = MembershipLabels(classes, n);
  } else if (spec.source == "embeddings") {
    const Matrix rows = ReadMatrix(spec.path);
    out.graph = CosineThresholdGraph(rows, *spec.theta);
    n = rows.size();
    std::vector<std::string> names(n);
    for (std::size_t v = 0; v < n; ++v) names[v] = std::to_string(v);
    classes = ReadColorFile(spec.color_file, names);
    out.strata = MembershipLabels(classes, n);
  } else {
    const Table table = ReadTable(spec.path);
    n = table.rows.size();
    out.graph = CosineThresholdGraph(NumericColumns(table, spec.coord_columns), *spec.theta);
    classes = ClassesFromColumns(table, spec.color_columns);
    out.strata = CombinationLabels(table, spec.color_columns);
  }
  auto alphas = ParseAlphas(spec.alphas, classes.classes.size());
  out.colors = ColorModel(n, classes.classes, std::move(alphas), classes.names);
  return out;
}

Stat Summarize(std::span<const double> values) {
  Stat s;
  s.count = values.size();
  if (values.empty()) return s;
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(s.count);
  if (s.count > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(ss / static_cast<double>(s.count - 1));
  }
  return s;
}

namespace {

std::optional<Rational> ExactScale(const Rational& a, const Rational& t, const Rational& m) {
  __int128 num = static_cast<__int128>(a.num()) * t.num() * m.den();
  __int128 den = static_cast<__int128>(a.den()) * t.den() * m.num();
  if (den == 0) return std::nullopt;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 x = num < 0 ? -num : num;
  __int128 y = den;
  while (y != 0) {
    const __int128 r = x % y;
    x = y;
    y = r;
  }
  if (x > 1) {
    num /= x;
    den /= x;
  }
  if (den > 1'000'000'000'000 || num > INT64_MAX || num < INT64_MIN) return std::nullopt;
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

double Milliseconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

struct Context {
  const ExperimentConfig& config;
  std::string dataset;
  std::size_t subsample;
  ExperimentOutput& out;
};

ResultRow MakeRow(const Context& ctx, const std::string& sweep, std::size_t param_id,
                  const SignedGraph& g, const ColorModel& colors, const SolveReport& lp,
                  const Param& eps, std::uint64_t grid_seed) {
  ResultRow row;
  row.dataset = ctx.dataset;
  row.sweep = sweep;
  row.subsample = ctx.subsample;
  row.param_id = param_id;
  row.n = g.num_vertices();
  row.epsilon = eps.ToString();
  row.alpha_min = colors.min_alpha();
  row.lp_status = lp.status;
  row.lp_rounds = lp.rounds;
  row.beta = ApproximationBound(AlphaStar(colors), eps.value);
  const double pairs = static_cast<double>(g.num_pairs());
  if (lp.status != SolveStatus::kOptimal) return row;
  row.lp_objective = lp.objective;
  row.lp_ratio = pairs > 0 ? lp.objective / pairs : 0.0;

  SweepGrid grid = ctx.config.grid;
  grid.seed = grid_seed;
  const auto start = std::chrono::steady_clock::now();
  const RoundingOutcome best = Sweep(lp.x, g, colors, eps, grid);
  ctx.out.timings.push_back({ctx.subsample, sweep, param_id, "round", Milliseconds(start)});
  row.cost = best.cost;
  row.cost_ratio = pairs > 0 ? static_cast<double>(best.cost) / pairs : 0.0;
  row.violation = best.violation;
  row.rho = best.params.rho;
  row.sigma = best.params.sigma;
  row.order_seed = best.params.seed;
  row.degenerate = best.clustering.degenerate().size();
  row.eps_fair = OutcomeIsEpsFair(best, colors);
  row.within_beta = !std::isfinite(row.beta) ||
                    static_cast<double>(best.cost) <= row.beta * lp.objective + 1e-9;
  return row;
}

SolveReport TimedSolve(const Context& ctx, const std::string& sweep, std::size_t param_id,
                       const SignedGraph& g, const ColorModel& colors) {
  const auto start = std::chrono::steady_clock::now();
  SolveReport report = Solve(BuildLp(g, colors), ctx.config.solver);
  ctx.out.timings.push_back({ctx.subsample, sweep, param_id, "lp", Milliseconds(start)});
  return report;
}

void Aggregate(ExperimentOutput& out) {
  std::map<std::pair<int, std::size_t>, std::vector<const ResultRow*>> groups;
  for (const ResultRow& row : out.rows) {
    groups[{row.sweep == "epsilon" ? 0 : 1, row.param_id}].push_back(&row);
  }
  for (const auto& [key, rows] : groups) {
    AggregateRow agg;
    agg.dataset = rows.front()->dataset;
    agg.sweep = rows.front()->sweep;
    agg.param_id = key.second;
    agg.epsilon = rows.front()->epsilon;
    std::vector<double> cost, lp, violation, alpha;
    for (const ResultRow* r : rows) {
      alpha.push_back(r->alpha_min);
      if (r->lp_status == SolveStatus::kOptimal) lp.push_back(r->lp_ratio);
      if (r->cost_ratio) cost.push_back(*r->cost_ratio);
      if (r->violation) violation.push_back(*r->violation);
    }
    agg.alpha_min = Summarize(alpha).mean;
    agg.cost_ratio = Summarize(cost);
    agg.lp_ratio = Summarize(lp);
    agg.violation = Summarize(violation);
    out.aggregates.push_back(std::move(agg));
  }
}

}  // namespace

std::vector<Param> ScaleAlphasToMin(std::span<const Param> alphas, const Param& target) {
  if (alphas.empty()) throw DomainError("no alphas to scale");
  if (!(target.value > 0.0 && target.value <= 1.0)) {
    throw DomainError("alpha-min target outside (0, 1]");
  }
  const auto min_it = std::min_element(alphas.begin(), alphas.end(),
                                       [](const Param& a, const Param& b) {
                                         return a.value < b.value;
                                       });
  const Param& amin = *min_it;
  std::vector<Param> out;
  for (const Param& a : alphas) {
    std::optional<Rational> exact;
    if (a.exact && target.exact && amin.exact) exact = ExactScale(*a.exact, *target.exact, *amin.exact);
    Param scaled = exact ? Param::FromRational(*exact)
                         : Param::FromDouble(a.value * target.value / amin.value);
    if (scaled.value >= 1.0) scaled = Param::FromRational(Rational(1, 1));
    out.push_back(scaled);
  }
  return out;
}

ExperimentOutput RunExperiment(const Instance& instance, const ExperimentConfig& config) {
  if (config.subsamples == 0) throw DomainError("at least one subsample required");
  if (config.epsilons.empty() && config.alpha_min_targets.empty()) {
    throw DomainError("nothing to sweep");
  }
  ExperimentOutput out;
  out.warnings = instance.warnings;
  const std::size_t n = instance.graph.num_vertices();
  const std::size_t k = config.sample_size == 0 ? n : config.sample_size;
  if (k > n) throw DomainError("sample size exceeds vertex count");

  for (std::size_t s = 0; s < config.subsamples; ++s) {
    const std::uint64_t sample_seed = config.seed + s;
    std::vector<VertexId> vertices;
    if (k == n) {
      vertices.resize(n);
      std::iota(vertices.begin(), vertices.end(), VertexId{0});
    } else {
      Subsample sample = config.stratify ? StratifiedSubsample(instance.strata, k, sample_seed)
                                         : UniformSubsample(n, k, sample_seed);
      for (auto& w : sample.warnings) out.warnings.push_back(std::move(w));
      vertices = std::move(sample.vertices);
    }
    const SignedGraph g = instance.graph.Induced(vertices);
    const ColorModel colors = instance.colors.Induced(vertices);
    Context ctx{config, instance.id, s, out};

    if (!config.epsilons.empty()) {
      const SolveReport lp = TimedSolve(ctx, "epsilon", 0, g, colors);
      for (std::size_t e = 0; e < config.epsilons.size(); ++e) {
        out.rows.push_back(
            MakeRow(ctx, "epsilon", e, g, colors, lp, config.epsilons[e], sample_seed));
      }
    }
    for (std::size_t t = 0; t < config.alpha_min_targets.size(); ++t) {
      const ColorModel scaled =
          colors.WithAlphas(ScaleAlphasToMin(colors.alphas(), config.alpha_min_targets[t]));
      const SolveReport lp = TimedSolve(ctx, "alpha_min", t, g, scaled);
      out.rows.push_back(MakeRow(ctx, "alpha_min", t, g, scaled, lp,
                                 config.alpha_sweep_epsilon, sample_seed));
    }
  }
  Aggregate(out);
  return out;
}

}  // namespace fcc::bench
