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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fcc/bench/experiment.hpp"
#include "fcc/bench/report.hpp"
#include "fcc/bench/subsample.hpp"
#include "fcc/fcc_lp.hpp"
#include "fcc/lp_engine.hpp"
#include "fcc/oracle.hpp"
#include "fcc/rounding.hpp"
#include "fcc/simd/kernels.hpp"

namespace {

using fcc::bench::DatasetSpec;
using fcc::bench::ExperimentConfig;

struct InputOptions {
  DatasetSpec spec;
  double theta = -1.0;
  std::size_t sample_size = 0;
  bool stratify = false;
  std::uint64_t seed = 0;
};

struct Tolerances {
  fcc::SolverConfig solver;
};

void AddInputOptions(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input", in.spec.path, "Input file");
  cmd->add_option("--format", in.spec.source, "edges | embeddings | attributes | synthetic")
      ->check(CLI::IsMember({"edges", "embeddings", "attributes", "synthetic"}));
  cmd->add_option("--id", in.spec.id, "Dataset id used in reports");
  cmd->add_option("--theta", in.theta, "Fraction of most similar pairs made positive");
  cmd->add_option("--colors", in.spec.color_columns, "Color columns of an attribute table")
      ->delimiter(',');
  cmd->add_option("--coords", in.spec.coord_columns, "Numeric columns of an attribute table")
      ->delimiter(',');
  cmd->add_option("--color-file", in.spec.color_file, "Lines: vertex color [color ...]");
  cmd->add_option("--alphas", in.spec.alphas, "List, uniform:<v> or prop:<p-list>");
  cmd->add_option("--synthetic-n", in.spec.synthetic.n, "Planted instance size");
  cmd->add_option("--synthetic-clusters", in.spec.synthetic.clusters, "Planted clusters");
  cmd->add_option("--synthetic-colors", in.spec.synthetic.colors, "Planted colors");
  cmd->add_option("--synthetic-noise", in.spec.synthetic.noise, "Sign flip probability");
  cmd->add_option("--seed", in.seed, "Seed for sampling, generation and shuffles");
  cmd->add_option("--sample-size", in.sample_size, "Subsample size (0 keeps all)");
  cmd->add_flag("--stratify", in.stratify, "Stratify subsamples on color combinations");
}

void AddTolerances(CLI::App* cmd, Tolerances& t) {
  cmd->add_option("--tol-feasibility", t.solver.feasibility_tol);
  cmd->add_option("--tol-separation", t.solver.separation_tol);
  cmd->add_option("--tol-certify", t.solver.certify_tol);
  cmd->add_option("--tol-optimality", t.solver.optimality_tol);
  cmd->add_option("--max-rounds", t.solver.max_rounds);
  cmd->add_option("--separation-budget", t.solver.separation_budget);
  cmd->add_option("--max-columns", t.solver.max_columns);
}

void Finalize(InputOptions& in) {
  if (in.theta >= 0.0) in.spec.theta = in.theta;
  if (in.spec.source == "synthetic") in.spec.synthetic.seed = in.seed;
}

fcc::bench::Instance Load(InputOptions& in) {
  Finalize(in);
  fcc::bench::Instance inst = fcc::bench::LoadInstance(in.spec);
  for (const auto& w : inst.warnings) std::cerr << "warning: " << w << '\n';
  const std::size_t n = inst.graph.num_vertices();
  if (in.sample_size == 0 || in.sample_size == n) return inst;
  auto sample = in.stratify ? fcc::bench::StratifiedSubsample(inst.strata, in.sample_size, in.seed)
                            : fcc::bench::UniformSubsample(n, in.sample_size, in.seed);
  for (const auto& w : sample.warnings) std::cerr << "warning: " << w << '\n';
  fcc::bench::Instance sub;
  sub.id = inst.id;
  sub.graph = inst.graph.Induced(sample.vertices);
  sub.colors = inst.colors.Induced(sample.vertices);
  for (fcc::VertexId v : sample.vertices) sub.strata.push_back(inst.strata[v]);
  return sub;
}

fcc::SolveReport SolveOrImport(const fcc::bench::Instance& inst, const std::string& sol_file,
                               const fcc::SolverConfig& config) {
  fcc::LpProblem lp = fcc::BuildLp(inst.graph, inst.colors);
  if (!sol_file.empty()) {
    return fcc::ReportFromSolution(
        lp, fcc::ReadSolutionFile(sol_file, inst.graph.num_vertices()), config);
  }
  return fcc::Solve(lp, config);
}

void PrintLp(const fcc::SolveReport& r, std::size_t pairs) {
  std::cout << "lp_status: " << fcc::ToString(r.status) << '\n'
            << "lp_objective: " << fcc::bench::FormatDouble(r.objective) << '\n'
            << "lp_ratio: " << fcc::bench::FormatDouble(pairs ? r.objective / pairs : 0.0)
            << '\n'
            << "rounds: " << r.rounds << '\n'
            << "rows_added: " << r.rows_added << '\n'
            << "simplex_iterations: " << r.simplex_iterations << '\n'
            << "metric_excess: " << fcc::bench::FormatDouble(r.certify) << '\n'
            << "fairness_residual: " << fcc::bench::FormatDouble(r.fairness_residual) << '\n';
}

void PrintOutcome(const fcc::RoundingOutcome& o, const fcc::bench::Instance& inst,
                  const fcc::SolveReport& lp) {
  const double pairs = static_cast<double>(inst.graph.num_pairs());
  const double beta =
      fcc::ApproximationBound(fcc::AlphaStar(inst.colors), o.params.epsilon.value);
  std::cout << "cost: " << o.cost << '\n'
            << "cost_ratio: " << fcc::bench::FormatDouble(pairs ? o.cost / pairs : 0.0) << '\n'
            << "violation: "
            << (o.violation ? fcc::bench::FormatDouble(*o.violation) : std::string("NA")) << '\n'
            << "clusters: " << o.clustering.num_clusters() << '\n'
            << "degenerate: " << o.clustering.degenerate().size() << '\n'
            << "rho: " << fcc::bench::FormatDouble(o.params.rho) << '\n'
            << "sigma: " << fcc::bench::FormatDouble(o.params.sigma) << '\n'
            << "order_seed: " << o.params.seed << '\n'
            << "beta: " << fcc::bench::FormatDouble(beta) << '\n'
            << "within_beta: "
            << (static_cast<double>(o.cost) <= beta * lp.objective + 1e-9 ? "yes" : "no") << '\n'
            << "eps_fair: " << (fcc::OutcomeIsEpsFair(o, inst.colors) ? "yes" : "no") << '\n';
}

void WriteLabels(const fcc::Clustering& c, const std::string& path) {
  std::ofstream out(path);
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    out << v << '\t' << c.ClusterOf(static_cast<fcc::VertexId>(v)) << '\n';
  }
  if (!out) throw fcc::DomainError("cannot write " + path);
}

std::vector<fcc::Param> ParseParams(const std::vector<std::string>& text) {
  std::vector<fcc::Param> out;
  for (const auto& t : text) out.push_back(fcc::Param::Parse(t));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair correlation clustering by LP rounding"};
  app.require_subcommand(1);

  // solve-lp
  InputOptions solve_in;
  Tolerances solve_tol;
  std::string solve_out;
  auto* solve = app.add_subcommand("solve-lp", "Solve the fair LP relaxation");
  AddInputOptions(solve, solve_in);
  AddTolerances(solve, solve_tol);
  solve->add_option("--out", solve_out, "Write the solution (x_u_v value lines)");

  // round
  InputOptions round_in;
  Tolerances round_tol;
  std::string round_sol, round_out, round_eps = "0.01";
  double rho = 0.5, sigma = 0.25;
  bool shuffle = false;
  auto* round = app.add_subcommand("round", "One rounding pass for fixed rho and sigma");
  AddInputOptions(round, round_in);
  AddTolerances(round, round_tol);
  round->add_option("--sol-file", round_sol, "Import an LP solution instead of solving");
  round->add_option("--epsilon", round_eps, "Allowed fairness violation");
  round->add_option("--rho", rho, "Ball radius");
  round->add_option("--sigma", sigma, "Density bound");
  round->add_flag("--shuffle", shuffle, "Scan vertices in a seeded random order");
  round->add_option("--out", round_out, "Write vertex/cluster labels");

  // sweep
  InputOptions sweep_in;
  Tolerances sweep_tol;
  std::string sweep_sol, sweep_out, sweep_eps = "0.01";
  std::vector<double> rhos, sigma_fractions;
  std::size_t shuffles = 20, threads = 0;
  bool grid_default = false;
  auto* sweep = app.add_subcommand("sweep", "Best rounding over a parameter grid");
  AddInputOptions(sweep, sweep_in);
  AddTolerances(sweep, sweep_tol);
  sweep->add_option("--sol-file", sweep_sol, "Import an LP solution instead of solving");
  sweep->add_option("--epsilon", sweep_eps, "Allowed fairness violation");
  sweep->add_flag("--grid-default", grid_default, "rho 0.1..0.5, sigma 0.1..1.0 x rho/2");
  sweep->add_option("--rho", rhos, "Radii to try")->delimiter(',');
  sweep->add_option("--sigma", sigma_fractions, "Sigma as fractions of rho/2")->delimiter(',');
  sweep->add_option("--shuffles", shuffles, "Scan orders per grid point");
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");
  sweep->add_option("--out", sweep_out, "Write vertex/cluster labels");

  // experiment
  InputOptions exp_in;
  Tolerances exp_tol;
  std::string exp_out = "results", manifest_path;
  std::vector<std::string> exp_eps{"0.01"}, alpha_min;
  std::string alpha_eps = "0.01";
  std::size_t subsamples = 1, exp_shuffles = 20, exp_threads = 0;
  auto* experiment = app.add_subcommand("experiment", "Full pipeline with reports");
  AddInputOptions(experiment, exp_in);
  AddTolerances(experiment, exp_tol);
  experiment->add_option("--epsilon", exp_eps, "Epsilon sweep values")->delimiter(',');
  experiment->add_option("--alpha-min", alpha_min, "Alpha-min sweep targets")->delimiter(',');
  experiment->add_option("--alpha-epsilon", alpha_eps, "Epsilon for the alpha-min sweep");
  experiment->add_option("--subsamples", subsamples, "Number of subsamples");
  experiment->add_option("--shuffles", exp_shuffles, "Scan orders per grid point");
  experiment->add_option("--threads", exp_threads, "Worker threads (0 = all cores)");
  experiment->add_flag("--grid-default", "Default grid (always used)");
  experiment->add_option("--out", exp_out, "Output directory");
  experiment->add_option("--manifest", manifest_path, "Rerun from a manifest.json");

  // oracle
  InputOptions oracle_in;
  std::string oracle_mode = "fair-strict";
  std::size_t pivot_seeds = 0;
  auto* oracle = app.add_subcommand("oracle", "Brute-force optimum (n <= 12) and pivot");
  AddInputOptions(oracle, oracle_in);
  oracle->add_option("--mode", oracle_mode, "fair-strict | unfair")
      ->check(CLI::IsMember({"fair-strict", "unfair"}));
  oracle->add_option("--pivot-seeds", pivot_seeds, "Also report mean pivot cost");

  // export-lp
  InputOptions export_in;
  std::string export_out;
  bool all_triangles = false;
  auto* export_lp = app.add_subcommand("export-lp", "Write the LP in free MPS format");
  AddInputOptions(export_lp, export_in);
  export_lp->add_option("--out", export_out, "MPS file")->required();
  export_lp->add_flag("--all-triangles", all_triangles, "Include every triangle row");

  auto* isa = app.add_subcommand("isa", "Print the selected SIMD kernel set");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      const auto inst = Load(solve_in);
      const auto report = fcc::Solve(fcc::BuildLp(inst.graph, inst.colors), solve_tol.solver);
      PrintLp(report, inst.graph.num_pairs());
      if (!solve_out.empty() && report.status == fcc::SolveStatus::kOptimal) {
        fcc::WriteSolutionFile(report.x, solve_out);
      }
      return report.status == fcc::SolveStatus::kOptimal ? 0 : 2;
    }
    if (*round) {
      const auto inst = Load(round_in);
      const auto lp = SolveOrImport(inst, round_sol, round_tol.solver);
      PrintLp(lp, inst.graph.num_pairs());
      if (lp.status != fcc::SolveStatus::kOptimal) return 2;
      fcc::RoundingParams p;
      p.epsilon = fcc::Param::Parse(round_eps);
      p.rho = rho;
      p.sigma = sigma;
      if (shuffle) {
        p.order = fcc::ShuffledOrder(inst.graph.num_vertices(), round_in.seed, 0);
        p.seed = round_in.seed;
      }
      const auto outcome = fcc::Round(lp.x, inst.graph, inst.colors, p);
      PrintOutcome(outcome, inst, lp);
      if (!round_out.empty()) WriteLabels(outcome.clustering, round_out);
      return 0;
    }
    if (*sweep) {
      const auto inst = Load(sweep_in);
      const auto lp = SolveOrImport(inst, sweep_sol, sweep_tol.solver);
      PrintLp(lp, inst.graph.num_pairs());
      if (lp.status != fcc::SolveStatus::kOptimal) return 2;
      fcc::SweepGrid grid = fcc::SweepGrid::Default(sweep_in.seed);
      if (!grid_default) {
        if (!rhos.empty()) grid.rhos = rhos;
        if (!sigma_fractions.empty()) grid.sigma_fractions = sigma_fractions;
      }
      grid.shuffles = shuffles;
      grid.threads = threads;
      const auto outcome =
          fcc::Sweep(lp.x, inst.graph, inst.colors, fcc::Param::Parse(sweep_eps), grid);
      PrintOutcome(outcome, inst, lp);
      if (!sweep_out.empty()) WriteLabels(outcome.clustering, sweep_out);
      return 0;
    }
    if (*experiment) {
      DatasetSpec spec;
      ExperimentConfig config;
      if (!manifest_path.empty()) {
        std::ifstream in(manifest_path);
        if (!in) throw fcc::DomainError("cannot open " + manifest_path);
        const auto manifest = nlohmann::json::parse(in);
        spec = fcc::bench::DatasetSpecFromJson(manifest.at("dataset"));
        config = fcc::bench::ExperimentConfigFromJson(manifest.at("experiment"));
      } else {
        Finalize(exp_in);
        spec = exp_in.spec;
        config.sample_size = exp_in.sample_size;
        config.stratify = exp_in.stratify;
        config.seed = exp_in.seed;
        config.subsamples = subsamples;
        config.epsilons = ParseParams(exp_eps);
        config.alpha_min_targets = ParseParams(alpha_min);
        config.alpha_sweep_epsilon = fcc::Param::Parse(alpha_eps);
        config.grid.shuffles = exp_shuffles;
        config.solver = exp_tol.solver;
      }
      config.grid.threads = exp_threads;
      const auto inst = fcc::bench::LoadInstance(spec);
      const auto output = fcc::bench::RunExperiment(inst, config);
      for (const auto& w : output.warnings) std::cerr << "warning: " << w << '\n';
      fcc::bench::EmitReports(output, fcc::bench::MakeManifest(spec, config), exp_out);
      fcc::bench::WriteSummary(output.aggregates, std::cout);
      return 0;
    }
    if (*oracle) {
      const auto inst = Load(oracle_in);
      const auto mode =
          oracle_mode == "unfair" ? fcc::OracleMode::kUnfair : fcc::OracleMode::kFairStrict;
      const auto result = fcc::BruteForceOptimum(inst.graph, &inst.colors, mode);
      std::cout << "mode: " << fcc::ToString(mode) << '\n'
                << "feasible: " << (result.feasible ? "yes" : "no") << '\n'
                << "optimum: " << (result.optimum ? std::to_string(*result.optimum) : "NA")
                << '\n'
                << "partitions: " << result.partitions_examined << '\n'
                << "feasible_partitions: " << result.feasible_count << '\n';
      if (pivot_seeds > 0) {
        double total = 0.0;
        for (std::size_t s = 0; s < pivot_seeds; ++s) {
          total += static_cast<double>(fcc::CorrelationCost(
              inst.graph, fcc::Pivot(inst.graph, oracle_in.seed + s)));
        }
        std::cout << "pivot_mean_cost: " << fcc::bench::FormatDouble(total / pivot_seeds)
                  << '\n';
      }
      return result.feasible ? 0 : 2;
    }
    if (*export_lp) {
      const auto inst = Load(export_in);
      fcc::LpProblem lp = fcc::BuildLp(inst.graph, inst.colors);
      if (all_triangles) {
        const auto cuts = fcc::AllTriangleCuts(inst.graph.num_vertices());
        lp.ActivateTriangles(cuts);
      }
      fcc::ExportMps(lp, export_out);
      std::cout << "columns: " << lp.num_columns() << '\n'
                << "fairness_rows: " << lp.fairness_rows().size() << '\n'
                << "triangle_rows: " << lp.triangle_pool().size() << '\n';
      return 0;
    }
    if (*isa) {
      std::cout << fcc::simd::IsaName(fcc::simd::Kernels().isa) << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
