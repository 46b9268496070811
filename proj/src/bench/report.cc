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

#include "fcc/bench/report.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace fcc::bench {
namespace {

constexpr char kNa[] = "NA";

std::string Optional(const std::optional<double>& v) { return v ? FormatDouble(*v) : kNa; }

std::vector<std::string> ParamStrings(const std::vector<Param>& params) {
  std::vector<std::string> out;
  for (const Param& p : params) out.push_back(p.ToString());
  return out;
}

std::vector<Param> ParamsFrom(const nlohmann::json& j) {
  std::vector<Param> out;
  for (const auto& s : j) out.push_back(Param::Parse(s.get<std::string>()));
  return out;
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw DomainError("cannot write " + path.string());
}

}  // namespace

std::string FormatDouble(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) return kNa;
  return std::string(buf, ptr);
}

void WriteResults(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << "dataset\tsweep\tsubsample\tparam_id\tn\tpairs\tepsilon\talpha_min\tlp_status"
         "\tlp_objective\tlp_ratio\tcost\tcost_ratio\tviolation\tbeta\twithin_beta\teps_fair"
         "\trho\tsigma\torder_seed\tdegenerate\tlp_rounds\n";
  for (const ResultRow& r : rows) {
    const bool solved = r.lp_status == SolveStatus::kOptimal;
    out << r.dataset << '\t' << r.sweep << '\t' << r.subsample << '\t' << r.param_id << '\t'
        << r.n << '\t' << PairCount(r.n) << '\t' << r.epsilon << '\t'
        << FormatDouble(r.alpha_min) << '\t' << ToString(r.lp_status) << '\t'
        << (solved ? FormatDouble(r.lp_objective) : kNa) << '\t'
        << (solved ? FormatDouble(r.lp_ratio) : kNa) << '\t'
        << (r.cost ? std::to_string(*r.cost) : kNa) << '\t' << Optional(r.cost_ratio) << '\t'
        << Optional(r.violation) << '\t' << FormatDouble(r.beta) << '\t'
        << (r.cost ? (r.within_beta ? "1" : "0") : kNa) << '\t'
        << (r.cost ? (r.eps_fair ? "1" : "0") : kNa) << '\t'
        << (r.cost ? FormatDouble(r.rho) : kNa) << '\t'
        << (r.cost ? FormatDouble(r.sigma) : kNa) << '\t'
        << (r.cost ? std::to_string(r.order_seed) : kNa) << '\t'
        << (r.cost ? std::to_string(r.degenerate) : kNa) << '\t' << r.lp_rounds << '\n';
  }
}

void WriteSummary(const std::vector<AggregateRow>& rows, std::ostream& out) {
  out << "dataset\tsweep\tparam_id\tepsilon\talpha_min\tcount\tcost_ratio_mean"
         "\tcost_ratio_sd\tlp_ratio_mean\tlp_ratio_sd\tviolation_mean\tviolation_sd\n";
  auto stat = [](const Stat& s) {
    if (s.count == 0) return std::string(kNa) + '\t' + kNa;
    return FormatDouble(s.mean) + '\t' + FormatDouble(s.sd);
  };
  for (const AggregateRow& r : rows) {
    out << r.dataset << '\t' << r.sweep << '\t' << r.param_id << '\t' << r.epsilon << '\t'
        << FormatDouble(r.alpha_min) << '\t' << r.cost_ratio.count << '\t'
        << stat(r.cost_ratio) << '\t' << stat(r.lp_ratio) << '\t' << stat(r.violation)
        << '\n';
  }
}

void WritePlotData(const std::vector<AggregateRow>& rows, const std::string& sweep,
                   std::ostream& out) {
  out << (sweep == "epsilon" ? "epsilon" : "alpha_min")
      << "\tcost_ratio\tcost_ratio_sd\tlp_ratio\tviolation\tviolation_sd\n";
  for (const AggregateRow& r : rows) {
    if (r.sweep != sweep) continue;
    const std::string x = sweep == "epsilon" ? r.epsilon : FormatDouble(r.alpha_min);
    auto mean = [](const Stat& s) { return s.count ? FormatDouble(s.mean) : kNa; };
    auto sd = [](const Stat& s) { return s.count ? FormatDouble(s.sd) : kNa; };
    out << x << '\t' << mean(r.cost_ratio) << '\t' << sd(r.cost_ratio) << '\t'
        << mean(r.lp_ratio) << '\t' << mean(r.violation) << '\t' << sd(r.violation) << '\n';
  }
}

void WriteTimings(const std::vector<PhaseTiming>& timings, std::ostream& out) {
  out << "subsample\tsweep\tparam_id\tphase\tmilliseconds\n";
  for (const PhaseTiming& t : timings) {
    out << t.subsample << '\t' << t.sweep << '\t' << t.param_id << '\t' << t.phase << '\t'
        << FormatDouble(t.milliseconds) << '\n';
  }
}

nlohmann::json ToJson(const DatasetSpec& spec) {
  nlohmann::json j;
  j["id"] = spec.id;
  j["source"] = spec.source;
  j["path"] = spec.path;
  j["theta"] = spec.theta ? nlohmann::json(*spec.theta) : nlohmann::json(nullptr);
  j["color_columns"] = spec.color_columns;
  j["coord_columns"] = spec.coord_columns;
  j["color_file"] = spec.color_file;
  j["alphas"] = spec.alphas;
  j["synthetic"] = {{"n", spec.synthetic.n},
                    {"clusters", spec.synthetic.clusters},
                    {"colors", spec.synthetic.colors},
                    {"noise", spec.synthetic.noise},
                    {"seed", spec.synthetic.seed}};
  return j;
}

nlohmann::json ToJson(const ExperimentConfig& c) {
  nlohmann::json j;
  j["sample_size"] = c.sample_size;
  j["subsamples"] = c.subsamples;
  j["stratify"] = c.stratify;
  j["seed"] = c.seed;
  j["epsilons"] = ParamStrings(c.epsilons);
  j["alpha_min_targets"] = ParamStrings(c.alpha_min_targets);
  j["alpha_sweep_epsilon"] = c.alpha_sweep_epsilon.ToString();
  j["grid"] = {{"rhos", c.grid.rhos},
               {"sigma_fractions", c.grid.sigma_fractions},
               {"shuffles", c.grid.shuffles}};
  j["solver"] = {{"max_rounds", c.solver.max_rounds},
                 {"separation_budget", c.solver.separation_budget},
                 {"feasibility_tol", c.solver.feasibility_tol},
                 {"separation_tol", c.solver.separation_tol},
                 {"certify_tol", c.solver.certify_tol},
                 {"optimality_tol", c.solver.optimality_tol},
                 {"max_iterations", c.solver.max_iterations},
                 {"max_columns", c.solver.max_columns}};
  return j;
}

DatasetSpec DatasetSpecFromJson(const nlohmann::json& j) {
  DatasetSpec spec;
  spec.id = j.value("id", spec.id);
  spec.source = j.value("source", spec.source);
  spec.path = j.value("path", spec.path);
  if (j.contains("theta") && !j["theta"].is_null()) spec.theta = j["theta"].get<double>();
  spec.color_columns = j.value("color_columns", spec.color_columns);
  spec.coord_columns = j.value("coord_columns", spec.coord_columns);
  spec.color_file = j.value("color_file", spec.color_file);
  spec.alphas = j.value("alphas", spec.alphas);
  if (j.contains("synthetic")) {
    const auto& s = j["synthetic"];
    spec.synthetic.n = s.value("n", spec.synthetic.n);
    spec.synthetic.clusters = s.value("clusters", spec.synthetic.clusters);
    spec.synthetic.colors = s.value("colors", spec.synthetic.colors);
    spec.synthetic.noise = s.value("noise", spec.synthetic.noise);
    spec.synthetic.seed = s.value("seed", spec.synthetic.seed);
  }
  return spec;
}

ExperimentConfig ExperimentConfigFromJson(const nlohmann::json& j) {
  ExperimentConfig c;
  c.sample_size = j.value("sample_size", c.sample_size);
  c.subsamples = j.value("subsamples", c.subsamples);
  c.stratify = j.value("stratify", c.stratify);
  c.seed = j.value("seed", c.seed);
  if (j.contains("epsilons")) c.epsilons = ParamsFrom(j["epsilons"]);
  if (j.contains("alpha_min_targets")) c.alpha_min_targets = ParamsFrom(j["alpha_min_targets"]);
  if (j.contains("alpha_sweep_epsilon")) {
    c.alpha_sweep_epsilon = Param::Parse(j["alpha_sweep_epsilon"].get<std::string>());
  }
  if (j.contains("grid")) {
    const auto& g = j["grid"];
    c.grid.rhos = g.value("rhos", c.grid.rhos);
    c.grid.sigma_fractions = g.value("sigma_fractions", c.grid.sigma_fractions);
    c.grid.shuffles = g.value("shuffles", c.grid.shuffles);
  }
  if (j.contains("solver")) {
    const auto& s = j["solver"];
    c.solver.max_rounds = s.value("max_rounds", c.solver.max_rounds);
    c.solver.separation_budget = s.value("separation_budget", c.solver.separation_budget);
    c.solver.feasibility_tol = s.value("feasibility_tol", c.solver.feasibility_tol);
    c.solver.separation_tol = s.value("separation_tol", c.solver.separation_tol);
    c.solver.certify_tol = s.value("certify_tol", c.solver.certify_tol);
    c.solver.optimality_tol = s.value("optimality_tol", c.solver.optimality_tol);
    c.solver.max_iterations = s.value("max_iterations", c.solver.max_iterations);
    c.solver.max_columns = s.value("max_columns", c.solver.max_columns);
  }
  return c;
}

nlohmann::json MakeManifest(const DatasetSpec& spec, const ExperimentConfig& config) {
  nlohmann::json j;
  j["format_version"] = 1;
  j["dataset"] = ToJson(spec);
  j["experiment"] = ToJson(config);
  j["outputs"] = {"results.tsv", "summary.tsv", "plot_epsilon.tsv", "plot_alpha_min.tsv",
                  "timings.tsv"};
  return j;
}

void EmitReports(const ExperimentOutput& output, const nlohmann::json& manifest,
                 const std::filesystem::path& dir) {
  if (output.rows.empty()) throw DomainError("no result rows to report");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw DomainError("cannot create " + dir.string() + ": " + ec.message());
  auto emit = [&](const char* name, auto&& writer) {
    std::ostringstream text;
    writer(text);
    WriteFile(dir / name, text.str());
  };
  emit("results.tsv", [&](std::ostream& o) { WriteResults(output.rows, o); });
  emit("summary.tsv", [&](std::ostream& o) { WriteSummary(output.aggregates, o); });
  emit("plot_epsilon.tsv", [&](std::ostream& o) { WritePlotData(output.aggregates, "epsilon", o); });
  emit("plot_alpha_min.tsv",
       [&](std::ostream& o) { WritePlotData(output.aggregates, "alpha_min", o); });
  emit("timings.tsv", [&](std::ostream& o) { WriteTimings(output.timings, o); });
  emit("manifest.json", [&](std::ostream& o) { o << manifest.dump(2) << '\n'; });
}

}  // namespace fcc::bench
