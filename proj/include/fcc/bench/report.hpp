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

#ifndef FCC_BENCH_REPORT_HPP_
#define FCC_BENCH_REPORT_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "fcc/bench/experiment.hpp"
#include "json.hpp"

namespace fcc::bench {

// Shortest decimal that round-trips the double.
std::string FormatDouble(double value);

// Tab-separated, one header line, columns in a fixed order. Missing values
// are written as NA.
void WriteResults(const std::vector<ResultRow>& rows, std::ostream& out);
void WriteSummary(const std::vector<AggregateRow>& rows, std::ostream& out);
// x column is epsilon for the "epsilon" sweep and alpha_min for "alpha_min".
void WritePlotData(const std::vector<AggregateRow>& rows, const std::string& sweep,
                   std::ostream& out);
void WriteTimings(const std::vector<PhaseTiming>& timings, std::ostream& out);

nlohmann::json ToJson(const DatasetSpec& spec);
nlohmann::json ToJson(const ExperimentConfig& config);
DatasetSpec DatasetSpecFromJson(const nlohmann::json& j);
ExperimentConfig ExperimentConfigFromJson(const nlohmann::json& j);

nlohmann::json MakeManifest(const DatasetSpec& spec, const ExperimentConfig& config);

// Writes results.tsv, summary.tsv, plot_epsilon.tsv, plot_alpha_min.tsv,
// manifest.json and timings.tsv into `dir`. Only timings.tsv depends on
// wall-clock time. Throws DomainError on an empty result set or I/O failure.
void EmitReports(const ExperimentOutput& output, const nlohmann::json& manifest,
                 const std::filesystem::path& dir);

}  // namespace fcc::bench

#endif  // FCC_BENCH_REPORT_HPP_
