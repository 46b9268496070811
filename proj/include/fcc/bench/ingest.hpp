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

#ifndef FCC_BENCH_INGEST_HPP_
#define FCC_BENCH_INGEST_HPP_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fcc/fairness.hpp"
#include "fcc/rational.hpp"
#include "fcc/signed_graph.hpp"

namespace fcc::bench {

struct EdgeListGraph {
  SignedGraph graph;
  // names[v] is the token that introduced vertex v.
  std::vector<std::string> names;
  std::vector<std::string> warnings;
};

// One "u v" pair per line, separated by whitespace, commas or tabs. Blank
// lines and lines starting with '#' or '%' are skipped. Vertex ids are opaque
// tokens numbered in order of first appearance. Listed pairs are positive,
// every other pair negative. Repeated pairs produce a warning.
EdgeListGraph ReadEdgeList(std::istream& in);
EdgeListGraph ReadEdgeList(const std::string& path);

using Matrix = std::vector<std::vector<double>>;

// Numeric rows separated by commas, tabs, semicolons or spaces.
Matrix ReadMatrix(std::istream& in);
Matrix ReadMatrix(const std::string& path);

// The floor(theta * n(n-1)/2) pairs of highest cosine similarity are
// positive. Ties at the cutoff go to the lexicographically smaller pair.
SignedGraph CosineThresholdGraph(const Matrix& rows, double theta);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Header plus rows; the delimiter is a comma when the header has one,
// otherwise a tab. Cells are trimmed.
Table ReadTable(std::istream& in);
Table ReadTable(const std::string& path);

std::size_t ColumnIndex(const Table& table, std::string_view name);

struct ColorClasses {
  std::vector<std::vector<VertexId>> classes;
  std::vector<std::string> names;
};

// One class per (column, category), named "column=category"; categories of a
// column appear in sorted order.
ColorClasses ClassesFromColumns(const Table& table, std::span<const std::string> columns);

// Per-row label joining the given columns' values with '|'.
std::vector<std::string> CombinationLabels(const Table& table,
                                           std::span<const std::string> columns);

Matrix NumericColumns(const Table& table, std::span<const std::string> columns);

// Lines "vertex color [color ...]" naming vertices as in `vertex_names`.
// Classes are ordered by color name.
ColorClasses ReadColorFile(std::istream& in, std::span<const std::string> vertex_names);
ColorClasses ReadColorFile(const std::string& path, std::span<const std::string> vertex_names);

// Per-vertex label joining the names of the classes containing it.
std::vector<std::string> MembershipLabels(const ColorClasses& classes, std::size_t n);

// "uniform:<v>", "prop:<p1>,<p2>,..." (alpha_i = p_i / sum p) or a plain
// comma-separated list. The count must match num_classes.
std::vector<Param> ParseAlphas(std::string_view spec, std::size_t num_classes);

}  // namespace fcc::bench

#endif  // FCC_BENCH_INGEST_HPP_
