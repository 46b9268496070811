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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace fcc::bench {
namespace {

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  return in;
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> SplitAny(std::string_view line, std::string_view delimiters) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const auto start = line.find_first_not_of(delimiters, pos);
    if (start == std::string_view::npos) break;
    auto end = line.find_first_of(delimiters, start);
    if (end == std::string_view::npos) end = line.size();
    out.emplace_back(line.substr(start, end - start));
    pos = end;
  }
  return out;
}

std::vector<std::string> SplitExact(std::string_view line, char delimiter) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    const auto end = line.find(delimiter, pos);
    out.emplace_back(Trim(line.substr(pos, end == std::string_view::npos ? end : end - pos)));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

bool SkipLine(std::string_view line) {
  const auto t = Trim(line);
  return t.empty() || t.front() == '#' || t.front() == '%';
}

double ParseNumber(const std::string& cell, std::size_t line_no) {
  double value = 0.0;
  const char* end = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(cell.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw DomainError("line " + std::to_string(line_no) + ": non-numeric cell '" + cell + "'");
  }
  return value;
}

}  // namespace

EdgeListGraph ReadEdgeList(std::istream& in) {
  EdgeListGraph out;
  std::unordered_map<std::string, VertexId> ids;
  auto id_of = [&](const std::string& name) {
    auto [it, inserted] = ids.try_emplace(name, static_cast<VertexId>(out.names.size()));
    if (inserted) out.names.push_back(name);
    return it->second;
  };
  std::vector<VertexPair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (SkipLine(line)) continue;
    const auto tokens = SplitAny(line, " \t,");
    if (tokens.size() != 2) {
      throw DomainError("line " + std::to_string(line_no) + ": expected two vertex ids");
    }
    if (tokens[0] == tokens[1]) {
      throw DomainError("line " + std::to_string(line_no) + ": self-loop on " + tokens[0]);
    }
    const VertexId u = id_of(tokens[0]);
    const VertexId v = id_of(tokens[1]);
    pairs.push_back(VertexPair::Of(u, v));
  }
  if (out.names.empty()) throw DomainError("empty graph");
  std::vector<VertexPair> sorted = pairs;
  std::sort(sorted.begin(), sorted.end());
  const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    const std::size_t unique =
        static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    out.warnings.push_back(std::to_string(pairs.size() - unique) + " repeated pair(s) ignored");
  }
  out.graph = SignedGraph(out.names.size(), pairs);
  return out;
}

EdgeListGraph ReadEdgeList(const std::string& path) {
  auto in = OpenOrThrow(path);
  return ReadEdgeList(in);
}

Matrix ReadMatrix(std::istream& in) {
  Matrix rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (SkipLine(line)) continue;
    std::vector<double> row;
    for (const auto& cell : SplitAny(line, " \t,;")) row.push_back(ParseNumber(cell, line_no));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw DomainError("line " + std::to_string(line_no) + ": row width differs");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DomainError("empty matrix");
  return rows;
}

Matrix ReadMatrix(const std::string& path) {
  auto in = OpenOrThrow(path);
  return ReadMatrix(in);
}

SignedGraph CosineThresholdGraph(const Matrix& rows, double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw DomainError("theta must lie in [0, 1]");
  const std::size_t n = rows.size();
  if (n == 0) throw DomainError("empty matrix");
  std::vector<double> norms(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (rows[v].size() != rows[0].size()) throw DomainError("ragged matrix");
    norms[v] = std::sqrt(std::inner_product(rows[v].begin(), rows[v].end(), rows[v].begin(), 0.0));
    if (norms[v] == 0.0) throw DomainError("zero-norm row " + std::to_string(v));
  }
  const std::size_t pairs = PairCount(n);
  std::vector<double> sim(pairs);
  std::vector<VertexPair> pair_of(pairs);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const std::size_t idx = PairIndex(n, u, v);
      sim[idx] = std::inner_product(rows[u].begin(), rows[u].end(), rows[v].begin(), 0.0) /
                 (norms[u] * norms[v]);
      pair_of[idx] = {u, v};
    }
  }
  const auto keep = static_cast<std::size_t>(std::floor(theta * static_cast<double>(pairs) + 1e-9));
  std::vector<std::size_t> order(pairs);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Pair index order is lexicographic, so it doubles as the tie-break.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sim[a] > sim[b]; });
  std::vector<VertexPair> positive;
  positive.reserve(keep);
  for (std::size_t k = 0; k < keep; ++k) positive.push_back(pair_of[order[k]]);
  return SignedGraph(n, positive);
}

Table ReadTable(std::istream& in) {
  Table table;
  std::string line;
  std::size_t line_no = 0;
  char delimiter = '\t';
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    if (table.header.empty()) {
      if (line.find(',') != std::string::npos) delimiter = ',';
      table.header = SplitExact(line, delimiter);
      continue;
    }
    auto cells = SplitExact(line, delimiter);
    if (cells.size() != table.header.size()) {
      throw DomainError("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(table.header.size()) + " cells");
    }
    table.rows.push_back(std::move(cells));
  }
  if (table.header.empty()) throw DomainError("missing header");
  return table;
}

Table ReadTable(const std::string& path) {
  auto in = OpenOrThrow(path);
  return ReadTable(in);
}

std::size_t ColumnIndex(const Table& table, std::string_view name) {
  const auto it = std::find(table.header.begin(), table.header.end(), name);
  if (it == table.header.end()) throw DomainError("missing column " + std::string(name));
  return static_cast<std::size_t>(it - table.header.begin());
}

ColorClasses ClassesFromColumns(const Table& table, std::span<const std::string> columns) {
  if (columns.empty()) throw DomainError("no color columns");
  ColorClasses out;
  for (const std::string& column : columns) {
    const std::size_t c = ColumnIndex(table, column);
    std::map<std::string, std::vector<VertexId>> by_value;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      const std::string& value = table.rows[r][c];
      if (value.empty()) {
        throw DomainError("empty category in column " + column + " row " + std::to_string(r));
      }
      by_value[value].push_back(static_cast<VertexId>(r));
    }
    for (auto& [value, members] : by_value) {
      out.names.push_back(column + "=" + value);
      out.classes.push_back(std::move(members));
    }
  }
  return out;
}

std::vector<std::string> CombinationLabels(const Table& table,
                                           std::span<const std::string> columns) {
  std::vector<std::size_t> idx;
  for (const std::string& column : columns) idx.push_back(ColumnIndex(table, column));
  std::vector<std::string> labels;
  labels.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    std::string label;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k > 0) label += '|';
      label += row[idx[k]];
    }
    labels.push_back(std::move(label));
  }
  return labels;
}

Matrix NumericColumns(const Table& table, std::span<const std::string> columns) {
  std::vector<std::size_t> idx;
  for (const std::string& column : columns) idx.push_back(ColumnIndex(table, column));
  Matrix out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    std::vector<double> row;
    for (std::size_t c : idx) row.push_back(ParseNumber(table.rows[r][c], r + 2));
    out.push_back(std::move(row));
  }
  return out;
}

ColorClasses ReadColorFile(std::istream& in, std::span<const std::string> vertex_names) {
  std::unordered_map<std::string, VertexId> ids;
  for (std::size_t v = 0; v < vertex_names.size(); ++v) {
    ids.emplace(vertex_names[v], static_cast<VertexId>(v));
  }
  std::map<std::string, std::set<VertexId>> by_color;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (SkipLine(line)) continue;
    const auto tokens = SplitAny(line, " \t,");
    if (tokens.size() < 2) {
      throw DomainError("line " + std::to_string(line_no) + ": expected vertex and color");
    }
    const auto it = ids.find(tokens[0]);
    if (it == ids.end()) {
      throw DomainError("line " + std::to_string(line_no) + ": unknown vertex " + tokens[0]);
    }
    for (std::size_t k = 1; k < tokens.size(); ++k) by_color[tokens[k]].insert(it->second);
  }
  if (by_color.empty()) throw DomainError("color file lists no colors");
  ColorClasses out;
  for (auto& [name, members] : by_color) {
    out.names.push_back(name);
    out.classes.emplace_back(members.begin(), members.end());
  }
  return out;
}

ColorClasses ReadColorFile(const std::string& path, std::span<const std::string> vertex_names) {
  auto in = OpenOrThrow(path);
  return ReadColorFile(in, vertex_names);
}

std::vector<std::string> MembershipLabels(const ColorClasses& classes, std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < classes.classes.size(); ++i) {
    for (VertexId v : classes.classes[i]) {
      if (v >= n) throw DomainError("class member out of range");
      if (!labels[v].empty()) labels[v] += '|';
      labels[v] += classes.names[i];
    }
  }
  return labels;
}

std::vector<Param> ParseAlphas(std::string_view spec, std::size_t num_classes) {
  auto parse_list = [](std::string_view text) {
    std::vector<Param> out;
    for (const auto& token : SplitAny(text, ", ")) out.push_back(Param::Parse(token));
    return out;
  };
  std::vector<Param> alphas;
  if (spec.starts_with("uniform:")) {
    alphas.assign(num_classes, Param::Parse(Trim(spec.substr(8))));
  } else if (spec.starts_with("prop:")) {
    const auto weights = parse_list(spec.substr(5));
    for (const Param& w : weights) {
      if (!(w.value > 0.0)) throw DomainError("proportional weights must be positive");
    }
    alphas = ProportionalAlphas(weights);
  } else {
    alphas = parse_list(spec);
  }
  if (alphas.size() != num_classes) {
    throw DomainError("expected " + std::to_string(num_classes) + " alphas, got " +
                      std::to_string(alphas.size()));
  }
  return alphas;
}

}  // namespace fcc::bench
