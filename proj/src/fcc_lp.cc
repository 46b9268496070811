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

#include "fcc/fcc_lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace fcc {

FractionalMetric::FractionalMetric(std::size_t n, double fill)
    : n_(n), dense_(n * n, fill) {
  for (std::size_t u = 0; u < n; ++u) dense_[u * n + u] = 0.0;
}

FractionalMetric FractionalMetric::FromPairValues(std::size_t n,
                                                  std::span<const double> values) {
  if (values.size() != PairCount(n)) throw DomainError("pair value count mismatch");
  FractionalMetric x(n);
  std::size_t idx = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) x.Set(u, v, values[idx++]);
  }
  return x;
}

void FractionalMetric::Set(VertexId u, VertexId v, double value) {
  if (u == v) throw DomainError("diagonal of a metric is fixed at 0");
  dense_[u * n_ + v] = value;
  dense_[v * n_ + u] = value;
}

std::vector<double> FractionalMetric::PairValues() const {
  std::vector<double> out;
  out.reserve(PairCount(n_));
  for (VertexId u = 0; u < n_; ++u) {
    for (VertexId v = u + 1; v < n_; ++v) out.push_back(at(u, v));
  }
  return out;
}

FractionalMetric ClusterIndicatorMetric(const Clustering& clustering) {
  const std::size_t n = clustering.num_vertices();
  FractionalMetric x(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) x.Set(u, v, clustering.SameCluster(u, v) ? 0.0 : 1.0);
  }
  return x;
}

double LinearRow::Activity(std::span<const double> x) const {
  double sum = 0.0;
  for (std::size_t k = 0; k < columns.size(); ++k) sum += coefficients[k] * x[columns[k]];
  return sum;
}

double LinearRow::Violation(std::span<const double> x) const {
  const double activity = Activity(x);
  return sense == RowSense::kLessEqual ? activity - rhs : rhs - activity;
}

double TriangleExcess(const FractionalMetric& x, const TriangleCut& cut) {
  return x.at(cut.a, cut.b) - x.at(cut.a, cut.apex) - x.at(cut.apex, cut.b);
}

LpProblem BuildLp(const SignedGraph& g, const ColorModel& colors) {
  const std::size_t n = g.num_vertices();
  if (colors.num_vertices() != n) {
    throw DomainError("graph and color model cover different vertex sets");
  }
  LpProblem p;
  p.n_ = n;
  p.num_colors_ = colors.num_colors();
  p.objective_.resize(PairCount(n));
  for (std::size_t idx = 0; idx < p.objective_.size(); ++idx) {
    p.objective_[idx] = g.IsPositiveAt(idx) ? 1.0 : -1.0;
  }
  p.objective_constant_ = static_cast<double>(g.num_negative());

  for (std::size_t i = 0; i < colors.num_colors(); ++i) {
    const Param& alpha = colors.alpha(i);
    const double class_size = static_cast<double>(colors.class_size(i));
    for (VertexId u = 0; u < n; ++u) {
      LinearRow row;
      row.name = "fair_" + std::to_string(i) + "_" + std::to_string(u);
      row.sense = RowSense::kLessEqual;
      for (VertexId v = 0; v < n; ++v) {
        if (v == u) continue;
        const double coef = alpha.value - (colors.Contains(i, v) ? 1.0 : 0.0);
        if (coef == 0.0) continue;
        row.columns.push_back(p.Column(u, v));
        row.coefficients.push_back(coef);
      }
      // Columns ascend with v for fixed u only piecewise; keep them sorted.
      std::vector<std::size_t> order(row.columns.size());
      for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
      std::sort(order.begin(), order.end(),
                [&](std::size_t l, std::size_t r) { return row.columns[l] < row.columns[r]; });
      LinearRow sorted = row;
      for (std::size_t k = 0; k < order.size(); ++k) {
        sorted.columns[k] = row.columns[order[k]];
        sorted.coefficients[k] = row.coefficients[order[k]];
      }
      sorted.rhs = alpha.value * static_cast<double>(n) - class_size;
      if (alpha.exact) {
        const Rational& a = *alpha.exact;
        sorted.exact_rhs = Rational(
            a.num() * static_cast<std::int64_t>(n) -
                static_cast<std::int64_t>(colors.class_size(i)) * a.den(),
            a.den());
        sorted.rhs = sorted.exact_rhs->ToDouble();
      }
      p.fairness_rows_.push_back(std::move(sorted));
      p.fairness_keys_.push_back({i, u});
    }
  }
  return p;
}

std::string LpProblem::ColumnName(std::size_t column) const {
  // Invert PairIndex by walking rows; only used for export and diagnostics.
  std::size_t u = 0;
  std::size_t remaining = column;
  while (remaining >= n_ - u - 1) {
    remaining -= n_ - u - 1;
    ++u;
  }
  const std::size_t v = u + 1 + remaining;
  return "x_" + std::to_string(u) + "_" + std::to_string(v);
}

std::size_t LpProblem::ActivateTriangles(std::span<const TriangleCut> cuts) {
  std::size_t added = 0;
  for (const TriangleCut& cut : cuts) {
    if (cut.a >= cut.b || cut.b >= n_ || cut.apex >= n_ || cut.apex == cut.a ||
        cut.apex == cut.b) {
      throw DomainError("malformed triangle cut");
    }
    const std::uint64_t key =
        static_cast<std::uint64_t>(PairIndex(n_, cut.a, cut.b)) * n_ + cut.apex;
    if (pool_index_.insert(key).second) {
      triangle_pool_.push_back(cut);
      ++added;
    }
  }
  return added;
}

double LpProblem::Evaluate(const FractionalMetric& x) const {
  double value = objective_constant_;
  std::size_t idx = 0;
  for (VertexId u = 0; u < n_; ++u) {
    for (VertexId v = u + 1; v < n_; ++v, ++idx) value += objective_[idx] * x.at(u, v);
  }
  return value;
}

double LpProblem::MaxFairnessResidual(const FractionalMetric& x) const {
  const std::vector<double> values = x.PairValues();
  double worst = 0.0;
  for (const LinearRow& row : fairness_rows_) worst = std::max(worst, row.Violation(values));
  return worst;
}

double LpCostShare(const FractionalMetric& x, const SignedGraph& g,
                   std::span<const VertexPair> pairs) {
  if (x.num_vertices() != g.num_vertices()) {
    throw DomainError("metric and graph cover different vertex sets");
  }
  double share = 0.0;
  for (const VertexPair& p : pairs) {
    const double d = x.at(p.u, p.v);
    share += g.IsPositive(p.u, p.v) ? d : 1.0 - d;
  }
  return share;
}

std::vector<TriangleCut> AllTriangleCuts(std::size_t n) {
  std::vector<TriangleCut> cuts;
  if (n < 3) return cuts;
  cuts.reserve(n * (n - 1) * (n - 2) / 2);
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      for (VertexId apex = 0; apex < n; ++apex) {
        if (apex != a && apex != b) cuts.push_back({a, b, apex});
      }
    }
  }
  return cuts;
}

namespace {

std::string FormatNumber(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string TriangleRowName(const TriangleCut& c) {
  return "tri_" + std::to_string(c.a) + "_" + std::to_string(c.b) + "_" +
         std::to_string(c.apex);
}

}  // namespace

void ExportMps(const LpProblem& problem, std::ostream& out) {
  const std::size_t n = problem.num_vertices();
  const std::size_t columns = problem.num_columns();
  const auto triangles = AllTriangleCuts(n);

  // Column-wise entries: (row name, coefficient), in row order.
  std::vector<std::vector<std::pair<std::string, double>>> entries(columns);
  for (std::size_t c = 0; c < columns; ++c) entries[c].emplace_back("obj", problem.objective()[c]);
  for (const LinearRow& row : problem.fairness_rows()) {
    for (std::size_t k = 0; k < row.columns.size(); ++k) {
      entries[row.columns[k]].emplace_back(row.name, row.coefficients[k]);
    }
  }
  for (const TriangleCut& t : triangles) {
    const std::string name = TriangleRowName(t);
    entries[problem.Column(t.a, t.b)].emplace_back(name, -1.0);
    entries[problem.Column(t.a, t.apex)].emplace_back(name, 1.0);
    entries[problem.Column(t.apex, t.b)].emplace_back(name, 1.0);
  }

  out << "* Fair correlation clustering relaxation, n = " << n << "\n";
  out << "* Objective offset " << FormatNumber(problem.objective_constant())
      << " is stored as RHS of obj with flipped sign.\n";
  out << "NAME FCC_LP\n";
  out << "OBJSENSE\n    MIN\n";
  out << "ROWS\n";
  out << " N  obj\n";
  for (const LinearRow& row : problem.fairness_rows()) {
    out << (row.sense == RowSense::kLessEqual ? " L  " : " G  ") << row.name << "\n";
  }
  for (const TriangleCut& t : triangles) out << " G  " << TriangleRowName(t) << "\n";
  out << "COLUMNS\n";
  for (std::size_t c = 0; c < columns; ++c) {
    const std::string name = problem.ColumnName(c);
    for (const auto& [row, coef] : entries[c]) {
      out << "    " << name << "  " << row << "  " << FormatNumber(coef) << "\n";
    }
  }
  out << "RHS\n";
  if (problem.objective_constant() != 0.0) {
    out << "    RHS  obj  " << FormatNumber(-problem.objective_constant()) << "\n";
  }
  for (const LinearRow& row : problem.fairness_rows()) {
    if (row.rhs != 0.0) out << "    RHS  " << row.name << "  " << FormatNumber(row.rhs) << "\n";
  }
  out << "BOUNDS\n";
  for (std::size_t c = 0; c < columns; ++c) {
    out << " UP BND  " << problem.ColumnName(c) << "  1\n";
  }
  out << "ENDATA\n";
}

void ExportMps(const LpProblem& problem, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  ExportMps(problem, file);
  file.flush();
  if (!file) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace fcc
