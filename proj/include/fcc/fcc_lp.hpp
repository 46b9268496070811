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

#ifndef FCC_FCC_LP_HPP_
#define FCC_FCC_LP_HPP_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "fcc/common.hpp"
#include "fcc/fairness.hpp"
#include "fcc/rational.hpp"
#include "fcc/signed_graph.hpp"

namespace fcc {

// Symmetric pairwise distances in [0, 1] with a zero diagonal, stored densely
// (row-major n x n) so that metric rows can be scanned contiguously.
class FractionalMetric {
 public:
  FractionalMetric() = default;
  explicit FractionalMetric(std::size_t n, double fill = 0.0);

  // values[PairIndex(n, u, v)] for u < v.
  static FractionalMetric FromPairValues(std::size_t n, std::span<const double> values);

  std::size_t num_vertices() const { return n_; }
  double at(VertexId u, VertexId v) const { return dense_[u * n_ + v]; }
  void Set(VertexId u, VertexId v, double value);
  std::span<const double> Row(VertexId u) const { return {dense_.data() + u * n_, n_}; }

  std::vector<double> PairValues() const;

  friend bool operator==(const FractionalMetric&, const FractionalMetric&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> dense_;
};

// 0 inside a cluster, 1 across clusters.
FractionalMetric ClusterIndicatorMetric(const Clustering& clustering);

enum class RowSense { kLessEqual, kGreaterEqual };

struct LinearRow {
  std::string name;
  std::vector<std::size_t> columns;
  std::vector<double> coefficients;
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0.0;
  std::optional<Rational> exact_rhs;

  double Activity(std::span<const double> x) const;
  // Positive when the row is violated by `x`.
  double Violation(std::span<const double> x) const;
};

// One orientation of the triangle inequality on the triple {a, b, apex}:
//   x(a, apex) + x(apex, b) >= x(a, b),  a < b, apex not in {a, b}.
struct TriangleCut {
  VertexId a = 0;
  VertexId b = 0;
  VertexId apex = 0;

  friend bool operator==(const TriangleCut&, const TriangleCut&) = default;
  friend auto operator<=>(const TriangleCut&, const TriangleCut&) = default;
};

// x_ab - x_a,apex - x_apex,b; positive means violated.
double TriangleExcess(const FractionalMetric& x, const TriangleCut& cut);

struct FairnessRowKey {
  std::size_t color = 0;
  VertexId vertex = 0;
};

// The relaxation: one column per pair u < v, objective
//   sum_{E+} x_uv + sum_{E-} (1 - x_uv),
// one fairness row per (color, vertex) in the form
//   sum_{v != u} (alpha_i - [v in V_i]) x_uv <= alpha_i n - |V_i|,
// which is sum_{v in V_i} (1 - x_uv) <= alpha_i sum_{v in V} (1 - x_uv) with
// the v = u terms folded into the right-hand side, and a pool of triangle
// rows that starts empty and grows as rows are activated.
class LpProblem {
 public:
  std::size_t num_vertices() const { return n_; }
  std::size_t num_columns() const { return objective_.size(); }
  std::size_t num_colors() const { return num_colors_; }

  // +1 for positive pairs, -1 for negative pairs.
  const std::vector<double>& objective() const { return objective_; }
  // |E-|, the constant part of the objective.
  double objective_constant() const { return objective_constant_; }

  const std::vector<LinearRow>& fairness_rows() const { return fairness_rows_; }
  const std::vector<FairnessRowKey>& fairness_keys() const { return fairness_keys_; }
  const std::vector<TriangleCut>& triangle_pool() const { return triangle_pool_; }

  std::size_t Column(VertexId u, VertexId v) const {
    const VertexPair p = VertexPair::Of(u, v);
    return PairIndex(n_, p.u, p.v);
  }
  std::string ColumnName(std::size_t column) const;

  // Adds cuts not already in the pool; returns how many were new.
  std::size_t ActivateTriangles(std::span<const TriangleCut> cuts);

  double Evaluate(const FractionalMetric& x) const;
  // Largest fairness row violation at x (0 when all hold).
  double MaxFairnessResidual(const FractionalMetric& x) const;

 private:
  friend LpProblem BuildLp(const SignedGraph& g, const ColorModel& colors);

  std::size_t n_ = 0;
  std::size_t num_colors_ = 0;
  std::vector<double> objective_;
  double objective_constant_ = 0.0;
  std::vector<LinearRow> fairness_rows_;
  std::vector<FairnessRowKey> fairness_keys_;
  std::vector<TriangleCut> triangle_pool_;
  std::unordered_set<std::uint64_t> pool_index_;
};

// Throws DomainError when g and colors cover different vertex counts.
LpProblem BuildLp(const SignedGraph& g, const ColorModel& colors);

// sum over positive pairs in `pairs` of x_uv plus sum over negative ones of
// (1 - x_uv).
double LpCostShare(const FractionalMetric& x, const SignedGraph& g,
                   std::span<const VertexPair> pairs);

// Every orientation of every triple in canonical order: (a, b) ascending
// lexicographically, then apex ascending.
std::vector<TriangleCut> AllTriangleCuts(std::size_t n);

// Writes the full relaxation, with every triangle row materialized, in free
// MPS. Output is deterministic: columns in pair order, fairness rows by
// (color, vertex), triangle rows in AllTriangleCuts order.
void ExportMps(const LpProblem& problem, std::ostream& out);
// Throws std::runtime_error on I/O failure.
void ExportMps(const LpProblem& problem, const std::string& path);

}  // namespace fcc

#endif  // FCC_FCC_LP_HPP_
