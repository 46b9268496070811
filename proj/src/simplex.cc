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

#include "fcc/simplex.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fcc/simd/kernels.hpp"

namespace fcc {
namespace {

constexpr std::size_t kNotBasic = static_cast<std::size_t>(-1);
constexpr double kDegenerateStep = 1e-12;
constexpr double kEtaDrop = 1e-14;

}  // namespace

const char* ToString(SimplexStatus status) {
  switch (status) {
    case SimplexStatus::kOptimal:
      return "optimal";
    case SimplexStatus::kInfeasible:
      return "infeasible";
    case SimplexStatus::kUnbounded:
      return "unbounded";
    case SimplexStatus::kIterationLimit:
      return "iteration-limit";
  }
  return "unknown";
}

struct RevisedSimplex::Factor {
  Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
};

RevisedSimplex::RevisedSimplex(std::vector<double> rhs, SimplexOptions options)
    : options_(options), rhs_(std::move(rhs)) {}

RevisedSimplex::~RevisedSimplex() = default;
RevisedSimplex::RevisedSimplex(RevisedSimplex&&) noexcept = default;
RevisedSimplex& RevisedSimplex::operator=(RevisedSimplex&&) noexcept = default;

std::size_t RevisedSimplex::AddColumn(std::span<const std::uint32_t> rows,
                                      std::span<const double> values, double cost,
                                      double lower, double upper) {
  if (rows.size() != values.size()) throw std::invalid_argument("column size mismatch");
  if (!std::isfinite(lower)) throw std::invalid_argument("lower bound must be finite");
  if (lower > upper) throw std::invalid_argument("lower bound exceeds upper bound");
  for (std::uint32_t r : rows) {
    if (r >= num_rows()) throw std::invalid_argument("row index out of range");
  }
  row_index_.insert(row_index_.end(), rows.begin(), rows.end());
  values_.insert(values_.end(), values.begin(), values.end());
  col_start_.push_back(row_index_.size());
  cost_.push_back(cost);
  lower_.push_back(lower);
  upper_.push_back(upper);
  state_.push_back(State::kAtLower);
  artificial_.push_back(false);
  if (has_basis_ && lower != 0.0) {
    // A nonzero starting value shifts the basic solution.
    RecomputeBasicValues();
  }
  return cost_.size() - 1;
}

void RevisedSimplex::SetBasis(std::span<const std::size_t> basic) {
  if (basic.size() != num_rows()) throw std::invalid_argument("basis size != row count");
  for (std::size_t j = 0; j < num_columns(); ++j) {
    if (state_[j] == State::kBasic) state_[j] = State::kAtLower;
  }
  for (std::size_t j : basic) {
    if (j >= num_columns()) throw std::invalid_argument("basis column out of range");
    if (state_[j] == State::kBasic) throw std::invalid_argument("column repeated in basis");
    state_[j] = State::kBasic;
  }
  basis_.assign(basic.begin(), basic.end());
  has_basis_ = true;
  Refactor();
  RecomputeBasicValues();
}

void RevisedSimplex::Refactor() {
  const std::size_t m = num_rows();
  ++refactorizations_;
  pivots_since_refactor_ = 0;
  etas_.clear();
  factor_.reset();
  if (m == 0) return;
  std::vector<Eigen::Triplet<double>> entries;
  for (std::size_t pos = 0; pos < m; ++pos) {
    const auto rows = ColumnRows(basis_[pos]);
    const auto vals = ColumnValues(basis_[pos]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      entries.emplace_back(static_cast<int>(rows[k]), static_cast<int>(pos), vals[k]);
    }
  }
  Eigen::SparseMatrix<double> basis(static_cast<int>(m), static_cast<int>(m));
  basis.setFromTriplets(entries.begin(), entries.end());
  basis.makeCompressed();
  auto factor = std::make_unique<Factor>();
  factor->lu.analyzePattern(basis);
  factor->lu.factorize(basis);
  if (factor->lu.info() != Eigen::Success) throw std::invalid_argument("singular basis");
  factor_ = std::move(factor);
}

void RevisedSimplex::RecomputeBasicValues() {
  const std::size_t m = num_rows();
  std::vector<double> residual = rhs_;
  for (std::size_t j = 0; j < num_columns(); ++j) {
    if (state_[j] == State::kBasic) continue;
    const double xj = NonbasicValue(j);
    if (xj == 0.0) continue;
    const auto rows = ColumnRows(j);
    const auto vals = ColumnValues(j);
    for (std::size_t k = 0; k < rows.size(); ++k) residual[rows[k]] -= vals[k] * xj;
  }
  FtranInPlace(residual);
  basic_values_ = std::move(residual);
  basic_values_.resize(m);
}

double RevisedSimplex::BasicResidual() const {
  std::vector<double> residual = rhs_;
  for (std::size_t j = 0; j < num_columns(); ++j) {
    const double xj = state_[j] == State::kBasic ? 0.0 : NonbasicValue(j);
    if (xj == 0.0) continue;
    const auto rows = ColumnRows(j);
    const auto vals = ColumnValues(j);
    for (std::size_t k = 0; k < rows.size(); ++k) residual[rows[k]] -= vals[k] * xj;
  }
  for (std::size_t pos = 0; pos < basis_.size(); ++pos) {
    const auto rows = ColumnRows(basis_[pos]);
    const auto vals = ColumnValues(basis_[pos]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      residual[rows[k]] -= vals[k] * basic_values_[pos];
    }
  }
  double worst = 0.0;
  for (double r : residual) worst = std::max(worst, std::abs(r));
  return worst;
}

void RevisedSimplex::ComputeDuals(std::span<const double> costs) {
  const std::size_t m = num_rows();
  duals_.resize(m);
  for (std::size_t pos = 0; pos < m; ++pos) duals_[pos] = costs[basis_[pos]];
  BtranInPlace(duals_);
}

void RevisedSimplex::FtranInPlace(std::vector<double>& vec) const {
  const std::size_t m = num_rows();
  if (m == 0) return;
  Eigen::Map<Eigen::VectorXd> v(vec.data(), static_cast<Eigen::Index>(m));
  Eigen::VectorXd solved = factor_->lu.solve(v);
  v = solved;
  for (const Eta& eta : etas_) {
    const double pivot_value = vec[eta.position] / eta.pivot;
    vec[eta.position] = pivot_value;
    if (pivot_value == 0.0) continue;
    for (std::size_t k = 0; k < eta.index.size(); ++k) {
      vec[eta.index[k]] -= eta.value[k] * pivot_value;
    }
  }
}

void RevisedSimplex::BtranInPlace(std::vector<double>& vec) const {
  const std::size_t m = num_rows();
  if (m == 0) return;
  for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
    double sum = vec[it->position];
    for (std::size_t k = 0; k < it->index.size(); ++k) sum -= it->value[k] * vec[it->index[k]];
    vec[it->position] = sum / it->pivot;
  }
  Eigen::Map<Eigen::VectorXd> v(vec.data(), static_cast<Eigen::Index>(m));
  Eigen::VectorXd solved = factor_->lu.transpose().solve(v);
  v = solved;
}

void RevisedSimplex::Ftran(std::size_t column, std::vector<double>& out) const {
  out.assign(num_rows(), 0.0);
  const auto rows = ColumnRows(column);
  const auto vals = ColumnValues(column);
  for (std::size_t k = 0; k < rows.size(); ++k) out[rows[k]] += vals[k];
  FtranInPlace(out);
}

void RevisedSimplex::PushEta(std::size_t leaving_pos, std::span<const double> alpha) {
  Eta eta;
  eta.position = leaving_pos;
  eta.pivot = alpha[leaving_pos];
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i == leaving_pos || std::abs(alpha[i]) <= kEtaDrop) continue;
    eta.index.push_back(static_cast<std::uint32_t>(i));
    eta.value.push_back(alpha[i]);
  }
  etas_.push_back(std::move(eta));
}

void RevisedSimplex::InstallArtificialBasis() {
  const std::size_t m = num_rows();
  std::vector<double> residual = rhs_;
  for (std::size_t j = 0; j < num_columns(); ++j) {
    state_[j] = State::kAtLower;
    const double xj = lower_[j];
    if (xj == 0.0) continue;
    const auto rows = ColumnRows(j);
    const auto vals = ColumnValues(j);
    for (std::size_t k = 0; k < rows.size(); ++k) residual[rows[k]] -= vals[k] * xj;
  }
  std::vector<std::size_t> basic;
  for (std::size_t r = 0; r < m; ++r) {
    const std::uint32_t row = static_cast<std::uint32_t>(r);
    const double sign = residual[r] < 0.0 ? -1.0 : 1.0;
    const std::size_t j = AddColumn({&row, 1}, {&sign, 1}, 0.0);
    artificial_[j] = true;
    basic.push_back(j);
  }
  SetBasis(basic);
}

SimplexStatus RevisedSimplex::Solve() {
  if (!has_basis_) {
    InstallArtificialBasis();
    std::vector<double> phase1(num_columns(), 0.0);
    for (std::size_t j = 0; j < num_columns(); ++j) phase1[j] = artificial_[j] ? 1.0 : 0.0;
    const SimplexStatus status = RunPhase(phase1);
    if (status == SimplexStatus::kIterationLimit) return status;
    double infeasibility = 0.0;
    for (std::size_t j = 0; j < num_columns(); ++j) {
      if (artificial_[j]) infeasibility += value(j);
    }
    double scale = 1.0;
    for (double b : rhs_) scale = std::max(scale, std::abs(b));
    if (infeasibility > 1e-7 * scale) return SimplexStatus::kInfeasible;
    for (std::size_t j = 0; j < num_columns(); ++j) {
      if (artificial_[j]) upper_[j] = 0.0;
    }
  }
  return RunPhase(cost_);
}

SimplexStatus RevisedSimplex::RunPhase(std::span<const double> costs) {
  const std::size_t m = num_rows();
  const double tol = options_.primal_tol;
  std::vector<std::size_t> position(num_columns(), kNotBasic);
  for (std::size_t pos = 0; pos < m; ++pos) position[basis_[pos]] = pos;

  std::vector<double> alpha;
  std::vector<double> pivot_row(m);
  // Devex reference weights.
  std::vector<double> weights(num_columns(), 1.0);
  std::size_t degenerate_run = 0;
  bool bland = false;
  bool duals_fresh = false;

  ComputeDuals(costs);
  duals_fresh = true;

  for (;;) {
    if (iterations_ >= options_.max_iterations) {
      ComputeDuals(costs);
      return SimplexStatus::kIterationLimit;
    }
    if (pivots_since_refactor_ > 0 && !duals_fresh &&
        (pivots_since_refactor_ >= options_.refactor_limit ||
         pivots_since_refactor_ % options_.residual_check_interval == 0)) {
      double scale = 1.0;
      for (double b : rhs_) scale = std::max(scale, std::abs(b));
      if (pivots_since_refactor_ >= options_.refactor_limit ||
          BasicResidual() > 1e-9 * scale) {
        Refactor();
        RecomputeBasicValues();
      }
      ComputeDuals(costs);
      duals_fresh = true;
    }

    // Pricing.
    std::size_t entering = kNotBasic;
    double best_score = 0.0;
    double entering_reduced = 0.0;
    for (std::size_t j = 0; j < num_columns(); ++j) {
      if (state_[j] == State::kBasic || lower_[j] == upper_[j]) continue;
      double d = costs[j];
      const auto rows = ColumnRows(j);
      const auto vals = ColumnValues(j);
      for (std::size_t k = 0; k < rows.size(); ++k) d -= duals_[rows[k]] * vals[k];
      const bool eligible = (state_[j] == State::kAtLower && d < -options_.optimality_tol) ||
                            (state_[j] == State::kAtUpper && d > options_.optimality_tol);
      if (!eligible) continue;
      if (bland) {
        entering = j;
        entering_reduced = d;
        break;
      }
      const double score = d * d / weights[j];
      if (score > best_score) {
        best_score = score;
        entering = j;
        entering_reduced = d;
      }
    }
    if (entering == kNotBasic) {
      if (duals_fresh) return SimplexStatus::kOptimal;
      ComputeDuals(costs);
      duals_fresh = true;
      continue;
    }

    Ftran(entering, alpha);
    const double dir = entering_reduced < 0.0 ? 1.0 : -1.0;

    // Ratio test. delta_i is the change of basic i per unit step.
    std::size_t leaving = kNotBasic;
    double step = kInfinity;
    if (bland) {
      for (std::size_t i = 0; i < m; ++i) {
        const double delta = -dir * alpha[i];
        const std::size_t col = basis_[i];
        double ratio;
        if (delta < -options_.pivot_tol && std::isfinite(lower_[col])) {
          ratio = (basic_values_[i] - lower_[col]) / -delta;
        } else if (delta > options_.pivot_tol && std::isfinite(upper_[col])) {
          ratio = (upper_[col] - basic_values_[i]) / delta;
        } else {
          continue;
        }
        ratio = std::max(ratio, 0.0);
        if (ratio < step - 1e-12 ||
            (ratio <= step + 1e-12 && leaving != kNotBasic && col < basis_[leaving])) {
          step = ratio;
          leaving = i;
        }
      }
    } else {
      double bound = kInfinity;
      for (std::size_t i = 0; i < m; ++i) {
        const double delta = -dir * alpha[i];
        const std::size_t col = basis_[i];
        if (delta < -options_.pivot_tol && std::isfinite(lower_[col])) {
          bound = std::min(bound, (basic_values_[i] - lower_[col] + tol) / -delta);
        } else if (delta > options_.pivot_tol && std::isfinite(upper_[col])) {
          bound = std::min(bound, (upper_[col] - basic_values_[i] + tol) / delta);
        }
      }
      if (std::isfinite(bound)) {
        double best_pivot = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          const double delta = -dir * alpha[i];
          const std::size_t col = basis_[i];
          double ratio;
          if (delta < -options_.pivot_tol && std::isfinite(lower_[col])) {
            ratio = (basic_values_[i] - lower_[col]) / -delta;
          } else if (delta > options_.pivot_tol && std::isfinite(upper_[col])) {
            ratio = (upper_[col] - basic_values_[i]) / delta;
          } else {
            continue;
          }
          if (ratio <= bound && std::abs(delta) > best_pivot) {
            best_pivot = std::abs(delta);
            leaving = i;
            step = std::max(ratio, 0.0);
          }
        }
      }
    }

    const double range = upper_[entering] - lower_[entering];
    ++iterations_;
    const bool ray = !std::isfinite(range) && (range <= step || leaving == kNotBasic);
    if (ray && (!duals_fresh || pivots_since_refactor_ > 0)) {
      // Rule out drift before reporting a ray.
      --iterations_;
      Refactor();
      RecomputeBasicValues();
      ComputeDuals(costs);
      duals_fresh = true;
      continue;
    }
    if (range <= step) {
      if (!std::isfinite(range)) return SimplexStatus::kUnbounded;
      // Bound flip: no basis change.
      for (std::size_t i = 0; i < m; ++i) basic_values_[i] -= dir * range * alpha[i];
      state_[entering] = state_[entering] == State::kAtLower ? State::kAtUpper : State::kAtLower;
      degenerate_run = 0;
      bland = false;
      continue;
    }
    if (leaving == kNotBasic) return SimplexStatus::kUnbounded;

    // The same pivot element read off row `leaving` of the basis inverse;
    // disagreement means the factorization has drifted.
    pivot_row.assign(m, 0.0);
    pivot_row[leaving] = 1.0;
    BtranInPlace(pivot_row);
    {
      const auto rows = ColumnRows(entering);
      const auto vals = ColumnValues(entering);
      double check = 0.0;
      for (std::size_t k = 0; k < rows.size(); ++k) check += pivot_row[rows[k]] * vals[k];
      if (std::abs(check - alpha[leaving]) > 1e-9 * (1.0 + std::abs(alpha[leaving])) &&
          pivots_since_refactor_ > 0) {
        --iterations_;
        Refactor();
        RecomputeBasicValues();
        ComputeDuals(costs);
        duals_fresh = true;
        continue;
      }
    }

    const double entering_value = NonbasicValue(entering) + dir * step;
    for (std::size_t i = 0; i < m; ++i) basic_values_[i] -= dir * step * alpha[i];
    const std::size_t leaving_col = basis_[leaving];
    const double leaving_delta = -dir * alpha[leaving];
    state_[leaving_col] = leaving_delta < 0.0 ? State::kAtLower : State::kAtUpper;
    position[leaving_col] = kNotBasic;
    state_[entering] = State::kBasic;
    basis_[leaving] = entering;
    position[entering] = leaving;
    basic_values_[leaving] = entering_value;

    // Row `leaving` of the old basis inverse gives the dual update and the pivot
    // row for the Devex weights.
    const double alpha_r = alpha[leaving];
    const double dual_step = entering_reduced / alpha_r;
    simd::Kernels().axpy(dual_step, pivot_row.data(), duals_.data(), m);
    duals_fresh = false;
    const double entering_weight = weights[entering];
    for (std::size_t j = 0; j < num_columns(); ++j) {
      if (state_[j] == State::kBasic || lower_[j] == upper_[j]) continue;
      const auto rows = ColumnRows(j);
      const auto vals = ColumnValues(j);
      double a = 0.0;
      for (std::size_t k = 0; k < rows.size(); ++k) a += pivot_row[rows[k]] * vals[k];
      if (a == 0.0) continue;
      const double ratio = a / alpha_r;
      weights[j] = std::max(weights[j], ratio * ratio * entering_weight);
    }
    weights[leaving_col] = std::max(entering_weight / (alpha_r * alpha_r), 1.0);

    PushEta(leaving, alpha);
    ++pivots_since_refactor_;

    if (step < kDegenerateStep) {
      ++degenerate_run;
      if (!bland && degenerate_run > options_.degenerate_factor * (m + num_columns())) {
        bland = true;
        ++bland_activations_;
      }
    } else {
      degenerate_run = 0;
      bland = false;
    }
  }
}

double RevisedSimplex::value(std::size_t column) const {
  if (state_[column] != State::kBasic) return NonbasicValue(column);
  for (std::size_t pos = 0; pos < basis_.size(); ++pos) {
    if (basis_[pos] == column) return basic_values_[pos];
  }
  return 0.0;
}

std::vector<double> RevisedSimplex::Values() const {
  std::vector<double> out(num_columns());
  for (std::size_t j = 0; j < num_columns(); ++j) {
    if (state_[j] != State::kBasic) out[j] = NonbasicValue(j);
  }
  for (std::size_t pos = 0; pos < basis_.size(); ++pos) out[basis_[pos]] = basic_values_[pos];
  return out;
}

double RevisedSimplex::objective() const {
  const auto x = Values();
  double sum = 0.0;
  for (std::size_t j = 0; j < num_columns(); ++j) sum += cost_[j] * x[j];
  return sum;
}

}  // namespace fcc
