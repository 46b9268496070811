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

#ifndef FCC_SIMPLEX_HPP_
#define FCC_SIMPLEX_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <vector>

namespace fcc {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct SimplexOptions {
  double primal_tol = 1e-9;
  double optimality_tol = 1e-9;
  double pivot_tol = 1e-7;
  std::size_t max_iterations = 20'000'000;
  // Residual check cadence; the inverse is rebuilt when the check fails or
  // after refactor_limit pivots, whichever comes first.
  std::size_t residual_check_interval = 25;
  std::size_t refactor_limit = 50;
  // Bland's rule takes over after this many times (rows + columns)
  // consecutive degenerate pivots and stays until a pivot makes progress.
  std::size_t degenerate_factor = 10;
};

enum class SimplexStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

const char* ToString(SimplexStatus status);

// Bounded-variable revised primal simplex for
//   min c'x  s.t.  A x = b,  l <= x <= u,  l finite.
// The basis is held as a sparse LU factorization followed by a file of
// product-form eta updates, one per pivot. The factorization is rebuilt every
// refactor_limit pivots or when the basic solution drifts. Pricing is Devex.
//
// Columns may be appended between Solve() calls. A new column starts
// nonbasic at its lower bound, so a previously feasible basis stays feasible
// when that bound is zero and Solve() continues from it.
class RevisedSimplex {
 public:
  explicit RevisedSimplex(std::vector<double> rhs, SimplexOptions options = {});
  ~RevisedSimplex();
  RevisedSimplex(RevisedSimplex&&) noexcept;
  RevisedSimplex& operator=(RevisedSimplex&&) noexcept;

  std::size_t num_rows() const { return rhs_.size(); }
  std::size_t num_columns() const { return cost_.size(); }

  // Throws std::invalid_argument on an infinite lower bound, lower > upper,
  // or a row index out of range.
  std::size_t AddColumn(std::span<const std::uint32_t> rows, std::span<const double> values,
                        double cost, double lower = 0.0, double upper = kInfinity);

  // basic[r] is the column placed in basis position r; all other columns sit
  // at their lower bounds. Throws std::invalid_argument if the basis is
  // singular. Without a call to SetBasis, Solve() runs a phase 1 on
  // artificial columns first.
  void SetBasis(std::span<const std::size_t> basic);

  SimplexStatus Solve();

  double objective() const;
  double value(std::size_t column) const;
  std::vector<double> Values() const;
  // Simplex multipliers c_B' B^-1 for the final basis.
  const std::vector<double>& duals() const { return duals_; }

  std::size_t iterations() const { return iterations_; }
  std::size_t bland_activations() const { return bland_activations_; }
  std::size_t refactorizations() const { return refactorizations_; }

 private:
  enum class State : std::uint8_t { kBasic, kAtLower, kAtUpper };
  struct Factor;
  struct Eta {
    std::size_t position;
    double pivot;
    std::vector<std::uint32_t> index;
    std::vector<double> value;
  };

  std::span<const std::uint32_t> ColumnRows(std::size_t j) const {
    return {row_index_.data() + col_start_[j], col_start_[j + 1] - col_start_[j]};
  }
  std::span<const double> ColumnValues(std::size_t j) const {
    return {values_.data() + col_start_[j], col_start_[j + 1] - col_start_[j]};
  }
  double NonbasicValue(std::size_t j) const {
    return state_[j] == State::kAtUpper ? upper_[j] : lower_[j];
  }

  void Refactor();
  void RecomputeBasicValues();
  double BasicResidual() const;
  void ComputeDuals(std::span<const double> costs);
  // out = B^-1 a_column
  void Ftran(std::size_t column, std::vector<double>& out) const;
  // vec <- B^-1 vec
  void FtranInPlace(std::vector<double>& vec) const;
  // vec <- B^-T vec
  void BtranInPlace(std::vector<double>& vec) const;
  void PushEta(std::size_t leaving_pos, std::span<const double> alpha);
  void InstallArtificialBasis();
  SimplexStatus RunPhase(std::span<const double> costs);

  SimplexOptions options_;
  std::vector<double> rhs_;

  std::vector<std::size_t> col_start_{0};
  std::vector<std::uint32_t> row_index_;
  std::vector<double> values_;
  std::vector<double> cost_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<State> state_;
  std::vector<bool> artificial_;

  bool has_basis_ = false;
  std::vector<std::size_t> basis_;         // position -> column
  std::vector<double> basic_values_;       // by position
  std::unique_ptr<Factor> factor_;
  std::vector<Eta> etas_;
  std::vector<double> duals_;

  std::size_t iterations_ = 0;
  std::size_t pivots_since_refactor_ = 0;
  std::size_t bland_activations_ = 0;
  std::size_t refactorizations_ = 0;
};

}  // namespace fcc

#endif  // FCC_SIMPLEX_HPP_
