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

#ifndef FCC_LP_ENGINE_HPP_
#define FCC_LP_ENGINE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "fcc/fcc_lp.hpp"
#include "fcc/simplex.hpp"

namespace fcc {

struct SolverConfig {
  std::size_t max_rounds = 10'000;
  // Rows activated per separation round; 0 selects min(5000, 10 n).
  std::size_t separation_budget = 0;
  double feasibility_tol = 1e-7;
  double separation_tol = 1e-7;
  double certify_tol = 1e-6;
  double optimality_tol = 1e-9;
  std::size_t max_iterations = 20'000'000;
  // Instances with more pair columns are rejected up front.
  std::size_t max_columns = 8'000;

  std::size_t EffectiveBudget(std::size_t n) const;
};

enum class SolveStatus { kOptimal, kInfeasible, kIterationLimit };

const char* ToString(SolveStatus status);

struct SolveReport {
  SolveStatus status = SolveStatus::kOptimal;
  double objective = 0.0;
  FractionalMetric x;
  std::size_t rounds = 0;
  std::size_t rows_added = 0;
  // Max triangle excess of x over every orientation, floored at 0.
  double certify = 0.0;
  double fairness_residual = 0.0;
  std::size_t simplex_iterations = 0;
  // Restricted-LP optimum after each round, in round order.
  std::vector<double> round_objectives;
  // Triangle rows active at the end, in activation order.
  std::vector<TriangleCut> active_triangles;
};

// Solves the relaxation with every triangle inequality enforced by lazy
// separation. Rows already in problem.triangle_pool() are active from the
// start. Internally the simplex runs on the dual, so activated rows become new
// dual columns and the previous basis stays feasible across rounds.
//
// Throws DomainError if the instance exceeds config.max_columns.
SolveReport Solve(const LpProblem& problem, const SolverConfig& config = {});

struct TriangleViolation {
  TriangleCut cut;
  double violation = 0.0;
};

// Up to `budget` orientations whose excess exceeds `tol`, most violated
// first; ties by (a, b, apex) ascending. Empty iff no orientation exceeds tol.
std::vector<TriangleViolation> SeparateTriangles(const FractionalMetric& x,
                                                 std::size_t budget, double tol = 1e-7);

// Exhaustive max over all orientations of x_ab - x_a,apex - x_apex,b,
// floored at 0.
double VerifyMetric(const FractionalMetric& x);

// Reads "x_u_v value" lines (blank lines and '#' comments ignored). Pairs not
// listed are 0. Throws DomainError on malformed lines or unknown columns.
FractionalMetric ReadSolutionFile(const std::string& path, std::size_t n);

// Writes x in the same format, one line per pair in column order.
void WriteSolutionFile(const FractionalMetric& x, const std::string& path);

// Certifies an externally computed x against the problem. The status is
// optimal only when x is feasible within the config tolerances; otherwise
// DomainError. Optimality itself is not checked.
SolveReport ReportFromSolution(const LpProblem& problem, FractionalMetric x,
                               const SolverConfig& config = {});

}  // namespace fcc

#endif  // FCC_LP_ENGINE_HPP_
