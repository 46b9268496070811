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

#include "fcc/lp_engine.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <queue>
#include <sstream>
#include <string_view>

#include "fcc/simd/kernels.hpp"

namespace fcc {

std::size_t SolverConfig::EffectiveBudget(std::size_t n) const {
  if (separation_budget > 0) return separation_budget;
  return std::max<std::size_t>(1, std::min<std::size_t>(5000, 10 * n));
}

const char* ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kIterationLimit:
      return "iteration-limit";
  }
  return "unknown";
}

namespace {

// Orders violations so that the heap top is the weakest kept entry.
struct WeakerFirst {
  bool operator()(const TriangleViolation& l, const TriangleViolation& r) const {
    if (l.violation != r.violation) return l.violation > r.violation;
    return l.cut < r.cut;
  }
};

// Dual of  min c'x  s.t.  A x >= b,  0 <= x <= 1  in equality form:
//   min -b'y + 1'z   s.t.  A'y - z + s = c,   y, z, s >= 0.
// Dual row j belongs to primal column j; x_j = -pi_j at the optimum.
class DualModel {
 public:
  DualModel(const LpProblem& problem, const SolverConfig& config)
      : problem_(problem), simplex_(problem.objective(), MakeOptions(config)) {
    const std::size_t columns = problem.num_columns();
    std::vector<std::size_t> basis(columns);
    for (std::size_t j = 0; j < columns; ++j) {
      const std::uint32_t row = static_cast<std::uint32_t>(j);
      const double plus = 1.0;
      const double minus = -1.0;
      const std::size_t slack = simplex_.AddColumn({&row, 1}, {&plus, 1}, 0.0);
      const std::size_t upper = simplex_.AddColumn({&row, 1}, {&minus, 1}, 1.0);
      // x_j = 0 for positive pairs, 1 for negative pairs is the box optimum.
      basis[j] = problem.objective()[j] >= 0.0 ? slack : upper;
    }
    for (const LinearRow& row : problem.fairness_rows()) {
      // Rows are stored as <=; negate into >= form.
      const double sign = row.sense == RowSense::kLessEqual ? -1.0 : 1.0;
      std::vector<std::uint32_t> rows(row.columns.begin(), row.columns.end());
      std::vector<double> values(row.coefficients.size());
      for (std::size_t k = 0; k < values.size(); ++k) values[k] = sign * row.coefficients[k];
      simplex_.AddColumn(rows, values, -sign * row.rhs);
    }
    simplex_.SetBasis(basis);
  }

  void AddTriangle(const TriangleCut& cut) {
    std::uint32_t rows[3] = {
        static_cast<std::uint32_t>(problem_.Column(cut.a, cut.b)),
        static_cast<std::uint32_t>(problem_.Column(cut.a, cut.apex)),
        static_cast<std::uint32_t>(problem_.Column(cut.apex, cut.b)),
    };
    const double values[3] = {-1.0, 1.0, 1.0};
    simplex_.AddColumn(rows, values, 0.0);
  }

  SimplexStatus Solve() { return simplex_.Solve(); }

  FractionalMetric Primal() const {
    const auto& pi = simplex_.duals();
    std::vector<double> values(pi.size());
    for (std::size_t j = 0; j < pi.size(); ++j) values[j] = std::clamp(-pi[j], 0.0, 1.0);
    return FractionalMetric::FromPairValues(problem_.num_vertices(), values);
  }

  double RestrictedObjective() const {
    return problem_.objective_constant() - simplex_.objective();
  }

  std::size_t iterations() const { return simplex_.iterations(); }

 private:
  static SimplexOptions MakeOptions(const SolverConfig& config) {
    SimplexOptions options;
    options.optimality_tol = config.optimality_tol;
    options.max_iterations = config.max_iterations;
    return options;
  }

  const LpProblem& problem_;
  RevisedSimplex simplex_;
};

}  // namespace

std::vector<TriangleViolation> SeparateTriangles(const FractionalMetric& x,
                                                 std::size_t budget, double tol) {
  const std::size_t n = x.num_vertices();
  std::vector<TriangleViolation> kept;
  if (n < 3 || budget == 0) return kept;
  std::priority_queue<TriangleViolation, std::vector<TriangleViolation>, WeakerFirst> heap;
  std::vector<std::uint32_t> apexes(n);
  const auto& kern = simd::Kernels();
  for (VertexId a = 0; a < n; ++a) {
    const double* row_a = x.Row(a).data();
    for (VertexId b = a + 1; b < n; ++b) {
      const double ab = x.at(a, b);
      if (ab <= tol) continue;
      const std::size_t found =
          kern.triangle_violations(row_a, x.Row(b).data(), ab, tol, n, apexes.data());
      for (std::size_t k = 0; k < found; ++k) {
        const VertexId apex = apexes[k];
        if (apex == a || apex == b) continue;
        TriangleViolation tv{{a, b, apex}, ab - x.at(a, apex) - x.at(apex, b)};
        if (heap.size() < budget) {
          heap.push(tv);
        } else if (WeakerFirst{}(tv, heap.top())) {
          heap.pop();
          heap.push(tv);
        }
      }
    }
  }
  kept.reserve(heap.size());
  while (!heap.empty()) {
    kept.push_back(heap.top());
    heap.pop();
  }
  std::reverse(kept.begin(), kept.end());
  return kept;
}

double VerifyMetric(const FractionalMetric& x) {
  const std::size_t n = x.num_vertices();
  const auto& kern = simd::Kernels();
  double worst = 0.0;
  for (VertexId a = 0; a < n; ++a) {
    const double* row_a = x.Row(a).data();
    for (VertexId b = a + 1; b < n; ++b) {
      worst = std::max(worst, kern.max_triangle_excess(row_a, x.Row(b).data(), x.at(a, b), n));
    }
  }
  return worst;
}

SolveReport Solve(const LpProblem& problem, const SolverConfig& config) {
  const std::size_t n = problem.num_vertices();
  SolveReport report;
  if (problem.num_columns() > config.max_columns) {
    throw DomainError("instance has " + std::to_string(problem.num_columns()) +
                      " pair variables; the dense solver accepts at most " +
                      std::to_string(config.max_columns));
  }
  if (problem.num_columns() == 0) {
    report.x = FractionalMetric(n);
    report.objective = problem.objective_constant();
    report.fairness_residual = problem.MaxFairnessResidual(report.x);
    report.status = report.fairness_residual <= config.feasibility_tol
                        ? SolveStatus::kOptimal
                        : SolveStatus::kInfeasible;
    report.round_objectives.push_back(report.objective);
    return report;
  }

  DualModel model(problem, config);
  std::unordered_set<std::uint64_t> active;
  auto key = [&](const TriangleCut& c) {
    return static_cast<std::uint64_t>(problem.Column(c.a, c.b)) * n + c.apex;
  };
  for (const TriangleCut& cut : problem.triangle_pool()) {
    if (active.insert(key(cut)).second) {
      model.AddTriangle(cut);
      report.active_triangles.push_back(cut);
    }
  }

  const std::size_t budget = config.EffectiveBudget(n);
  for (;;) {
    const SimplexStatus status = model.Solve();
    report.simplex_iterations = model.iterations();
    if (status == SimplexStatus::kUnbounded) {
      report.status = SolveStatus::kInfeasible;
      return report;
    }
    if (status == SimplexStatus::kIterationLimit) {
      report.status = SolveStatus::kIterationLimit;
      report.x = model.Primal();
      report.objective = problem.Evaluate(report.x);
      return report;
    }
    report.x = model.Primal();
    report.round_objectives.push_back(model.RestrictedObjective());

    const auto violations = SeparateTriangles(report.x, budget, config.separation_tol);
    if (violations.empty()) break;
    if (report.rounds >= config.max_rounds) {
      report.status = SolveStatus::kIterationLimit;
      break;
    }
    ++report.rounds;
    std::size_t added = 0;
    for (const TriangleViolation& tv : violations) {
      if (active.insert(key(tv.cut)).second) {
        model.AddTriangle(tv.cut);
        report.active_triangles.push_back(tv.cut);
        ++added;
      }
    }
    report.rows_added += added;
    if (added == 0) {
      // An active row is still violated beyond tolerance: the restricted
      // solve did not converge numerically.
      report.status = SolveStatus::kIterationLimit;
      break;
    }
  }

  report.objective = problem.Evaluate(report.x);
  report.certify = VerifyMetric(report.x);
  report.fairness_residual = problem.MaxFairnessResidual(report.x);
  if (report.status == SolveStatus::kOptimal &&
      (report.certify > config.certify_tol ||
       report.fairness_residual > config.feasibility_tol)) {
    report.status = SolveStatus::kIterationLimit;
  }
  return report;
}

namespace {

std::string_view TrimView(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool ParseColumnName(std::string_view name, std::size_t& u, std::size_t& v) {
  if (name.size() < 5 || name.substr(0, 2) != "x_") return false;
  name.remove_prefix(2);
  const auto sep = name.find('_');
  if (sep == std::string_view::npos) return false;
  auto r1 = std::from_chars(name.data(), name.data() + sep, u);
  auto r2 = std::from_chars(name.data() + sep + 1, name.data() + name.size(), v);
  return r1.ec == std::errc() && r1.ptr == name.data() + sep && r2.ec == std::errc() &&
         r2.ptr == name.data() + name.size();
}

}  // namespace

FractionalMetric ReadSolutionFile(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open solution file '" + path + "'");
  FractionalMetric x(n);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = TrimView(line);
    if (view.empty() || view.front() == '#') continue;
    std::istringstream fields{std::string(view)};
    std::string name;
    double value = 0.0;
    std::string extra;
    if (!(fields >> name >> value) || (fields >> extra)) {
      throw DomainError(path + ":" + std::to_string(line_no) + ": expected 'x_u_v value'");
    }
    std::size_t u = 0;
    std::size_t v = 0;
    if (!ParseColumnName(name, u, v) || u >= v || v >= n) {
      throw DomainError(path + ":" + std::to_string(line_no) + ": unknown column '" + name + "'");
    }
    x.Set(static_cast<VertexId>(u), static_cast<VertexId>(v), value);
  }
  return x;
}

void WriteSolutionFile(const FractionalMetric& x, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  char buf[64];
  for (VertexId u = 0; u < x.num_vertices(); ++u) {
    for (VertexId v = u + 1; v < x.num_vertices(); ++v) {
      std::snprintf(buf, sizeof(buf), "x_%u_%u %.17g\n", u, v, x.at(u, v));
      out << buf;
    }
  }
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

SolveReport ReportFromSolution(const LpProblem& problem, FractionalMetric x,
                               const SolverConfig& config) {
  if (x.num_vertices() != problem.num_vertices()) {
    throw DomainError("solution covers a different vertex count");
  }
  for (VertexId u = 0; u < x.num_vertices(); ++u) {
    for (VertexId v = u + 1; v < x.num_vertices(); ++v) {
      const double d = x.at(u, v);
      if (d < -config.feasibility_tol || d > 1.0 + config.feasibility_tol) {
        throw DomainError("imported solution has a value outside [0, 1]");
      }
      x.Set(u, v, std::clamp(d, 0.0, 1.0));
    }
  }
  SolveReport report;
  report.certify = VerifyMetric(x);
  report.fairness_residual = problem.MaxFairnessResidual(x);
  if (report.certify > config.certify_tol) {
    throw DomainError("imported solution violates a triangle inequality by " +
                      std::to_string(report.certify));
  }
  if (report.fairness_residual > config.feasibility_tol) {
    throw DomainError("imported solution violates a fairness row by " +
                      std::to_string(report.fairness_residual));
  }
  report.objective = problem.Evaluate(x);
  report.round_objectives.push_back(report.objective);
  report.x = std::move(x);
  return report;
}

}  // namespace fcc
