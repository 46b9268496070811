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

#ifndef FCC_ROUNDING_HPP_
#define FCC_ROUNDING_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "fcc/fairness.hpp"
#include "fcc/fcc_lp.hpp"
#include "fcc/rational.hpp"
#include "fcc/signed_graph.hpp"

namespace fcc {

// Slack on ball radius and density comparisons; LP solutions land on values
// such as 0.5 only up to solver precision.
inline constexpr double kMetricSlack = 1e-9;

struct RoundingParams {
  Param epsilon;
  double rho = 0.5;
  double sigma = 0.25;
  // Scan order over vertices. Empty means 0..n-1.
  std::vector<VertexId> order;
  // Seed the order was drawn from; informational.
  std::uint64_t seed = 0;

  // Throws DomainError unless eps >= 0 and 0 < 2 sigma <= rho <= 0.5.
  void Validate() const;
};

inline constexpr VertexId kNoCenter = static_cast<VertexId>(-1);

struct RoundingOutcome {
  Clustering clustering;
  // centers[cluster id]; kNoCenter for degenerate singletons.
  std::vector<VertexId> centers;
  std::uint64_t cost = 0;
  // Max fairness violation over non-degenerate clusters; nullopt if none.
  std::optional<double> violation;
  RoundingParams params;
};

// {v in uncovered : x_uv <= rho}. Contains u whenever u is uncovered.
VertexBitset Ball(const FractionalMetric& x, VertexId u, const VertexBitset& uncovered,
                  double rho);

// Carves dense eps-fair balls from the metric. Scanning the uncovered
// vertices in params.order, the first center whose ball has mean distance
// <= sigma and satisfies |V_i ∩ T| <= (1 + eps) alpha_i |T| for every color
// is removed as a cluster; balls are recomputed against the remaining
// vertices each pass. When no center qualifies, every remaining vertex
// becomes a degenerate singleton.
RoundingOutcome Round(const FractionalMetric& x, const SignedGraph& g,
                      const ColorModel& colors, const RoundingParams& params);

struct SweepGrid {
  std::vector<double> rhos;
  // sigma = fraction * rho / 2
  std::vector<double> sigma_fractions;
  std::size_t shuffles = 20;
  std::uint64_t seed = 0;
  // 0 = hardware concurrency.
  std::size_t threads = 0;

  // rho in {0.1, ..., 0.5}, sigma fractions {0.1, ..., 1.0}, 20 shuffles.
  static SweepGrid Default(std::uint64_t seed = 0);
  std::size_t size() const { return rhos.size() * sigma_fractions.size() * shuffles; }
};

// Scan order for shuffle number `shuffle` under `seed`.
std::vector<VertexId> ShuffledOrder(std::size_t n, std::uint64_t seed, std::size_t shuffle);

// Runs Round over the grid and returns the cheapest outcome. Ties go to the
// smaller violation, then smaller rho, sigma, seed.
RoundingOutcome Sweep(const FractionalMetric& x, const SignedGraph& g,
                      const ColorModel& colors, const Param& eps, const SweepGrid& grid);

// max{1 / (eps alpha*), 4 + 1/eps}; the first term is dropped when alpha* = 0.
// Infinity for eps = 0.
double ApproximationBound(double alpha_star, double eps);

// Every positive pair cut by the outcome with x_uv > rho must carry LP share
// at least rho. Returns the number of pairs that fail (0 when sound).
std::size_t CountLongEdgeChargeFailures(const RoundingOutcome& outcome,
                                        const FractionalMetric& x, const SignedGraph& g);

// True iff every non-degenerate cluster of the outcome is eps-fair.
bool OutcomeIsEpsFair(const RoundingOutcome& outcome, const ColorModel& colors);

}  // namespace fcc

#endif  // FCC_ROUNDING_HPP_
