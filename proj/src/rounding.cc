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

#include "fcc/rounding.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>
#include <tuple>

#include "fcc/simd/kernels.hpp"

namespace fcc {

void RoundingParams::Validate() const {
  if (!(epsilon.value >= 0.0)) throw DomainError("epsilon must be non-negative");
  if (!(rho > 0.0) || rho > 0.5) throw DomainError("rho must lie in (0, 0.5]");
  if (!(sigma > 0.0) || 2.0 * sigma > rho * (1.0 + 1e-12)) {
    throw DomainError("sigma must lie in (0, rho / 2]");
  }
}

VertexBitset Ball(const FractionalMetric& x, VertexId u, const VertexBitset& uncovered,
                  double rho) {
  const std::size_t n = x.num_vertices();
  if (u >= n || uncovered.size() != n) throw DomainError("ball center outside metric");
  VertexBitset ball(n);
  simd::Kernels().ball_scan(x.Row(u).data(), uncovered.data(), n, rho + kMetricSlack,
                            ball.data());
  return ball;
}

RoundingOutcome Round(const FractionalMetric& x, const SignedGraph& g,
                      const ColorModel& colors, const RoundingParams& params) {
  params.Validate();
  const std::size_t n = x.num_vertices();
  if (g.num_vertices() != n || colors.num_vertices() != n) {
    throw DomainError("metric, graph and colors cover different vertex sets");
  }
  std::vector<VertexId> order = params.order;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), VertexId{0});
  } else {
    std::vector<VertexId> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      if (sorted.size() != n || sorted[k] != k) {
        throw DomainError("scan order is not a permutation of the vertices");
      }
    }
  }

  const auto& kern = simd::Kernels();
  const double radius = params.rho + kMetricSlack;
  VertexBitset uncovered = VertexBitset::Full(n);
  VertexBitset ball(n);
  std::vector<std::vector<VertexId>> carved;
  std::vector<VertexId> carved_centers;
  std::vector<VertexId> degenerate;

  while (!uncovered.None()) {
    bool found = false;
    for (VertexId u : order) {
      if (!uncovered.Test(u)) continue;
      const simd::BallStats stats =
          kern.ball_scan(x.Row(u).data(), uncovered.data(), n, radius, ball.data());
      const double density = stats.distance_sum / static_cast<double>(stats.count);
      if (density > params.sigma + kMetricSlack) continue;
      if (!IsEpsFair(ball, colors, params.epsilon)) continue;
      carved.push_back(ball.Members());
      carved_centers.push_back(u);
      uncovered.Subtract(ball);
      found = true;
      break;
    }
    if (!found) {
      degenerate = uncovered.Members();
      break;
    }
  }

  std::vector<std::vector<VertexId>> all = carved;
  for (VertexId v : degenerate) all.push_back({v});
  RoundingOutcome outcome;
  outcome.clustering = Clustering::FromClusters(n, all, degenerate);
  outcome.centers.assign(outcome.clustering.num_clusters(), kNoCenter);
  for (VertexId c : carved_centers) outcome.centers[outcome.clustering.ClusterOf(c)] = c;
  outcome.cost = CorrelationCost(g, outcome.clustering);
  outcome.violation = MaxFairnessViolation(outcome.clustering, colors);
  outcome.params = params;
  outcome.params.order = std::move(order);
  return outcome;
}

SweepGrid SweepGrid::Default(std::uint64_t seed) {
  SweepGrid grid;
  grid.rhos = {0.1, 0.2, 0.3, 0.4, 0.5};
  for (int k = 1; k <= 10; ++k) grid.sigma_fractions.push_back(k / 10.0);
  grid.shuffles = 20;
  grid.seed = seed;
  return grid;
}

std::vector<VertexId> ShuffledOrder(std::size_t n, std::uint64_t seed, std::size_t shuffle) {
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::mt19937_64 rng(seed + shuffle);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

namespace {

auto SweepKey(const RoundingOutcome& o) {
  return std::make_tuple(o.cost, o.violation.value_or(0.0), o.params.rho, o.params.sigma,
                         o.params.seed);
}

}  // namespace

RoundingOutcome Sweep(const FractionalMetric& x, const SignedGraph& g,
                      const ColorModel& colors, const Param& eps, const SweepGrid& grid) {
  if (grid.size() == 0) throw DomainError("empty parameter grid");
  const std::size_t n = x.num_vertices();
  std::vector<std::vector<VertexId>> orders;
  for (std::size_t s = 0; s < grid.shuffles; ++s) {
    orders.push_back(ShuffledOrder(n, grid.seed, s));
  }
  const std::size_t per_rho = grid.sigma_fractions.size() * grid.shuffles;
  auto params_at = [&](std::size_t index) {
    RoundingParams p;
    p.epsilon = eps;
    p.rho = grid.rhos[index / per_rho];
    const std::size_t rest = index % per_rho;
    p.sigma = grid.sigma_fractions[rest / grid.shuffles] * p.rho / 2.0;
    const std::size_t shuffle = rest % grid.shuffles;
    p.order = orders[shuffle];
    p.seed = grid.seed + shuffle;
    return p;
  };
  // Validate up front so errors surface on the calling thread.
  for (std::size_t i = 0; i < grid.size(); i += grid.shuffles) params_at(i).Validate();

  std::vector<std::optional<RoundingOutcome>> results(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < results.size(); i = next++) {
      results[i] = Round(x, g, colors, params_at(i));
    }
  };
  std::size_t threads = grid.threads != 0 ? grid.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, grid.size());
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (SweepKey(*results[i]) < SweepKey(*results[best])) best = i;
  }
  return std::move(*results[best]);
}

double ApproximationBound(double alpha_star, double eps) {
  if (!(eps > 0.0)) return std::numeric_limits<double>::infinity();
  const double additive = 4.0 + 1.0 / eps;
  if (alpha_star <= 0.0) return additive;
  return std::max(1.0 / (eps * alpha_star), additive);
}

std::size_t CountLongEdgeChargeFailures(const RoundingOutcome& outcome,
                                        const FractionalMetric& x, const SignedGraph& g) {
  const double rho = outcome.params.rho;
  std::size_t failures = 0;
  for (VertexId u = 0; u < x.num_vertices(); ++u) {
    for (VertexId v = u + 1; v < x.num_vertices(); ++v) {
      if (!g.IsPositive(u, v) || outcome.clustering.SameCluster(u, v)) continue;
      if (x.at(u, v) <= rho) continue;
      const VertexPair pair{u, v};
      if (LpCostShare(x, g, {&pair, 1}) / rho < 1.0) ++failures;
    }
  }
  return failures;
}

bool OutcomeIsEpsFair(const RoundingOutcome& outcome, const ColorModel& colors) {
  const Clustering& c = outcome.clustering;
  for (std::uint32_t k = 0; k < c.num_clusters(); ++k) {
    if (c.IsDegenerateCluster(k)) continue;
    if (!IsEpsFair(c.Members(k), colors, outcome.params.epsilon)) return false;
  }
  return true;
}

}  // namespace fcc
