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

#ifndef FCC_TESTS_TEST_UTIL_HPP_
#define FCC_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "fcc/fairness.hpp"
#include "fcc/fcc_lp.hpp"
#include "fcc/signed_graph.hpp"

namespace fcc::testing {

inline SignedGraph RandomGraph(std::size_t n, std::uint64_t seed, double p = 0.5) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<VertexPair> pos;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) pos.push_back({u, v});
    }
  }
  return SignedGraph(n, pos);
}

// Vertices alternate red/blue.
inline ColorModel RedBlue(std::size_t n, const char* alpha = "0.5") {
  std::vector<std::vector<VertexId>> classes(2);
  for (VertexId v = 0; v < n; ++v) classes[v % 2].push_back(v);
  return ColorModel(n, classes, {Param::Parse(alpha), Param::Parse(alpha)}, {"red", "blue"});
}

inline std::vector<std::uint32_t> RandomLabels(std::size_t n, std::uint64_t seed,
                                               std::uint32_t k) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, k - 1);
  std::vector<std::uint32_t> labels(n);
  for (auto& l : labels) l = pick(rng);
  return labels;
}

// Pair-by-pair recount, independent of the library cost routine.
inline std::uint64_t RecountCost(const SignedGraph& g, const std::vector<std::uint32_t>& labels,
                                 const std::vector<VertexPair>& pairs) {
  std::uint64_t cost = 0;
  for (const auto& [u, v] : pairs) {
    const bool same = labels[u] == labels[v];
    const bool pos = g.IsPositive(u, v);
    if (same != pos) ++cost;
  }
  return cost;
}

inline FractionalMetric RandomMatrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  FractionalMetric x(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) x.Set(u, v, unit(rng));
  }
  return x;
}

// Floyd-Warshall closure; the result satisfies every triangle inequality.
inline FractionalMetric ShortestPathClosure(const FractionalMetric& in) {
  const std::size_t n = in.num_vertices();
  std::vector<double> d(n * n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) d[u * n + v] = in.at(u, v);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
      }
    }
  }
  FractionalMetric x(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) x.Set(u, v, d[u * n + v]);
  }
  return x;
}

}  // namespace fcc::testing

#endif  // FCC_TESTS_TEST_UTIL_HPP_
