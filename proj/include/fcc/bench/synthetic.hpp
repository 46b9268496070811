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

#ifndef FCC_BENCH_SYNTHETIC_HPP_
#define FCC_BENCH_SYNTHETIC_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "fcc/fairness.hpp"
#include "fcc/signed_graph.hpp"

namespace fcc::bench {

struct PlantedConfig {
  std::size_t n = 50;
  std::size_t clusters = 5;
  std::size_t colors = 2;
  // Probability that a pair's sign disagrees with the planted clustering.
  double noise = 0.2;
  std::uint64_t seed = 0;
};

struct PlantedInstance {
  SignedGraph graph;
  // Disjoint classes with alpha_i = 1 / colors.
  ColorModel colors;
  std::vector<std::uint32_t> planted;
  std::vector<std::string> color_labels;
};

// Slot s gets color s % colors and cluster (s / colors) % clusters, so every
// cluster is balanced when n is a multiple of colors * clusters. Slots are
// assigned to vertex ids by a seeded shuffle, then every pair sign is flipped
// independently with probability `noise`.
PlantedInstance PlantedFairClusters(const PlantedConfig& config);

}  // namespace fcc::bench

#endif  // FCC_BENCH_SYNTHETIC_HPP_
