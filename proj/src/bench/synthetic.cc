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

#include "fcc/bench/synthetic.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace fcc::bench {

PlantedInstance PlantedFairClusters(const PlantedConfig& config) {
  const std::size_t n = config.n;
  if (n < 2 || config.clusters == 0 || config.colors == 0) {
    throw DomainError("planted instance needs n >= 2 and positive cluster/color counts");
  }
  if (!(config.noise >= 0.0 && config.noise <= 1.0)) throw DomainError("noise outside [0, 1]");
  std::mt19937_64 rng(config.seed);
  std::vector<std::size_t> slot(n);
  std::iota(slot.begin(), slot.end(), std::size_t{0});
  std::shuffle(slot.begin(), slot.end(), rng);

  PlantedInstance out;
  out.planted.resize(n);
  out.color_labels.resize(n);
  std::vector<std::vector<VertexId>> classes(config.colors);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < config.colors; ++i) names.push_back("c" + std::to_string(i));
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t color = slot[v] % config.colors;
    out.planted[v] = static_cast<std::uint32_t>((slot[v] / config.colors) % config.clusters);
    classes[color].push_back(static_cast<VertexId>(v));
    out.color_labels[v] = names[color];
  }

  std::bernoulli_distribution flip(config.noise);
  std::vector<VertexPair> positive;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const bool same = out.planted[u] == out.planted[v];
      if (same != flip(rng)) positive.push_back({u, v});
    }
  }
  out.graph = SignedGraph(n, positive);

  std::vector<std::vector<VertexId>> nonempty;
  std::vector<std::string> nonempty_names;
  for (std::size_t i = 0; i < config.colors; ++i) {
    if (classes[i].empty()) continue;
    nonempty.push_back(classes[i]);
    nonempty_names.push_back(names[i]);
  }
  const Param alpha =
      Param::FromRational(Rational(1, static_cast<std::int64_t>(config.colors)));
  out.colors = ColorModel(n, nonempty, std::vector<Param>(nonempty.size(), alpha),
                          nonempty_names);
  return out;
}

}  // namespace fcc::bench
