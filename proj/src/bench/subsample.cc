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

#include "fcc/bench/subsample.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace fcc::bench {

std::vector<std::size_t> LargestRemainder(std::span<const std::size_t> sizes, std::size_t k) {
  const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  if (k > total) throw DomainError("sample larger than population");
  std::vector<std::size_t> seats(sizes.size(), 0);
  if (total == 0) return seats;
  std::vector<std::size_t> remainder(sizes.size());
  std::size_t given = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const unsigned __int128 quota = static_cast<unsigned __int128>(k) * sizes[i];
    seats[i] = static_cast<std::size_t>(quota / total);
    remainder[i] = static_cast<std::size_t>(quota % total);
    given += seats[i];
  }
  std::vector<std::size_t> order(sizes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (remainder[a] != remainder[b]) return remainder[a] > remainder[b];
    return sizes[a] > sizes[b];
  });
  for (std::size_t j = 0; given < k; ++j) {
    ++seats[order[j]];
    ++given;
  }
  return seats;
}

Subsample StratifiedSubsample(std::span<const std::string> labels, std::size_t k,
                              std::uint64_t seed) {
  if (k > labels.size()) throw DomainError("sample larger than population");
  std::map<std::string, std::vector<VertexId>> strata;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    strata[labels[v]].push_back(static_cast<VertexId>(v));
  }
  Subsample out;
  if (k < strata.size()) {
    out.warnings.push_back("sample size " + std::to_string(k) + " below stratum count " +
                           std::to_string(strata.size()) + "; largest strata served first");
  }
  std::vector<std::size_t> sizes;
  for (const auto& [label, members] : strata) sizes.push_back(members.size());
  const auto seats = LargestRemainder(sizes, k);

  std::mt19937_64 rng(seed);
  std::size_t s = 0;
  for (auto& [label, members] : strata) {
    // Partial Fisher-Yates.
    for (std::size_t i = 0; i < seats[s]; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, members.size() - 1);
      std::swap(members[i], members[pick(rng)]);
      out.vertices.push_back(members[i]);
    }
    ++s;
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

Subsample UniformSubsample(std::size_t n, std::size_t k, std::uint64_t seed) {
  const std::vector<std::string> labels(n);
  return StratifiedSubsample(labels, k, seed);
}

}  // namespace fcc::bench
