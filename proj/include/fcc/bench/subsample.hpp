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

#ifndef FCC_BENCH_SUBSAMPLE_HPP_
#define FCC_BENCH_SUBSAMPLE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fcc/common.hpp"

namespace fcc::bench {

// Hamilton apportionment of k seats over strata of the given sizes. Floors
// of k * s_i / S first; leftover seats go to the largest remainders, ties to
// the larger stratum, then the earlier one. Throws DomainError if k > S.
std::vector<std::size_t> LargestRemainder(std::span<const std::size_t> sizes, std::size_t k);

struct Subsample {
  // Sorted ascending.
  std::vector<VertexId> vertices;
  std::vector<std::string> warnings;
};

// Strata are the distinct labels in sorted order; each gets its apportioned
// share, drawn uniformly without replacement from one mt19937_64 stream.
Subsample StratifiedSubsample(std::span<const std::string> labels, std::size_t k,
                              std::uint64_t seed);

Subsample UniformSubsample(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace fcc::bench

#endif  // FCC_BENCH_SUBSAMPLE_HPP_
