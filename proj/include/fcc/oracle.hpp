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

#ifndef FCC_ORACLE_HPP_
#define FCC_ORACLE_HPP_

#include <cstdint>
#include <optional>

#include "fcc/fairness.hpp"
#include "fcc/signed_graph.hpp"

namespace fcc {

enum class OracleMode { kUnfair, kFairStrict };

const char* ToString(OracleMode mode);

inline constexpr std::size_t kOracleMaxVertices = 12;

struct OracleResult {
  OracleMode mode = OracleMode::kUnfair;
  // False when no partition satisfies the fairness constraint.
  bool feasible = false;
  std::optional<std::uint64_t> optimum;
  Clustering witness;
  std::uint64_t partitions_examined = 0;
  std::uint64_t feasible_count = 0;
};

// Exhaustive minimum over all set partitions, in restricted-growth order; the
// first minimum found is the witness. In fair-strict mode only partitions in
// which every cluster meets |V_i ∩ C| <= alpha_i |C| are kept.
//
// Throws DomainError when n > kOracleMaxVertices, or in fair-strict mode
// without a color model. An infeasible fair instance is reported through
// `feasible`.
OracleResult BruteForceOptimum(const SignedGraph& g, const ColorModel* colors,
                               OracleMode mode);

// Number of set partitions of n elements, counted by the same enumerator.
std::uint64_t CountSetPartitions(std::size_t n);

// Random pivot: picks a uniform unclustered vertex, clusters it with its
// unclustered positive neighbours, repeats.
Clustering Pivot(const SignedGraph& g, std::uint64_t seed);

}  // namespace fcc

#endif  // FCC_ORACLE_HPP_
