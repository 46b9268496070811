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

#ifndef FCC_SIGNED_GRAPH_HPP_
#define FCC_SIGNED_GRAPH_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fcc/common.hpp"

namespace fcc {

// Complete graph on n vertices where every unordered pair is labeled positive
// or negative. Signs live in a packed bit vector indexed by PairIndex.
// Immutable after construction.
class SignedGraph {
 public:
  SignedGraph() = default;

  // All pairs negative except the listed ones. Duplicate pairs are allowed;
  // self-loops and out-of-range ids throw DomainError.
  SignedGraph(std::size_t n, std::span<const VertexPair> positive_pairs);

  static SignedGraph FromPredicate(
      std::size_t n, const std::function<bool(VertexId, VertexId)>& positive);
  static SignedGraph AllPositive(std::size_t n);
  static SignedGraph AllNegative(std::size_t n) { return SignedGraph(n, {}); }

  std::size_t num_vertices() const { return n_; }
  std::size_t num_pairs() const { return PairCount(n_); }
  std::size_t num_positive() const { return positive_count_; }
  std::size_t num_negative() const { return num_pairs() - positive_count_; }

  bool IsPositive(VertexId u, VertexId v) const;
  bool IsPositiveAt(std::size_t pair_index) const {
    return (bits_[pair_index >> 6] >> (pair_index & 63)) & 1U;
  }

  // Every sign flipped.
  SignedGraph Complemented() const;

  // Induced subgraph on the given vertices, renumbered 0..k-1 in list order.
  SignedGraph Induced(std::span<const VertexId> vertices) const;

 private:
  explicit SignedGraph(std::size_t n);
  void SetPositive(std::size_t pair_index);

  std::size_t n_ = 0;
  std::size_t positive_count_ = 0;
  std::vector<std::uint64_t> bits_;
};

// A partition of 0..n-1. Cluster ids are canonical: numbered by the smallest
// member, so relabeling the input does not change the stored value. The
// degenerate singleton set (C1) is tracked separately from clusters that
// happen to have one member.
class Clustering {
 public:
  Clustering() = default;

  // labels[v] is an arbitrary cluster label. Every vertex in `degenerate`
  // must be alone in its cluster, otherwise DomainError.
  static Clustering FromLabels(std::span<const std::uint32_t> labels,
                               std::span<const VertexId> degenerate = {});
  static Clustering FromClusters(std::size_t n,
                                 const std::vector<std::vector<VertexId>>& clusters,
                                 std::span<const VertexId> degenerate = {});
  static Clustering SingleCluster(std::size_t n);
  static Clustering AllSingletons(std::size_t n);

  std::size_t num_vertices() const { return assignment_.size(); }
  std::size_t num_clusters() const { return members_.size(); }
  std::uint32_t ClusterOf(VertexId v) const { return assignment_[v]; }
  bool SameCluster(VertexId u, VertexId v) const { return assignment_[u] == assignment_[v]; }
  const std::vector<std::uint32_t>& assignment() const { return assignment_; }
  const std::vector<VertexId>& Members(std::uint32_t cluster) const { return members_[cluster]; }
  const std::vector<std::vector<VertexId>>& clusters() const { return members_; }

  // Sorted C1 members.
  const std::vector<VertexId>& degenerate() const { return degenerate_; }
  bool IsDegenerateCluster(std::uint32_t cluster) const;

  friend bool operator==(const Clustering&, const Clustering&) = default;

 private:
  std::vector<std::uint32_t> assignment_;
  std::vector<std::vector<VertexId>> members_;
  std::vector<VertexId> degenerate_;
};

// Negative intra-cluster pairs plus positive inter-cluster pairs.
std::uint64_t CorrelationCost(const SignedGraph& g, const Clustering& c);

// Disagreements restricted to `pairs`. Pairs are counted as listed.
std::uint64_t CorrelationCostOnSubset(const SignedGraph& g, const Clustering& c,
                                      std::span<const VertexPair> pairs);

std::vector<VertexPair> AllPairs(std::size_t n);

}  // namespace fcc

#endif  // FCC_SIGNED_GRAPH_HPP_
