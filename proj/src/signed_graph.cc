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

#include "fcc/signed_graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace fcc {

SignedGraph::SignedGraph(std::size_t n) : n_(n), bits_((PairCount(n) + 63) / 64, 0) {
  if (n > std::numeric_limits<VertexId>::max()) {
    throw DomainError("vertex count exceeds id range");
  }
}

SignedGraph::SignedGraph(std::size_t n, std::span<const VertexPair> positive_pairs)
    : SignedGraph(n) {
  for (const VertexPair& p : positive_pairs) {
    if (p.u == p.v) throw DomainError("self-loop on vertex " + std::to_string(p.u));
    if (p.u >= n || p.v >= n) throw DomainError("pair references vertex outside graph");
    const VertexPair q = VertexPair::Of(p.u, p.v);
    SetPositive(PairIndex(n_, q.u, q.v));
  }
}

SignedGraph SignedGraph::FromPredicate(
    std::size_t n, const std::function<bool(VertexId, VertexId)>& positive) {
  SignedGraph g(n);
  std::size_t idx = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v, ++idx) {
      if (positive(u, v)) g.SetPositive(idx);
    }
  }
  return g;
}

SignedGraph SignedGraph::AllPositive(std::size_t n) {
  return FromPredicate(n, [](VertexId, VertexId) { return true; });
}

void SignedGraph::SetPositive(std::size_t pair_index) {
  std::uint64_t& word = bits_[pair_index >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (pair_index & 63);
  if ((word & bit) == 0) {
    word |= bit;
    ++positive_count_;
  }
}

bool SignedGraph::IsPositive(VertexId u, VertexId v) const {
  if (u == v || u >= n_ || v >= n_) throw DomainError("pair not in graph");
  const VertexPair p = VertexPair::Of(u, v);
  return IsPositiveAt(PairIndex(n_, p.u, p.v));
}

SignedGraph SignedGraph::Complemented() const {
  return FromPredicate(n_, [this](VertexId u, VertexId v) { return !IsPositive(u, v); });
}

SignedGraph SignedGraph::Induced(std::span<const VertexId> vertices) const {
  for (VertexId v : vertices) {
    if (v >= n_) throw DomainError("induced vertex outside graph");
  }
  return FromPredicate(vertices.size(), [&](VertexId a, VertexId b) {
    return IsPositive(vertices[a], vertices[b]);
  });
}

Clustering Clustering::FromLabels(std::span<const std::uint32_t> labels,
                                  std::span<const VertexId> degenerate) {
  Clustering c;
  const std::size_t n = labels.size();
  c.assignment_.assign(n, 0);
  // Canonical ids in order of first appearance, i.e. by smallest member.
  std::vector<std::uint32_t> sorted_labels(labels.begin(), labels.end());
  std::sort(sorted_labels.begin(), sorted_labels.end());
  sorted_labels.erase(std::unique(sorted_labels.begin(), sorted_labels.end()),
                      sorted_labels.end());
  std::vector<std::uint32_t> id_of(sorted_labels.size(),
                                   std::numeric_limits<std::uint32_t>::max());
  for (VertexId v = 0; v < n; ++v) {
    const auto slot = static_cast<std::size_t>(
        std::lower_bound(sorted_labels.begin(), sorted_labels.end(), labels[v]) -
        sorted_labels.begin());
    if (id_of[slot] == std::numeric_limits<std::uint32_t>::max()) {
      id_of[slot] = static_cast<std::uint32_t>(c.members_.size());
      c.members_.emplace_back();
    }
    c.assignment_[v] = id_of[slot];
    c.members_[id_of[slot]].push_back(v);
  }
  c.degenerate_.assign(degenerate.begin(), degenerate.end());
  std::sort(c.degenerate_.begin(), c.degenerate_.end());
  if (std::adjacent_find(c.degenerate_.begin(), c.degenerate_.end()) != c.degenerate_.end()) {
    throw DomainError("duplicate vertex in degenerate set");
  }
  for (VertexId v : c.degenerate_) {
    if (v >= n) throw DomainError("degenerate vertex outside partition");
    if (c.members_[c.assignment_[v]].size() != 1) {
      throw DomainError("degenerate vertex " + std::to_string(v) + " is not a singleton");
    }
  }
  return c;
}

Clustering Clustering::FromClusters(std::size_t n,
                                    const std::vector<std::vector<VertexId>>& clusters,
                                    std::span<const VertexId> degenerate) {
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> labels(n, kUnset);
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    for (VertexId v : clusters[k]) {
      if (v >= n) throw DomainError("cluster member outside vertex range");
      if (labels[v] != kUnset) throw DomainError("clusters overlap");
      labels[v] = static_cast<std::uint32_t>(k);
    }
  }
  if (std::find(labels.begin(), labels.end(), kUnset) != labels.end()) {
    throw DomainError("clusters do not cover every vertex");
  }
  return FromLabels(labels, degenerate);
}

Clustering Clustering::SingleCluster(std::size_t n) {
  std::vector<std::uint32_t> labels(n, 0);
  return FromLabels(labels);
}

Clustering Clustering::AllSingletons(std::size_t n) {
  std::vector<std::uint32_t> labels(n);
  for (std::uint32_t v = 0; v < n; ++v) labels[v] = v;
  return FromLabels(labels);
}

bool Clustering::IsDegenerateCluster(std::uint32_t cluster) const {
  const auto& m = members_[cluster];
  return m.size() == 1 && std::binary_search(degenerate_.begin(), degenerate_.end(), m[0]);
}

std::uint64_t CorrelationCost(const SignedGraph& g, const Clustering& c) {
  if (g.num_vertices() != c.num_vertices()) {
    throw DomainError("clustering does not partition the graph's vertices");
  }
  const std::size_t n = g.num_vertices();
  std::uint64_t cost = 0;
  std::size_t idx = 0;
  for (VertexId u = 0; u < n; ++u) {
    const std::uint32_t cu = c.ClusterOf(u);
    for (VertexId v = u + 1; v < n; ++v, ++idx) {
      const bool together = cu == c.ClusterOf(v);
      cost += together != g.IsPositiveAt(idx);
    }
  }
  return cost;
}

std::uint64_t CorrelationCostOnSubset(const SignedGraph& g, const Clustering& c,
                                      std::span<const VertexPair> pairs) {
  if (g.num_vertices() != c.num_vertices()) {
    throw DomainError("clustering does not partition the graph's vertices");
  }
  std::uint64_t cost = 0;
  for (const VertexPair& p : pairs) {
    const bool together = c.SameCluster(p.u, p.v);
    cost += together != g.IsPositive(p.u, p.v);
  }
  return cost;
}

std::vector<VertexPair> AllPairs(std::size_t n) {
  std::vector<VertexPair> pairs;
  pairs.reserve(PairCount(n));
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  return pairs;
}

}  // namespace fcc
