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

#include "fcc/oracle.hpp"

#include <limits>
#include <random>
#include <vector>

namespace fcc {

const char* ToString(OracleMode mode) {
  return mode == OracleMode::kUnfair ? "unfair" : "fair-strict";
}

namespace {

// Depth-first walk over restricted-growth strings with the cost maintained
// incrementally as vertices are placed.
class PartitionWalker {
 public:
  PartitionWalker(const SignedGraph* g, const ColorModel* colors)
      : g_(g), colors_(colors), n_(g ? g->num_vertices() : 0) {}

  void Run(std::size_t n) {
    n_ = n;
    labels_.assign(n_, 0);
    if (colors_ != nullptr) {
      const std::size_t l = colors_->num_colors();
      counts_.assign(n_ * l, 0);
      sizes_.assign(n_, 0);
    }
    if (n_ == 0) {
      Leaf(0);
      return;
    }
    Place(0, 0, 0);
  }

  OracleResult result;
  std::vector<std::uint32_t> best_labels;

 private:
  void Place(std::size_t v, std::uint32_t blocks, std::uint64_t cost) {
    if (v == n_) {
      Leaf(cost);
      return;
    }
    for (std::uint32_t b = 0; b <= blocks; ++b) {
      std::uint64_t added = 0;
      if (g_ != nullptr) {
        for (std::size_t u = 0; u < v; ++u) {
          const bool positive = g_->IsPositive(static_cast<VertexId>(u), static_cast<VertexId>(v));
          if ((labels_[u] == b) != positive) ++added;
        }
      }
      labels_[v] = b;
      Enter(v, b, +1);
      Place(v + 1, b == blocks ? blocks + 1 : blocks, cost + added);
      Enter(v, b, -1);
    }
  }

  void Enter(std::size_t v, std::uint32_t b, int delta) {
    if (colors_ == nullptr) return;
    const std::size_t l = colors_->num_colors();
    sizes_[b] += delta;
    for (std::size_t i = 0; i < l; ++i) {
      if (colors_->Contains(i, static_cast<VertexId>(v))) counts_[b * l + i] += delta;
    }
  }

  bool LeafIsFair() const {
    const std::size_t l = colors_->num_colors();
    for (std::size_t b = 0; b < n_ && sizes_[b] > 0; ++b) {
      for (std::size_t i = 0; i < l; ++i) {
        if (!FairnessBoundHolds(counts_[b * l + i], sizes_[b], colors_->alpha(i), nullptr)) {
          return false;
        }
      }
    }
    return true;
  }

  void Leaf(std::uint64_t cost) {
    ++result.partitions_examined;
    if (colors_ != nullptr && !LeafIsFair()) return;
    ++result.feasible_count;
    if (!result.optimum || cost < *result.optimum) {
      result.optimum = cost;
      best_labels = labels_;
    }
  }

  const SignedGraph* g_;
  const ColorModel* colors_;
  std::size_t n_;
  std::vector<std::uint32_t> labels_;
  std::vector<std::int64_t> counts_;
  std::vector<std::int64_t> sizes_;
};

}  // namespace

OracleResult BruteForceOptimum(const SignedGraph& g, const ColorModel* colors,
                               OracleMode mode) {
  const std::size_t n = g.num_vertices();
  if (n > kOracleMaxVertices) throw DomainError("brute force limited to 12 vertices");
  if (mode == OracleMode::kFairStrict) {
    if (colors == nullptr) throw DomainError("fair-strict mode needs a color model");
    if (colors->num_vertices() != n) throw DomainError("color model size mismatch");
  }
  PartitionWalker walker(&g, mode == OracleMode::kFairStrict ? colors : nullptr);
  walker.Run(n);
  OracleResult result = std::move(walker.result);
  result.mode = mode;
  result.feasible = result.optimum.has_value();
  if (result.feasible) result.witness = Clustering::FromLabels(walker.best_labels);
  return result;
}

std::uint64_t CountSetPartitions(std::size_t n) {
  if (n > kOracleMaxVertices) throw DomainError("partition count limited to 12 elements");
  PartitionWalker walker(nullptr, nullptr);
  walker.Run(n);
  return walker.result.partitions_examined;
}

Clustering Pivot(const SignedGraph& g, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  std::mt19937_64 rng(seed);
  std::vector<VertexId> remaining(n);
  for (std::size_t v = 0; v < n; ++v) remaining[v] = static_cast<VertexId>(v);
  std::vector<std::uint32_t> labels(n, 0);
  std::uint32_t next = 0;
  while (!remaining.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, remaining.size() - 1);
    const VertexId pivot = remaining[pick(rng)];
    std::vector<VertexId> rest;
    rest.reserve(remaining.size());
    for (VertexId v : remaining) {
      if (v == pivot || g.IsPositive(pivot, v)) {
        labels[v] = next;
      } else {
        rest.push_back(v);
      }
    }
    remaining.swap(rest);
    ++next;
  }
  return Clustering::FromLabels(labels);
}

}  // namespace fcc
