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

#include "fcc/fairness.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "fcc/simd/kernels.hpp"

namespace fcc {
namespace {

__int128 Gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

ColorModel::ColorModel(std::size_t num_vertices,
                       std::vector<std::vector<VertexId>> classes,
                       std::vector<Param> alphas, std::vector<std::string> names)
    : num_vertices_(num_vertices), alphas_(std::move(alphas)), names_(std::move(names)) {
  if (classes.size() != alphas_.size()) {
    throw DomainError("color class count does not match alpha count");
  }
  if (names_.empty()) {
    for (std::size_t i = 0; i < classes.size(); ++i) names_.push_back("c" + std::to_string(i));
  }
  if (names_.size() != classes.size()) throw DomainError("color name count mismatch");
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const double a = alphas_[i].value;
    if (!(a > 0.0) || a > 1.0) {
      throw DomainError("alpha for color '" + names_[i] + "' must lie in (0, 1]");
    }
    auto& cls = classes[i];
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    if (cls.empty()) throw DomainError("color class '" + names_[i] + "' is empty");
    VertexBitset bits(num_vertices);
    for (VertexId v : cls) {
      if (v >= num_vertices) throw DomainError("color member outside vertex range");
      bits.Set(v);
    }
    bits_.push_back(std::move(bits));
  }
  members_ = std::move(classes);
}

ColorModel ColorModel::WithAlphas(std::vector<Param> alphas) const {
  return ColorModel(num_vertices_, members_, std::move(alphas), names_);
}

ColorModel ColorModel::Induced(std::span<const VertexId> vertices) const {
  std::vector<std::vector<VertexId>> classes;
  std::vector<Param> alphas;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < num_colors(); ++i) {
    std::vector<VertexId> cls;
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      if (Contains(i, vertices[k])) cls.push_back(static_cast<VertexId>(k));
    }
    if (cls.empty()) continue;
    classes.push_back(std::move(cls));
    alphas.push_back(alphas_[i]);
    names.push_back(names_[i]);
  }
  return ColorModel(vertices.size(), std::move(classes), std::move(alphas), std::move(names));
}

double ColorModel::min_alpha() const {
  double m = std::numeric_limits<double>::infinity();
  for (const Param& a : alphas_) m = std::min(m, a.value);
  return m;
}

double AlphaStar(std::span<const Param> alphas) {
  if (alphas.empty()) throw DomainError("alpha* of an empty color model");
  double best = -std::numeric_limits<double>::infinity();
  for (const Param& a : alphas) {
    if (!(a.value > 0.0) || a.value > 1.0) throw DomainError("alpha must lie in (0, 1]");
    best = std::max(best, (1.0 - a.value) / a.value);
  }
  return best;
}

double AlphaStar(const ColorModel& colors) { return AlphaStar(colors.alphas()); }

std::vector<Param> ProportionalAlphas(std::span<const Param> weights) {
  if (weights.empty()) throw DomainError("no proportional weights given");
  bool exact = true;
  double total = 0.0;
  for (const Param& w : weights) {
    if (!(w.value > 0.0)) throw DomainError("proportional weights must be positive");
    exact = exact && w.exact.has_value();
    total += w.value;
  }
  std::vector<Param> out;
  if (exact) {
    // Sum over a common denominator in 128-bit, then reduce per entry.
    __int128 den = 1;
    for (const Param& w : weights) den = den / Gcd128(den, w.exact->den()) * w.exact->den();
    __int128 sum = 0;
    for (const Param& w : weights) sum += w.exact->num() * (den / w.exact->den());
    for (const Param& w : weights) {
      const __int128 num = w.exact->num() * (den / w.exact->den());
      const __int128 g = Gcd128(num, sum);
      const __int128 rn = num / g;
      const __int128 rd = sum / g;
      if (rd <= INT64_MAX) {
        out.push_back(Param::FromRational(
            Rational(static_cast<std::int64_t>(rn), static_cast<std::int64_t>(rd))));
      } else {
        out.push_back(Param::FromDouble(w.value / total));
      }
    }
    return out;
  }
  for (const Param& w : weights) out.push_back(Param::FromDouble(w.value / total));
  return out;
}

std::vector<Param> ProportionalAlphas(std::span<const double> weights) {
  std::vector<Param> params;
  for (double w : weights) params.push_back(Param::FromDouble(w));
  return ProportionalAlphas(params);
}

std::vector<std::size_t> ColorCounts(std::span<const VertexId> cluster,
                                     const ColorModel& colors) {
  std::vector<std::size_t> counts(colors.num_colors(), 0);
  for (VertexId v : cluster) {
    for (std::size_t i = 0; i < colors.num_colors(); ++i) counts[i] += colors.Contains(i, v);
  }
  return counts;
}

namespace {

bool CountsWithin(std::span<const std::size_t> counts, std::size_t size,
                  const ColorModel& colors, const Param* eps) {
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (!FairnessBoundHolds(static_cast<std::int64_t>(counts[i]),
                            static_cast<std::int64_t>(size), colors.alpha(i), eps)) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool IsEpsFair(std::span<const VertexId> cluster, const ColorModel& colors,
               const Param& eps) {
  const auto counts = ColorCounts(cluster, colors);
  return CountsWithin(counts, cluster.size(), colors, &eps);
}

bool IsEpsFair(const VertexBitset& cluster, const ColorModel& colors, const Param& eps) {
  const auto& k = simd::Kernels();
  const std::size_t size = cluster.Count();
  for (std::size_t i = 0; i < colors.num_colors(); ++i) {
    const std::size_t count =
        k.popcount_and(cluster.data(), colors.bits(i).data(), cluster.num_words());
    if (!FairnessBoundHolds(static_cast<std::int64_t>(count),
                            static_cast<std::int64_t>(size), colors.alpha(i), &eps)) {
      return false;
    }
  }
  return true;
}

bool IsStrictlyFair(std::span<const VertexId> cluster, const ColorModel& colors) {
  const auto counts = ColorCounts(cluster, colors);
  return CountsWithin(counts, cluster.size(), colors, nullptr);
}

std::optional<double> MaxFairnessViolation(const Clustering& clustering,
                                           const ColorModel& colors) {
  if (clustering.num_vertices() != colors.num_vertices()) {
    throw DomainError("clustering and color model cover different vertex sets");
  }
  std::optional<double> worst;
  for (std::uint32_t k = 0; k < clustering.num_clusters(); ++k) {
    if (clustering.IsDegenerateCluster(k)) continue;
    const auto& members = clustering.Members(k);
    const auto counts = ColorCounts(members, colors);
    double cluster_worst = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      const double ratio = static_cast<double>(counts[i]) /
                           (colors.alpha(i).value * static_cast<double>(members.size()));
      cluster_worst = std::max(cluster_worst, ratio - 1.0);
    }
    worst = std::max(worst.value_or(0.0), cluster_worst);
  }
  return worst;
}

std::optional<double> MaxAdditiveViolation(const Clustering& clustering,
                                           const ColorModel& colors, double eps) {
  if (clustering.num_vertices() != colors.num_vertices()) {
    throw DomainError("clustering and color model cover different vertex sets");
  }
  double max_alpha = 0.0;
  for (const Param& a : colors.alphas()) max_alpha = std::max(max_alpha, a.value);
  std::optional<double> worst;
  for (std::uint32_t k = 0; k < clustering.num_clusters(); ++k) {
    if (clustering.IsDegenerateCluster(k)) continue;
    const auto& members = clustering.Members(k);
    const double size = static_cast<double>(members.size());
    const double allowance = std::max(1.0, eps * size * max_alpha);
    const auto counts = ColorCounts(members, colors);
    double cluster_worst = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      const double excess = static_cast<double>(counts[i]) - colors.alpha(i).value * size;
      cluster_worst = std::max(cluster_worst, excess / allowance);
    }
    worst = std::max(worst.value_or(0.0), cluster_worst);
  }
  return worst;
}

}  // namespace fcc
