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

#ifndef FCC_FAIRNESS_HPP_
#define FCC_FAIRNESS_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fcc/common.hpp"
#include "fcc/rational.hpp"
#include "fcc/signed_graph.hpp"

namespace fcc {

// Possibly-overlapping color classes V_1..V_l over vertices 0..n-1, each with
// an upper representation bound alpha_i in (0, 1].
class ColorModel {
 public:
  ColorModel() = default;
  // Throws DomainError on an empty class, a member out of range, a size
  // mismatch between classes and alphas, or alpha outside (0, 1].
  ColorModel(std::size_t num_vertices, std::vector<std::vector<VertexId>> classes,
             std::vector<Param> alphas, std::vector<std::string> names = {});

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_colors() const { return alphas_.size(); }
  const Param& alpha(std::size_t color) const { return alphas_[color]; }
  const std::vector<Param>& alphas() const { return alphas_; }
  const std::string& name(std::size_t color) const { return names_[color]; }
  const VertexBitset& bits(std::size_t color) const { return bits_[color]; }
  const std::vector<VertexId>& members(std::size_t color) const { return members_[color]; }
  std::size_t class_size(std::size_t color) const { return members_[color].size(); }
  bool Contains(std::size_t color, VertexId v) const { return bits_[color].Test(v); }

  // Same classes, new bounds.
  ColorModel WithAlphas(std::vector<Param> alphas) const;
  // Classes restricted to `vertices`, renumbered in list order. Classes that
  // become empty are dropped.
  ColorModel Induced(std::span<const VertexId> vertices) const;

  double min_alpha() const;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<std::vector<VertexId>> members_;
  std::vector<VertexBitset> bits_;
  std::vector<Param> alphas_;
  std::vector<std::string> names_;
};

// max_i (1 - alpha_i) / alpha_i. Throws DomainError for an empty model.
double AlphaStar(const ColorModel& colors);
double AlphaStar(std::span<const Param> alphas);

// alpha_i = p_i / sum_j p_j, exact when every p_i is exact.
std::vector<Param> ProportionalAlphas(std::span<const Param> weights);
std::vector<Param> ProportionalAlphas(std::span<const double> weights);

// |V_i ∩ C| <= (1 + eps) alpha_i |C| for every color i.
bool IsEpsFair(std::span<const VertexId> cluster, const ColorModel& colors,
               const Param& eps);
bool IsEpsFair(const VertexBitset& cluster, const ColorModel& colors, const Param& eps);

// |V_i ∩ C| <= alpha_i |C| for every color i.
bool IsStrictlyFair(std::span<const VertexId> cluster, const ColorModel& colors);

// Per-color counts inside a cluster.
std::vector<std::size_t> ColorCounts(std::span<const VertexId> cluster,
                                     const ColorModel& colors);

// max over non-degenerate clusters C and colors i of |V_i ∩ C| / (alpha_i |C|) - 1,
// floored at 0. nullopt when every cluster is degenerate.
std::optional<double> MaxFairnessViolation(const Clustering& clustering,
                                           const ColorModel& colors);

// Additive form: max over non-degenerate clusters and colors of
// max(0, |V_i ∩ C| - alpha_i |C|) / max{1, eps |C| max_i alpha_i}.
// A value <= 1 means every cluster is within the additive allowance.
std::optional<double> MaxAdditiveViolation(const Clustering& clustering,
                                           const ColorModel& colors, double eps);

}  // namespace fcc

#endif  // FCC_FAIRNESS_HPP_
