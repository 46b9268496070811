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

#ifndef FCC_RATIONAL_HPP_
#define FCC_RATIONAL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fcc {

// Exact non-negative-denominator rational used for fairness boundaries.
class Rational {
 public:
  constexpr Rational() = default;
  // Throws DomainError on a zero denominator.
  Rational(std::int64_t num, std::int64_t den);

  // Accepts "3", "0.35", "1/3", "-2.5". Throws DomainError otherwise.
  static Rational Parse(std::string_view text);
  // Non-throwing variant.
  static std::optional<Rational> TryParse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double ToDouble() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string ToString() const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// A real-valued parameter (alpha, epsilon) that remembers its exact rational
// value when it was supplied as text. Comparisons at fairness boundaries use
// the exact value when every operand has one, otherwise a 1e-9 slack.
struct Param {
  double value = 0.0;
  std::optional<Rational> exact;

  static Param FromDouble(double v) { return Param{v, std::nullopt}; }
  static Param FromRational(const Rational& r) { return Param{r.ToDouble(), r}; }
  // Decimal or fraction text; exact value is kept.
  static Param Parse(std::string_view text) { return FromRational(Rational::Parse(text)); }

  std::string ToString() const;
};

inline constexpr double kFloatSlack = 1e-9;

// count <= factor * alpha * size, where factor = 1 + eps (eps may be null for
// the strict test). Exact when alpha and eps carry rationals.
bool FairnessBoundHolds(std::int64_t count, std::int64_t size, const Param& alpha,
                        const Param* eps);

}  // namespace fcc

#endif  // FCC_RATIONAL_HPP_
