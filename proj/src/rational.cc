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

#include "fcc/rational.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fcc/common.hpp"

namespace fcc {
namespace {

// Keeps cross-multiplied fairness tests inside 128 bits.
constexpr std::int64_t kMaxDenominator = 1'000'000'000'000;

std::optional<std::int64_t> ParseInt(std::string_view s) {
  std::int64_t value = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

std::optional<Rational> Rational::TryParse(std::string_view text) {
  text = Trim(text);
  if (text.empty()) return std::nullopt;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = ParseInt(Trim(text.substr(0, slash)));
    auto den = ParseInt(Trim(text.substr(slash + 1)));
    if (!num || !den || *den == 0) return std::nullopt;
    Rational r(*num, *den);
    if (r.den() > kMaxDenominator) return std::nullopt;
    return r;
  }
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{}
                                                        : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) return std::nullopt;
  if (frac.size() > 12) return std::nullopt;
  for (char c : whole) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  for (char c : frac) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  const std::int64_t w = whole.empty() ? 0 : *ParseInt(whole);
  const std::int64_t f = frac.empty() ? 0 : *ParseInt(frac);
  if (w > (INT64_MAX - f) / den) return std::nullopt;
  const std::int64_t num = w * den + f;
  return Rational(negative ? -num : num, den);
}

Rational Rational::Parse(std::string_view text) {
  auto r = TryParse(text);
  if (!r) throw DomainError("not a rational number: '" + std::string(text) + "'");
  return *r;
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Param::ToString() const {
  if (exact) {
    // Render terminating fractions as decimals, others as num/den.
    std::int64_t d = exact->den();
    while (d % 2 == 0) d /= 2;
    while (d % 5 == 0) d /= 5;
    if (d != 1) return exact->ToString();
  }
  std::ostringstream out;
  out.precision(12);
  out << value;
  return out.str();
}

bool FairnessBoundHolds(std::int64_t count, std::int64_t size, const Param& alpha,
                        const Param* eps) {
  const bool exact = alpha.exact.has_value() && (eps == nullptr || eps->exact.has_value());
  if (exact) {
    using Wide = __int128;
    // count * da * de <= (de + ne) * na * size
    const Wide na = alpha.exact->num();
    const Wide da = alpha.exact->den();
    const Wide ne = eps ? eps->exact->num() : 0;
    const Wide de = eps ? eps->exact->den() : 1;
    return Wide{count} * da * de <= (de + ne) * na * Wide{size};
  }
  const double factor = 1.0 + (eps ? eps->value : 0.0);
  return static_cast<double>(count) <=
         factor * alpha.value * static_cast<double>(size) + kFloatSlack;
}

}  // namespace fcc
