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

#ifndef FCC_COMMON_HPP_
#define FCC_COMMON_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fcc {

using VertexId = std::uint32_t;

// Precondition violations on domain inputs (mismatched vertex sets, invalid
// parameters, malformed files).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unordered vertex pair, always stored with u < v.
struct VertexPair {
  VertexId u = 0;
  VertexId v = 0;

  static VertexPair Of(VertexId a, VertexId b) {
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
  }
  friend bool operator==(const VertexPair&, const VertexPair&) = default;
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

inline std::size_t PairCount(std::size_t n) { return n * (n - (n > 0)) / 2; }

// Lexicographic index of (u, v), u < v, among all pairs of n vertices.
inline std::size_t PairIndex(std::size_t n, VertexId u, VertexId v) {
  return static_cast<std::size_t>(u) * (2 * n - u - 1) / 2 + (v - u - 1);
}

// Fixed-size bitset over dense vertex ids.
class VertexBitset {
 public:
  VertexBitset() = default;
  explicit VertexBitset(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  static VertexBitset Full(std::size_t n) {
    VertexBitset b(n);
    for (std::size_t w = 0; w < b.words_.size(); ++w) b.words_[w] = ~std::uint64_t{0};
    b.TrimTail();
    return b;
  }

  std::size_t size() const { return size_; }
  std::size_t num_words() const { return words_.size(); }
  const std::uint64_t* data() const { return words_.data(); }
  std::uint64_t* data() { return words_.data(); }

  bool Test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void Set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void Reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t Count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool None() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  // this &= ~other
  void Subtract(const VertexBitset& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  }

  std::vector<VertexId> Members() const {
    std::vector<VertexId> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        out.push_back(static_cast<VertexId>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  friend bool operator==(const VertexBitset&, const VertexBitset&) = default;

 private:
  void TrimTail() {
    if (size_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace fcc

#endif  // FCC_COMMON_HPP_
