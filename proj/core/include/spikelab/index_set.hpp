// Copyright 2026 The Authors.
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

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace spikelab {

/// Subset of [1, n] with element i stored at bit i-1. Elements are one-based
/// throughout the public API, matching the line labels e_i / f_i.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
  constexpr IndexSet(std::initializer_list<unsigned> elements) {
    for (unsigned e : elements) bits_ |= 1u << (e - 1);
  }

  static IndexSet from_elements(const std::vector<unsigned>& elements) {
    IndexSet s;
    for (unsigned e : elements) s.bits_ |= 1u << (e - 1);
    return s;
  }
  static constexpr IndexSet full(unsigned n) {
    return IndexSet(n >= 32 ? ~0u : (1u << n) - 1);
  }

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr unsigned size() const noexcept { return std::popcount(bits_); }
  constexpr bool contains(unsigned element) const noexcept {
    return (bits_ >> (element - 1)) & 1u;
  }
  /// Smallest element; the set must be nonempty.
  constexpr unsigned min() const noexcept { return std::countr_zero(bits_) + 1; }

  constexpr IndexSet with(unsigned element) const noexcept {
    return IndexSet(bits_ | (1u << (element - 1)));
  }
  constexpr IndexSet without(unsigned element) const noexcept {
    return IndexSet(bits_ & ~(1u << (element - 1)));
  }
  constexpr bool is_subset_of(IndexSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool fits(unsigned n) const noexcept {
    return is_subset_of(full(n));
  }

  std::vector<unsigned> elements() const {
    std::vector<unsigned> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<unsigned>(std::countr_zero(b)) + 1);
    }
    return out;
  }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  /// Symmetric difference.
  friend constexpr IndexSet operator^(IndexSet a, IndexSet b) { return IndexSet(a.bits_ ^ b.bits_); }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(IndexSet, IndexSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Lexicographic order on the sorted element lists, where a proper prefix
/// comes first: {1} < {1,2} < {1,3} < {2}.
constexpr bool lex_less(IndexSet a, IndexSet b) noexcept {
  const std::uint32_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const std::uint32_t first = diff & (~diff + 1);
  const std::uint32_t above = ~((first << 1) - 1);
  if (a.bits() & first) {
    // a continues with `first`; b either ends (prefix of a) or continues with
    // a larger element.
    return (b.bits() & above) != 0;
  }
  return (a.bits() & above) == 0;
}

}  // namespace spikelab
