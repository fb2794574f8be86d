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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spikelab/diagonal.hpp"
#include "spikelab/index_set.hpp"

namespace spikelab {

inline constexpr std::size_t kSignatureMaxN = 24;

/// A family of subsets of [1, n] stored as a 2^n-bit pattern: subset I lives
/// at bit I.bits(). For a diagonal this is the set of I with
/// sum_{i in I} x_i^-1 = -1, i.e. its circuit-hyperplanes.
class Signature {
 public:
  /// Empty family over [1, n]; throws TooLarge past kSignatureMaxN.
  explicit Signature(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  bool contains(IndexSet s) const noexcept {
    return (words_[s.bits() >> 6] >> (s.bits() & 63)) & 1u;
  }
  bool contains_bits(std::uint32_t bits) const noexcept {
    return (words_[bits >> 6] >> (bits & 63)) & 1u;
  }
  void insert(IndexSet s) noexcept {
    words_[s.bits() >> 6] |= std::uint64_t{1} << (s.bits() & 63);
  }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  /// Members in increasing bit-pattern order.
  std::vector<IndexSet> members() const;

  /// { I ^ s : I in *this } -- the family seen from a swapped basis.
  Signature transformed(IndexSet s) const;
  /// { pi(I) : I in *this } with pi(i) = perm[i-1] + 1.
  Signature permuted(std::span<const std::size_t> perm) const;

  /// Lowercase hex of the 2^n-bit pattern, most significant nibble first;
  /// max(1, 2^n / 4) digits.
  std::string to_hex() const;
  static Signature from_hex(std::size_t n, std::string_view hex);
  /// Takes ownership of a raw pattern laid out as words() returns it.
  static Signature from_words(std::size_t n, std::vector<std::uint64_t> words);

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

/// All nonempty I with sum_{i in I} x_i^-1 = -1, enumerated over the 2^n
/// subsets in Gray-code order with incremental sums. Throws TooLarge for
/// n > kSignatureMaxN.
Signature signature(const Diagonal& x);

/// Same enumeration on raw inverse residues; writes into `out`, which must
/// hold 2^n bits and be zeroed. Used by the bulk audits.
void signature_bits(std::span<const std::uint32_t> inverses, std::uint32_t p,
                    std::span<std::uint64_t> out);

/// True iff the transversal taking f_i for i in K and e_i otherwise is
/// dependent, decided by the closed-form determinant: sum_{K} x_i^-1 = -1.
bool is_dependent_transversal(const Diagonal& x, IndexSet k);

}  // namespace spikelab
