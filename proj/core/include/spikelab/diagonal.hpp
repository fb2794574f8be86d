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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spikelab/gf_prime.hpp"

namespace spikelab {

/// The diagonal (x_1, ..., x_n) of a special standard spike representation:
/// nonzero residues mod p. Positions are zero-based in `operator[]`; the
/// line they parameterize is position + 1.
class Diagonal {
 public:
  /// Throws ZeroEntry for a 0 entry, OutOfRange for a residue >= p, TooSmall
  /// for an empty vector.
  Diagonal(PrimeModulus modulus, std::vector<std::uint32_t> residues);

  /// Reduces arbitrary integers mod p (so -1 is accepted); throws ZeroEntry
  /// when an entry reduces to 0.
  static Diagonal from_integers(PrimeModulus modulus,
                                std::span<const std::int64_t> values);
  /// The diagonal whose entry-wise inverses are the given integers mod p.
  static Diagonal from_inverse_integers(PrimeModulus modulus,
                                        std::span<const std::int64_t> inverses);

  /// Parses `p=<prime>;x=<v1>,...,<vn>` with residues in [1, p). Throws
  /// ParseError (or the modulus errors) on malformed input.
  static Diagonal parse(std::string_view text);
  std::string to_text() const;

  PrimeModulus modulus() const noexcept { return modulus_; }
  std::uint32_t p() const noexcept { return modulus_.value(); }
  std::size_t size() const noexcept { return x_.size(); }

  FieldElem operator[](std::size_t i) const { return FieldElem(modulus_, x_[i]); }
  std::span<const std::uint32_t> residues() const noexcept { return x_; }
  std::vector<std::uint32_t> inverse_residues() const;
  std::vector<FieldElem> elements() const;
  std::vector<std::int64_t> balanced() const;

  /// (pi . x)[perm[i]] = x[i]; `perm` is a zero-based permutation.
  Diagonal permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const Diagonal&, const Diagonal&) = default;
  /// Orders by p, then length, then lexicographically by residue.
  friend std::strong_ordering operator<=>(const Diagonal& a, const Diagonal& b);

 private:
  PrimeModulus modulus_;
  std::vector<std::uint32_t> x_;
};

}  // namespace spikelab
