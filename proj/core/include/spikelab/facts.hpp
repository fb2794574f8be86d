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
#include <optional>
#include <vector>

#include "spikelab/index_set.hpp"
#include "spikelab/signature.hpp"

namespace spikelab {

/// "sum_{i in set} y_i^-1 = value" in every special standard representation
/// of the spike, over any field (value read through the prime subfield).
struct LinearFact {
  IndexSet set;
  std::int64_t value = 0;

  friend bool operator==(const LinearFact&, const LinearFact&) = default;
  friend std::strong_ordering operator<=>(const LinearFact& a, const LinearFact& b) {
    if (auto c = a.set.bits() <=> b.set.bits(); c != 0) return c;
    return a.value <=> b.value;
  }
};

class FactSet {
 public:
  FactSet(std::size_t n, std::int64_t bound, std::vector<LinearFact> facts);

  std::size_t n() const noexcept { return n_; }
  std::int64_t bound() const noexcept { return bound_; }
  /// Sorted by set pattern, then value.
  const std::vector<LinearFact>& facts() const noexcept { return facts_; }
  bool contains(const LinearFact& fact) const;
  std::vector<std::int64_t> values_on(IndexSet set) const;

  /// One integer per line when every singleton carries a fact; the value of
  /// least magnitude (negative first on ties) is chosen when several were
  /// derived.
  std::optional<std::vector<std::int64_t>> pinned_singletons() const;

 private:
  std::size_t n_;
  std::int64_t bound_;
  std::vector<LinearFact> facts_;
};

inline constexpr std::size_t kFactsMaxN = 16;

/// Saturates the facts implied by a signature:
///   I in sig                                   => (I, -1)
///   (I, c), (J, d), I and J disjoint           => (I u J, c + d)
///   (I, c), (J, d), I a proper subset of J     => (J \ I, d - c)
/// Facts with |value| > p(p-1)/2 are dropped. Sound but not complete.
/// Throws TooLarge for n > kFactsMaxN.
FactSet propagate_facts(const Signature& sig, std::uint32_t p);

/// Exact description of the primes over which a spike with pinned singleton
/// values m_i is representable: q qualifies iff no m_i vanishes mod q and,
/// for every I, q divides sum_{i in I} m_i + 1 exactly when I is in the
/// signature. The same test with q = 0 decides characteristic zero.
struct Certificate {
  std::vector<std::int64_t> singleton_values;
  bool characteristic_zero = false;
  /// When true, every prime except `primes` qualifies; otherwise exactly
  /// `primes` do.
  bool cofinite = false;
  std::vector<std::uint64_t> primes;

  bool admits(std::uint64_t q) const;
};

Certificate certify(const Signature& sig, const std::vector<std::int64_t>& singleton_values);

/// Runs propagate_facts and, when every singleton is pinned, certify.
std::optional<Certificate> certificate_for(const Signature& sig, std::uint32_t p);

}  // namespace spikelab
