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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "spikelab/diagonal.hpp"
#include "spikelab/facts.hpp"
#include "spikelab/search.hpp"

namespace spikelab {

enum class Verdict { kYes, kNo, kUnknown };
enum class VerdictMethod { kExhaustiveSearch, kCertificate };

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(VerdictMethod m) noexcept;

struct CharVerdict {
  std::uint32_t q = 0;
  Verdict representable = Verdict::kUnknown;
  std::optional<Diagonal> witness;  // set whenever representable == kYes
  VerdictMethod method = VerdictMethod::kExhaustiveSearch;
};

struct CharacteristicReport {
  std::vector<CharVerdict> verdicts;  // in the order the primes were given
  std::optional<Certificate> certificate;
  /// False only when a certificate exists and disagrees with a completed
  /// search.
  bool agreement = true;
  std::uint64_t nodes_visited = 0;
  bool budget_exhausted = false;
};

inline constexpr std::uint32_t kCharacteristicMaxPrime = 97;

/// Decides, for each q, whether the spike of x is representable over GF(q).
/// Each q gets its own search with `node_budget` nodes. A search that runs
/// out falls back to the certificate when one exists (witness m mod q) and
/// is reported as kUnknown otherwise. Requires primes <= 97 and n <= 12.
CharacteristicReport characteristic_set(const Diagonal& x, std::span<const std::uint32_t> primes,
                                        std::uint64_t node_budget = kDefaultNodeBudget);

/// Integer diagonal with p entries -1 followed by p - 2 entries 1. Its
/// reduction mod any prime q >= p has the same signature. Requires p >= 3.
std::vector<std::int64_t> multi_characteristic_integers(std::uint32_t p);
Diagonal multi_characteristic_spike(std::uint32_t p);

/// Inverse vector (-1, -1, 1, -2, 2, ..., -2^(k-1), 2^(k-1), -2^k) with
/// k = floor(log2 p), length 2k + 2. Requires an odd prime p.
std::vector<std::int64_t> single_characteristic_inverses(std::uint32_t p);
Diagonal single_characteristic_spike(std::uint32_t p);

struct Interval {
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool contains(std::size_t v) const noexcept { return lo <= v && v <= hi; }
};

/// [floor(log2(p+2)) + 1, floor(log2(p+2)) + floor(log2(4(p+2)/3))].
Interval threshold_interval(std::uint32_t p);

enum class ThresholdStatus { kFound, kInconclusive, kNotFound };
std::string_view to_string(ThresholdStatus s) noexcept;

struct ThresholdReport {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> primes;
  std::size_t n_max = 0;
  ThresholdStatus status = ThresholdStatus::kNotFound;
  std::optional<std::size_t> least_n;
  std::optional<Diagonal> witness;
  std::optional<Certificate> certificate;  // present when status == kFound
  Interval interval;
  bool in_interval = false;
  std::uint64_t classes_scanned = 0;
  std::uint64_t nodes_visited = 0;
};

/// Scans the weak-equivalence classes over GF(p) for n = 3..n_max and
/// returns the least n with a spike representable over p and over none of
/// `primes`. Candidates need a certificate; a candidate supported only by
/// search ends the scan as kInconclusive. An empty `primes` means every
/// prime <= 13 other than p. Requires p <= 7 and 3 <= n_max <= 7.
ThresholdReport estimate_threshold(std::uint32_t p, std::span<const std::uint32_t> primes,
                                   std::size_t n_max,
                                   std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace spikelab
