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
#include <string>
#include <vector>

#include "spikelab/diagonal.hpp"
#include "spikelab/signature.hpp"

namespace spikelab {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
inline constexpr std::size_t kSearchMaxN = 12;

struct RepSearch {
  std::optional<Diagonal> witness;  // empty: proven that none exists
  std::uint64_t nodes = 0;
};

/// Searches GF(q) for a diagonal y with signature(y) == sig exactly.
///
/// Coordinates are assigned in order 1..n with diagonal values ascending, so
/// the first witness found is the lexicographically least one. After
/// assigning coordinate k every subset whose largest element is k is
/// decided: if one of them is a member, the value of y_k^-1 is forced and
/// checked against the others; otherwise each subset rules out a single
/// value. An empty result is only returned after the pruned search is
/// complete. Throws BudgetExceeded once more than `node_budget` assignments
/// have been tried, and TooLarge for n > kSearchMaxN.
RepSearch find_rep_over(const Signature& sig, PrimeModulus q,
                        std::uint64_t node_budget = kDefaultNodeBudget);

struct CollisionGroup {
  std::string signature_hex;
  std::vector<Diagonal> diagonals;
};

struct UniquenessReport {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint64_t diagonals = 0;
  std::uint64_t distinct = 0;
  std::uint64_t collisions = 0;        // diagonals - distinct
  std::vector<CollisionGroup> groups;  // first few, by least member
  double ms = 0;
};

inline constexpr std::size_t kReportedCollisionGroups = 16;

/// Computes the signature of every diagonal in (GF(p)^*)^n and reports
/// which ones share a signature. Throws BudgetExceeded when
/// (p-1)^n 2^n > budget.
UniquenessReport uniqueness_audit(std::uint32_t p, std::uint32_t n,
                                  std::uint64_t budget = 1'000'000'000);

}  // namespace spikelab
