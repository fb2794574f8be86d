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

#include <cstdint>
#include <string>
#include <vector>

#include "spikelab/gf_prime.hpp"
#include "spikelab/index_set.hpp"

namespace spikelab {

/// A sequence a_1..a_n over GF(p) and a target k. The subset-sum form
/// requires every a_i and k nonzero; the zero-sum form ignores k.
struct ZeroSumInstance {
  PrimeModulus modulus;
  std::vector<std::uint32_t> a;
  std::uint32_t target = 0;
};

/// Lexicographically least nonempty I with sum_{i in I} a_i = k, found by a
/// suffix-reachability table in O(n p). Requires a_i != 0 and k != 0
/// (ZeroEntry otherwise); throws NoWitness when k is unreachable, which can
/// only happen for n < p - 1.
IndexSet subset_with_sum(const ZeroSumInstance& inst);

/// Lexicographically least nonempty I with sum_{i in I} a_i = 0. Throws
/// NoWitness when none exists, which can only happen for n < p.
IndexSet zero_sum_subset(const ZeroSumInstance& inst);

inline constexpr std::uint64_t kVerifierBudget = 1'000'000'000;

struct SubsetSumFailure {
  std::vector<std::uint32_t> a;
  std::uint32_t target = 0;
};

struct LemmaReport {
  std::string lemma;
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint64_t checked = 0;
  std::vector<SubsetSumFailure> failures;
  double ms = 0;
};

/// Runs subset_with_sum on every tuple of (GF(p)^*)^n and every nonzero
/// target. Requires n >= p - 1 (TooSmall); throws BudgetExceeded when
/// (p-1)^n (p-1) > kVerifierBudget.
LemmaReport verify_subset_sum_bound(std::uint32_t p, std::uint32_t n);

/// Runs zero_sum_subset on every tuple of GF(p)^n. Requires n >= p; throws
/// BudgetExceeded when p^n > kVerifierBudget.
LemmaReport verify_zero_sum_bound(std::uint32_t p, std::uint32_t n);

}  // namespace spikelab
