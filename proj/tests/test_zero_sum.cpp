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

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spikelab/zero_sum.hpp"
#include "support.hpp"

using namespace spikelab;

TEST_CASE("subset_with_sum examples") {
  const auto f3 = make_field(3);
  const auto f5 = make_field(5);
  CHECK(subset_with_sum({f3, {1, 1}, 2}) == IndexSet{1, 2});
  CHECK(subset_with_sum({f3, {2, 2}, 1}) == IndexSet{1, 2});
  CHECK(subset_with_sum({f5, {1, 2, 3, 4}, 4}) == IndexSet{1, 3});
  CHECK(subset_with_sum({f5, {1, 2, 3, 4}, 4}) ==
        *oracle::least_subset_with_sum({1, 2, 3, 4}, 5, 4));
  CHECK_ERROR_CODE(subset_with_sum({f5, {1, 1, 1}, 4}), ErrorCode::kNoWitness);
  CHECK_ERROR_CODE(subset_with_sum({f5, {1, 0}, 1}), ErrorCode::kZeroEntry);
  CHECK_ERROR_CODE(subset_with_sum({f5, {1, 2}, 0}), ErrorCode::kZeroEntry);
  CHECK_ERROR_CODE(subset_with_sum({f5, {1, 7}, 1}), ErrorCode::kOutOfRange);
}

TEST_CASE("zero_sum_subset examples") {
  const auto f3 = make_field(3);
  const auto f5 = make_field(5);
  CHECK(zero_sum_subset({f3, {1, 1, 1}, 0}) == IndexSet{1, 2, 3});
  CHECK(zero_sum_subset({f5, {1, 2, 0}, 0}) == IndexSet{3});
  CHECK(zero_sum_subset({f5, {1, 1, 1, 1, 1}, 0}) == IndexSet{1, 2, 3, 4, 5});
  CHECK_ERROR_CODE(zero_sum_subset({f5, {1, 1, 1, 1}, 0}), ErrorCode::kNoWitness);
  CHECK_ERROR_CODE(zero_sum_subset({f5, {}, 0}), ErrorCode::kNoWitness);
}

TEST_CASE("solvers agree with exhaustive enumeration") {
  std::mt19937_64 rng(73);
  int cases = 0;
  for (std::uint32_t p : {2, 3, 5, 7}) {
    const auto f = make_field(p);
    for (int trial = 0; trial < 3000; ++trial) {
      const std::size_t n = 1 + trial % 12;
      std::vector<std::uint32_t> a(n);
      std::uniform_int_distribution<std::uint32_t> any(0, p - 1), nonzero(1, p - 1);
      for (auto& v : a) v = any(rng);
      const auto zero = oracle::least_subset_with_sum(a, p, 0);
      if (zero) {
        CHECK(zero_sum_subset({f, a, 0}) == *zero);
      } else {
        CHECK_ERROR_CODE(zero_sum_subset({f, a, 0}), ErrorCode::kNoWitness);
      }
      ++cases;
      if (p == 2 && trial % 2) continue;
      for (auto& v : a) v = nonzero(rng);
      const std::uint32_t k = nonzero(rng);
      const auto hit = oracle::least_subset_with_sum(a, p, k);
      if (hit) {
        CHECK(subset_with_sum({f, a, k}) == *hit);
      } else {
        CHECK(n + 1 < p);
        CHECK_ERROR_CODE(subset_with_sum({f, a, k}), ErrorCode::kNoWitness);
      }
      ++cases;
    }
  }
  CHECK(cases >= 10000);
}

TEST_CASE("bound verifiers") {
  const auto r1 = verify_subset_sum_bound(3, 2);
  CHECK(r1.checked == 8);
  CHECK(r1.failures.empty());
  const auto r2 = verify_subset_sum_bound(5, 4);
  CHECK(r2.checked == 256 * 4);
  CHECK(r2.failures.empty());
  const auto r3 = verify_zero_sum_bound(3, 3);
  CHECK(r3.checked == 27);
  CHECK(r3.failures.empty());
  const auto r4 = verify_zero_sum_bound(5, 5);
  CHECK(r4.checked == 3125);
  CHECK(r4.failures.empty());

  CHECK_ERROR_CODE(verify_subset_sum_bound(5, 3), ErrorCode::kTooSmall);
  CHECK_ERROR_CODE(verify_zero_sum_bound(5, 4), ErrorCode::kTooSmall);
  CHECK_ERROR_CODE(verify_zero_sum_bound(13, 13), ErrorCode::kBudgetExceeded);
  CHECK_ERROR_CODE(verify_subset_sum_bound(13, 12), ErrorCode::kBudgetExceeded);
  CHECK_ERROR_CODE(verify_zero_sum_bound(4, 4), ErrorCode::kCompositeModulus);
}
