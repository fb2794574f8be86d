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
#include "spikelab/characteristic.hpp"
#include "spikelab/facts.hpp"
#include "spikelab/search.hpp"
#include "support.hpp"

using namespace spikelab;

namespace {

const std::vector<std::uint32_t> kSmallPrimes{2, 3, 5, 7, 11, 13};

std::int64_t sum_inverses(const Diagonal& y, IndexSet s) {
  std::int64_t total = 0;
  const auto z = y.inverse_residues();
  for (unsigned e : s.elements()) total += z[e - 1];
  return total;
}

bool congruent(std::int64_t a, std::int64_t b, std::int64_t q) {
  return ((a - b) % q + q) % q == 0;
}

}  // namespace

TEST_CASE("find_rep_over examples") {
  const auto f3 = make_field(3);
  const auto f5 = make_field(5);
  const auto own = find_rep_over(signature(Diagonal(f3, {2, 2, 2})), f3);
  CHECK(own.witness == Diagonal(f3, {2, 2, 2}));
  CHECK_FALSE(find_rep_over(signature(Diagonal(f3, {2, 2, 1, 1})), f5).witness);
  const auto sharp = find_rep_over(signature(Diagonal(f3, {2, 2, 2, 1})), f5);
  REQUIRE(sharp.witness);
  CHECK(signature(*sharp.witness) == signature(Diagonal(f3, {2, 2, 2, 1})));
  CHECK(*sharp.witness == Diagonal(f5, {4, 4, 4, 1}));
  CHECK_ERROR_CODE(find_rep_over(Signature(13), f3), ErrorCode::kTooLarge);
  CHECK_ERROR_CODE(find_rep_over(signature(Diagonal(make_field(13), {1, 2, 3, 4, 5, 6, 7, 8})),
                                 make_field(13), 5),
                   ErrorCode::kBudgetExceeded);
}

TEST_CASE("find_rep_over matches brute force") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 120; ++trial) {
    const std::uint32_t p = kSmallPrimes[trial % 4];
    const std::uint32_t q = kSmallPrimes[(trial / 4) % 5];
    const std::size_t n = 1 + trial % 5;
    const auto x = oracle::random_diagonal(rng, make_field(p), n);
    const auto sig = signature(x);
    const auto fast = find_rep_over(sig, make_field(q));
    CHECK(fast.witness == oracle::brute_rep_search(sig, make_field(q)));
    if (fast.witness) CHECK(signature(*fast.witness) == sig);
  }
}

TEST_CASE("find_rep_over recovers the diagonal itself over its own field") {
  std::mt19937_64 rng(83);
  for (std::uint32_t p : {3, 5}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = oracle::random_diagonal(rng, make_field(p), 2 * p - 1 + trial % 2);
      CHECK(find_rep_over(signature(x), make_field(p)).witness == x);
    }
  }
}

TEST_CASE("uniqueness audit") {
  const auto trivial = uniqueness_audit(2, 4);
  CHECK(trivial.diagonals == 1);
  CHECK(trivial.collisions == 0);
  const auto r = uniqueness_audit(3, 5);
  CHECK(r.diagonals == 32);
  CHECK(r.distinct == 32);
  CHECK(r.collisions == 0);
  CHECK(r.groups.empty());

  // Below the threshold distinct diagonals can share a signature.
  const auto small = uniqueness_audit(5, 3);
  CHECK(small.diagonals == 64);
  CHECK(small.collisions == small.diagonals - small.distinct);
  for (const auto& g : small.groups) {
    CHECK(g.diagonals.size() >= 2);
    for (const auto& d : g.diagonals) CHECK(signature(d).to_hex() == g.signature_hex);
  }
  CHECK_ERROR_CODE(uniqueness_audit(13, 12, 1000), ErrorCode::kBudgetExceeded);
}

TEST_CASE("fact propagation examples") {
  const auto f3 = make_field(3);
  const auto facts = propagate_facts(signature(Diagonal(f3, {2, 2, 1, 1})), 3);
  CHECK(facts.contains({{1}, -1}));
  CHECK(facts.contains({{2}, -1}));
  CHECK(facts.contains({{3}, 1}));
  CHECK(facts.contains({{4}, -2}));
  const auto pinned = facts.pinned_singletons();
  REQUIRE(pinned);
  CHECK(pinned->size() == 4);
  for (const auto& f : facts.facts()) CHECK(std::abs(f.value) <= 3);

  const auto three = propagate_facts(signature(Diagonal(f3, {2, 2, 2})), 3);
  CHECK(three.contains({{1}, -1}));
  CHECK(three.contains({{2}, -1}));
  CHECK(three.contains({{3}, -1}));
  CHECK(three.contains({{1, 2}, -2}));
  CHECK(three.contains({{1, 2, 3}, -3}));
  CHECK(three.pinned_singletons() == std::vector<std::int64_t>{-1, -1, -1});

  CHECK_FALSE(propagate_facts(Signature(3), 3).pinned_singletons());
  CHECK_ERROR_CODE(propagate_facts(Signature(17), 3), ErrorCode::kTooLarge);
}

TEST_CASE("facts hold in every witness over every field") {
  std::mt19937_64 rng(89);
  std::vector<Diagonal> instances{multi_characteristic_spike(3), multi_characteristic_spike(5)};
  for (int trial = 0; trial < 30; ++trial) {
    instances.push_back(oracle::random_diagonal(rng, make_field(kSmallPrimes[1 + trial % 3]),
                                                3 + trial % 4));
  }
  for (const auto& x : instances) {
    const auto sig = signature(x);
    const auto facts = propagate_facts(sig, x.p());
    for (auto q : kSmallPrimes) {
      const auto found = find_rep_over(sig, make_field(q));
      if (!found.witness) continue;
      for (const auto& fact : facts.facts()) {
        CHECK_MESSAGE(congruent(sum_inverses(*found.witness, fact.set), fact.value, q),
                      x.to_text() << " q=" << q);
      }
    }
  }
}

TEST_CASE("certificates") {
  const auto f3 = make_field(3);
  const auto cert = certificate_for(signature(Diagonal(f3, {2, 2, 1, 1})), 3);
  REQUIRE(cert);
  CHECK_FALSE(cert->cofinite);
  CHECK_FALSE(cert->characteristic_zero);
  CHECK(cert->primes == std::vector<std::uint64_t>{3});
  CHECK(cert->admits(3));
  CHECK_FALSE(cert->admits(5));

  const auto multi = certificate_for(signature(multi_characteristic_spike(3)), 3);
  REQUIRE(multi);
  CHECK(multi->cofinite);
  CHECK(multi->characteristic_zero);
  CHECK(multi->admits(3));
  CHECK(multi->admits(101));
  CHECK_FALSE(multi->admits(2));

  CHECK_ERROR_CODE(certify(Signature(3), {1, 1}), ErrorCode::kMismatchedShape);
}

TEST_CASE("characteristic_set examples") {
  const auto f3 = make_field(3);
  const std::vector<std::uint32_t> others{2, 5, 7, 11, 13};
  const auto r = characteristic_set(Diagonal(f3, {2, 2, 1, 1}), others);
  REQUIRE(r.certificate);
  CHECK(r.certificate->primes == std::vector<std::uint64_t>{3});
  CHECK(r.agreement);
  CHECK_FALSE(r.budget_exhausted);
  REQUIRE(r.verdicts.size() == 5);
  for (const auto& v : r.verdicts) {
    CHECK(v.representable == Verdict::kNo);
    CHECK(v.method == VerdictMethod::kExhaustiveSearch);
    CHECK_FALSE(v.witness);
  }

  const auto binary = characteristic_set(Diagonal(make_field(2), {1, 1, 1, 1}),
                                         std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13});
  CHECK(binary.verdicts[0].representable == Verdict::kYes);
  for (std::size_t i = 1; i < binary.verdicts.size(); ++i) {
    CHECK(binary.verdicts[i].representable == Verdict::kNo);
  }

  const auto sharp = characteristic_set(multi_characteristic_spike(3),
                                        std::vector<std::uint32_t>{3, 5, 7, 11, 13});
  CHECK(sharp.agreement);
  for (const auto& v : sharp.verdicts) {
    CHECK(v.representable == Verdict::kYes);
    REQUIRE(v.witness);
    CHECK(signature(*v.witness) == signature(multi_characteristic_spike(3)));
  }

  CHECK_ERROR_CODE(characteristic_set(Diagonal(f3, {1, 1, 1}), std::vector<std::uint32_t>{101}),
                   ErrorCode::kOutOfRange);
  CHECK_ERROR_CODE(characteristic_set(Diagonal(f3, std::vector<std::uint32_t>(13, 1)),
                                      std::vector<std::uint32_t>{2}),
                   ErrorCode::kTooLarge);
}

TEST_CASE("certificate falls back when the search budget runs out") {
  const auto x = single_characteristic_spike(5);
  const auto r = characteristic_set(x, std::vector<std::uint32_t>{5, 7}, 1);
  CHECK(r.budget_exhausted);
  REQUIRE(r.certificate);
  CHECK(r.verdicts[0].method == VerdictMethod::kCertificate);
  CHECK(r.verdicts[0].representable == Verdict::kYes);
  REQUIRE(r.verdicts[0].witness);
  CHECK(signature(*r.verdicts[0].witness) == signature(x));
  CHECK(r.verdicts[1].representable == Verdict::kNo);

  const auto unknown = characteristic_set(Diagonal(make_field(7), {1, 2, 3, 4, 5, 6}),
                                          std::vector<std::uint32_t>{11}, 1);
  if (!unknown.certificate) CHECK(unknown.verdicts[0].representable == Verdict::kUnknown);
}

TEST_CASE("certificate and search agree") {
  std::mt19937_64 rng(97);
  int active = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::uint32_t p = kSmallPrimes[1 + trial % 3];
    const auto x = oracle::random_diagonal(rng, make_field(p), 3 + trial % 4);
    const auto r = characteristic_set(x, kSmallPrimes);
    CHECK(r.agreement);
    if (!r.certificate) continue;
    ++active;
    for (const auto& v : r.verdicts) {
      CHECK(r.certificate->admits(v.q) == (v.representable == Verdict::kYes));
    }
  }
  CHECK(active > 0);
}

TEST_CASE("constructions") {
  CHECK(multi_characteristic_spike(3) == Diagonal(make_field(3), {2, 2, 2, 1}));
  CHECK(multi_characteristic_spike(5) == Diagonal(make_field(5), {4, 4, 4, 4, 4, 1, 1, 1}));
  CHECK(Diagonal::from_integers(make_field(5), multi_characteristic_integers(3)) ==
        Diagonal(make_field(5), {4, 4, 4, 1}));
  CHECK_ERROR_CODE(multi_characteristic_spike(2), ErrorCode::kTooSmall);

  CHECK(single_characteristic_inverses(3) == std::vector<std::int64_t>{-1, -1, 1, -2});
  CHECK(single_characteristic_spike(3) == Diagonal(make_field(3), {2, 2, 1, 1}));
  CHECK(single_characteristic_spike(5) == Diagonal(make_field(5), {4, 4, 1, 2, 3, 1}));
  CHECK(single_characteristic_spike(7) == Diagonal(make_field(7), {6, 6, 1, 3, 4, 5}));
  CHECK(single_characteristic_spike(11).size() == 8);
  CHECK_ERROR_CODE(single_characteristic_spike(2), ErrorCode::kOutOfRange);
}

TEST_CASE("threshold interval") {
  CHECK(threshold_interval(2).lo == 3);
  CHECK(threshold_interval(2).hi == 4);
  CHECK(threshold_interval(3).lo == 3);
  CHECK(threshold_interval(3).hi == 4);
  CHECK(threshold_interval(5).lo == 3);
  CHECK(threshold_interval(5).hi == 5);
  CHECK(threshold_interval(7).lo == 4);
  CHECK(threshold_interval(7).hi == 6);
}

TEST_CASE("threshold estimates") {
  const auto two = estimate_threshold(2, std::vector<std::uint32_t>{3, 5, 7, 11, 13}, 5);
  CHECK(two.status == ThresholdStatus::kFound);
  CHECK(two.least_n == 3u);
  CHECK(two.witness == Diagonal(make_field(2), {1, 1, 1}));
  CHECK(two.certificate);
  CHECK(two.in_interval);

  const auto three = estimate_threshold(3, std::vector<std::uint32_t>{2, 5, 7, 11, 13}, 5);
  CHECK(three.status == ThresholdStatus::kFound);
  CHECK(three.least_n == 4u);
  CHECK(three.in_interval);
  REQUIRE(three.witness);
  CHECK(weakly_equivalent(*three.witness, Diagonal(make_field(3), {2, 2, 1, 1})));

  const auto none = estimate_threshold(3, std::vector<std::uint32_t>{2, 5}, 3);
  CHECK(none.status == ThresholdStatus::kNotFound);
  CHECK_FALSE(none.least_n);

  CHECK_ERROR_CODE(estimate_threshold(11, {}, 5), ErrorCode::kTooLarge);
  CHECK_ERROR_CODE(estimate_threshold(3, {}, 8), ErrorCode::kTooLarge);
  CHECK_ERROR_CODE(estimate_threshold(3, std::vector<std::uint32_t>{3}, 5),
                   ErrorCode::kOutOfRange);
}
