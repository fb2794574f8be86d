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

#include "spikelab/zero_sum.hpp"

#include <chrono>
#include <optional>

#include "spikelab/error.hpp"
#include "spikelab/parallel.hpp"

namespace spikelab {

namespace {

// reach[i * p + s] == 1 iff some (possibly empty) subset of positions
// i..n-1 sums to s.
class SuffixReach {
 public:
  SuffixReach(const std::vector<std::uint32_t>& a, std::uint32_t p)
      : n_(a.size()), p_(p), reach_((n_ + 1) * p, 0) {
    reach_[n_ * p] = 1;
    for (std::size_t i = n_; i-- > 0;) {
      const std::uint8_t* next = &reach_[(i + 1) * p];
      std::uint8_t* cur = &reach_[i * p];
      for (std::uint32_t s = 0; s < p; ++s) {
        cur[s] = next[s] | next[modp::sub(s, a[i], p)];
      }
    }
  }

  bool reachable_from(std::size_t i, std::uint32_t s) const {
    return reach_[i * p_ + s] != 0;
  }

 private:
  std::size_t n_;
  std::uint32_t p_;
  std::vector<std::uint8_t> reach_;
};

// Greedy walk over the table: the next element is the smallest index whose
// inclusion still leaves the remainder reachable from later positions, and
// the walk stops as soon as the remainder is 0 (a prefix precedes all of its
// extensions).
std::optional<IndexSet> least_witness(const std::vector<std::uint32_t>& a,
                                      std::uint32_t p, std::uint32_t target) {
  const SuffixReach reach(a, p);
  IndexSet chosen;
  std::uint32_t rem = target;
  std::size_t pos = 0;
  while (chosen.empty() || rem != 0) {
    bool advanced = false;
    for (std::size_t j = pos; j < a.size(); ++j) {
      const auto after = modp::sub(rem, a[j], p);
      if (reach.reachable_from(j + 1, after)) {
        chosen = chosen.with(static_cast<unsigned>(j + 1));
        rem = after;
        pos = j + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return std::nullopt;
  }
  return chosen;
}

void check_instance(const ZeroSumInstance& inst) {
  if (inst.a.size() > 32) {
    throw Error(ErrorCode::kTooLarge, "instances are limited to 32 terms");
  }
  for (auto v : inst.a) {
    if (v >= inst.modulus.value()) {
      throw Error(ErrorCode::kOutOfRange, "term is not a residue");
    }
  }
}

void verify_sum(const ZeroSumInstance& inst, IndexSet witness, std::uint32_t target) {
  const auto p = inst.modulus.value();
  std::uint32_t sum = 0;
  for (unsigned e : witness.elements()) sum = modp::add(sum, inst.a[e - 1], p);
  if (witness.empty() || sum != target) {
    throw std::logic_error("witness does not attain its target");
  }
}

}  // namespace

IndexSet subset_with_sum(const ZeroSumInstance& inst) {
  check_instance(inst);
  const auto p = inst.modulus.value();
  for (auto v : inst.a) {
    if (v == 0) throw Error(ErrorCode::kZeroEntry, "subset-sum terms must be nonzero");
  }
  const auto k = inst.target % p;
  if (k == 0) throw Error(ErrorCode::kZeroEntry, "subset-sum target must be nonzero");
  auto witness = least_witness(inst.a, p, k);
  if (!witness) {
    throw Error(ErrorCode::kNoWitness,
                "no subset attains " + std::to_string(k) + " mod " + std::to_string(p));
  }
  verify_sum(inst, *witness, k);
  return *witness;
}

IndexSet zero_sum_subset(const ZeroSumInstance& inst) {
  check_instance(inst);
  const auto p = inst.modulus.value();
  auto witness = least_witness(inst.a, p, 0);
  if (!witness) throw Error(ErrorCode::kNoWitness, "no nonempty zero-sum subset");
  verify_sum(inst, *witness, 0);
  return *witness;
}

namespace {

std::uint64_t checked_power(std::uint64_t base, std::uint32_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

// Visits every tuple over the alphabet {lo, ..., lo + width - 1}^n with
// index in [begin, end), in odometer order (last position fastest).
template <typename Visit>
void for_each_tuple(std::uint32_t n, std::uint32_t lo, std::uint32_t width,
                    std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  if (begin >= end) return;
  std::vector<std::uint32_t> digits(n);
  std::uint64_t idx = begin;
  for (std::uint32_t i = n; i-- > 0;) {
    digits[i] = static_cast<std::uint32_t>(idx % width);
    idx /= width;
  }
  std::vector<std::uint32_t> tuple(n);
  for (std::uint64_t t = begin; t < end; ++t) {
    for (std::uint32_t i = 0; i < n; ++i) tuple[i] = lo + digits[i];
    visit(tuple);
    for (std::uint32_t i = n; i-- > 0;) {
      if (++digits[i] < width) break;
      digits[i] = 0;
    }
  }
}

template <typename CheckTuple>
LemmaReport run_verifier(std::string lemma, std::uint32_t p, std::uint32_t n,
                         std::uint32_t lo, std::uint64_t tuples,
                         std::uint64_t checks_per_tuple, CheckTuple&& check) {
  const auto start = std::chrono::steady_clock::now();
  LemmaReport report;
  report.lemma = std::move(lemma);
  report.p = p;
  report.n = n;
  std::vector<std::vector<SubsetSumFailure>> failures(planned_chunks(tuples));
  parallel_chunks(tuples, [&](std::uint64_t begin, std::uint64_t end, std::size_t chunk) {
    for_each_tuple(n, lo, p - lo, begin, end,
                   [&](const std::vector<std::uint32_t>& a) { check(a, failures[chunk]); });
  });
  for (auto& part : failures) {
    for (auto& f : part) report.failures.push_back(std::move(f));
  }
  report.checked = tuples * checks_per_tuple;
  report.ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return report;
}

}  // namespace

LemmaReport verify_subset_sum_bound(std::uint32_t p, std::uint32_t n) {
  const auto modulus = make_field(p);
  if (n + 1 < p) throw Error(ErrorCode::kTooSmall, "the bound needs n >= p - 1");
  if (n > 32) throw Error(ErrorCode::kTooLarge, "at most 32 terms");
  const std::uint64_t tuples = checked_power(p - 1, n, kVerifierBudget);
  if (tuples > kVerifierBudget / (p - 1)) {
    throw Error(ErrorCode::kBudgetExceeded,
                "(p-1)^n (p-1) exceeds " + std::to_string(kVerifierBudget));
  }
  return run_verifier(
      "subset_with_sum", p, n, 1, tuples, p - 1,
      [&](const std::vector<std::uint32_t>& a, std::vector<SubsetSumFailure>& out) {
        for (std::uint32_t k = 1; k < p; ++k) {
          try {
            subset_with_sum({modulus, a, k});
          } catch (const Error&) {
            out.push_back({a, k});
          }
        }
      });
}

LemmaReport verify_zero_sum_bound(std::uint32_t p, std::uint32_t n) {
  const auto modulus = make_field(p);
  if (n < p) throw Error(ErrorCode::kTooSmall, "the bound needs n >= p");
  if (n > 32) throw Error(ErrorCode::kTooLarge, "at most 32 terms");
  const std::uint64_t tuples = checked_power(p, n, kVerifierBudget);
  if (tuples > kVerifierBudget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "p^n exceeds " + std::to_string(kVerifierBudget));
  }
  return run_verifier(
      "zero_sum_subset", p, n, 0, tuples, 1,
      [&](const std::vector<std::uint32_t>& a, std::vector<SubsetSumFailure>& out) {
        try {
          zero_sum_subset({modulus, a, 0});
        } catch (const Error&) {
          out.push_back({a, 0});
        }
      });
}

}  // namespace spikelab
