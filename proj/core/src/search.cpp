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

#include "spikelab/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "spikelab/error.hpp"
#include "spikelab/parallel.hpp"

namespace spikelab {

namespace {

class RepSearcher {
 public:
  RepSearcher(const Signature& sig, PrimeModulus q, std::uint64_t budget)
      : sig_(sig),
        n_(sig.n()),
        q_(q.value()),
        target_(q.value() - 1),
        budget_(budget),
        inverse_(q.value(), 0),
        partial_(std::size_t{1} << sig.n(), 0),
        z_(sig.n(), 0),
        stamp_(sig.n(), std::vector<std::uint32_t>(q.value(), 0)),
        generation_(sig.n(), 0) {
    for (std::uint32_t v = 1; v < q_; ++v) inverse_[v] = modp::inverse(v, q_);
  }

  std::optional<std::vector<std::uint32_t>> run() {
    if (!descend(0)) return std::nullopt;
    std::vector<std::uint32_t> y(n_);
    for (std::size_t i = 0; i < n_; ++i) y[i] = inverse_[z_[i]];
    return y;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void place(std::size_t k, std::uint32_t z) {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "representation search exceeded " + std::to_string(budget_) + " nodes");
    }
    z_[k] = z;
    const std::uint32_t half = 1u << k;
    for (std::uint32_t j = 0; j < half; ++j) partial_[j | half] = modp::add(partial_[j], z, q_);
  }

  bool descend(std::size_t k) {
    if (k == n_) return true;
    const std::uint32_t half = 1u << k;

    std::uint32_t first_member = half;
    for (std::uint32_t j = 0; j < half; ++j) {
      if (sig_.contains_bits(j | half)) {
        first_member = j;
        break;
      }
    }

    if (first_member < half) {
      const auto z = modp::sub(target_, partial_[first_member], q_);
      if (z == 0) return false;
      for (std::uint32_t j = 0; j < half; ++j) {
        const bool member = sig_.contains_bits(j | half);
        const bool hits = modp::add(partial_[j], z, q_) == target_;
        if (member != hits) return false;
      }
      place(k, z);
      return descend(k + 1);
    }

    const std::uint32_t gen = ++generation_[k];
    auto& forbidden = stamp_[k];
    for (std::uint32_t j = 0; j < half; ++j) {
      forbidden[modp::sub(target_, partial_[j], q_)] = gen;
    }
    for (std::uint32_t y = 1; y < q_; ++y) {
      const auto z = inverse_[y];
      if (forbidden[z] == gen) continue;
      place(k, z);
      if (descend(k + 1)) return true;
    }
    return false;
  }

  const Signature& sig_;
  std::size_t n_;
  std::uint32_t q_;
  std::uint32_t target_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> partial_;  // subset sums of z over assigned prefix
  std::vector<std::uint32_t> z_;
  std::vector<std::vector<std::uint32_t>> stamp_;
  std::vector<std::uint32_t> generation_;
};

}  // namespace

RepSearch find_rep_over(const Signature& sig, PrimeModulus q, std::uint64_t node_budget) {
  if (sig.n() > kSearchMaxN) {
    throw Error(ErrorCode::kTooLarge, "representation search is capped at n = 12");
  }
  if (sig.n() == 0) throw Error(ErrorCode::kTooSmall, "empty signature ground set");
  RepSearcher searcher(sig, q, node_budget);
  RepSearch out;
  if (auto y = searcher.run()) out.witness.emplace(q, std::move(*y));
  out.nodes = searcher.nodes();
  return out;
}

UniquenessReport uniqueness_audit(std::uint32_t p, std::uint32_t n, std::uint64_t budget) {
  const auto start = std::chrono::steady_clock::now();
  const auto modulus = make_field(p);
  if (n == 0) throw Error(ErrorCode::kTooSmall, "n must be positive");
  if (n > kSignatureMaxN) throw Error(ErrorCode::kTooLarge, "n exceeds the signature cap");

  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    count *= p - 1;
    if (count > budget) break;
  }
  const std::uint64_t subsets = std::uint64_t{1} << n;
  if (count > budget || count * subsets > budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "(p-1)^n 2^n exceeds " + std::to_string(budget));
  }

  const std::size_t words = n >= 6 ? subsets / 64 : 1;
  std::vector<std::uint64_t> table(count * words, 0);
  const std::uint32_t width = p - 1;

  auto decode = [&](std::uint64_t idx) {
    std::vector<std::uint32_t> x(n);
    for (std::uint32_t i = n; i-- > 0;) {
      x[i] = static_cast<std::uint32_t>(idx % width) + 1;
      idx /= width;
    }
    return x;
  };

  parallel_chunks(count, [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
    if (begin >= end) return;
    std::vector<std::uint32_t> x = decode(begin);
    std::vector<std::uint32_t> z(n);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      for (std::uint32_t i = 0; i < n; ++i) z[i] = modp::inverse(x[i], p);
      signature_bits(z, p, std::span<std::uint64_t>(&table[idx * words], words));
      for (std::uint32_t i = n; i-- > 0;) {
        if (++x[i] <= width) break;
        x[i] = 1;
      }
    }
  });

  std::vector<std::uint64_t> order(count);
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  auto less = [&](std::uint64_t a, std::uint64_t b) {
    const auto* wa = &table[a * words];
    const auto* wb = &table[b * words];
    const auto c = std::lexicographical_compare_three_way(wa, wa + words, wb, wb + words);
    return c != 0 ? c < 0 : a < b;
  };
  std::sort(order.begin(), order.end(), less);

  UniquenessReport report;
  report.p = p;
  report.n = n;
  report.diagonals = count;
  std::vector<std::vector<std::uint64_t>> groups;
  for (std::uint64_t i = 0; i < count;) {
    std::uint64_t j = i + 1;
    while (j < count && std::equal(&table[order[i] * words], &table[order[i] * words] + words,
                                   &table[order[j] * words])) {
      ++j;
    }
    ++report.distinct;
    if (j - i > 1) groups.emplace_back(order.begin() + i, order.begin() + j);
    i = j;
  }
  report.collisions = report.diagonals - report.distinct;

  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t g = 0; g < groups.size() && g < kReportedCollisionGroups; ++g) {
    CollisionGroup group;
    const auto first = groups[g].front();
    group.signature_hex = Signature::from_words(
        n, std::vector<std::uint64_t>(&table[first * words], &table[first * words] + words))
                              .to_hex();
    for (auto idx : groups[g]) group.diagonals.emplace_back(modulus, decode(idx));
    report.groups.push_back(std::move(group));
  }
  report.ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return report;
}

}  // namespace spikelab
