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

#include "spikelab/facts.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>

#include "spikelab/error.hpp"

namespace spikelab {

FactSet::FactSet(std::size_t n, std::int64_t bound, std::vector<LinearFact> facts)
    : n_(n), bound_(bound), facts_(std::move(facts)) {
  std::sort(facts_.begin(), facts_.end());
}

bool FactSet::contains(const LinearFact& fact) const {
  return std::binary_search(facts_.begin(), facts_.end(), fact);
}

std::vector<std::int64_t> FactSet::values_on(IndexSet set) const {
  std::vector<std::int64_t> out;
  auto it = std::lower_bound(facts_.begin(), facts_.end(),
                             LinearFact{set, std::numeric_limits<std::int64_t>::min()});
  for (; it != facts_.end() && it->set == set; ++it) out.push_back(it->value);
  return out;
}

std::optional<std::vector<std::int64_t>> FactSet::pinned_singletons() const {
  std::vector<std::int64_t> out;
  for (unsigned i = 1; i <= n_; ++i) {
    auto values = values_on(IndexSet{i});
    if (values.empty()) return std::nullopt;
    out.push_back(*std::min_element(values.begin(), values.end(), [](auto a, auto b) {
      return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
    }));
  }
  return out;
}

FactSet propagate_facts(const Signature& sig, std::uint32_t p) {
  const std::size_t n = sig.n();
  if (n > kFactsMaxN) throw Error(ErrorCode::kTooLarge, "fact propagation is capped at n = 16");
  const std::int64_t bound = static_cast<std::int64_t>(p) * (p - 1) / 2;

  std::vector<std::vector<std::int64_t>> values(std::size_t{1} << n);
  std::vector<std::uint32_t> known;  // sets carrying at least one value
  std::deque<LinearFact> work;

  auto add = [&](std::uint32_t set, std::int64_t value) {
    if (set == 0 || std::abs(value) > bound) return;
    auto& v = values[set];
    if (std::find(v.begin(), v.end(), value) != v.end()) return;
    if (v.empty()) known.push_back(set);
    v.push_back(value);
    work.push_back({IndexSet(set), value});
  };

  for (auto member : sig.members()) add(member.bits(), -1);

  while (!work.empty()) {
    const auto [set, c] = work.front();
    work.pop_front();
    const std::uint32_t a = set.bits();
    for (std::size_t k = 0; k < known.size(); ++k) {
      const std::uint32_t b = known[k];
      const std::size_t count = values[b].size();
      for (std::size_t t = 0; t < count; ++t) {
        const std::int64_t d = values[b][t];
        if ((a & b) == 0) {
          add(a | b, c + d);
        } else if ((a & ~b) == 0 && a != b) {
          add(b & ~a, d - c);
        } else if ((b & ~a) == 0 && a != b) {
          add(a & ~b, c - d);
        }
      }
    }
  }

  std::vector<LinearFact> facts;
  for (auto set : known) {
    for (auto v : values[set]) facts.push_back({IndexSet(set), v});
  }
  return FactSet(n, bound, std::move(facts));
}

namespace {

void add_prime_factors(std::uint64_t v, std::set<std::uint64_t>& out) {
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.insert(d);
    while (v % d == 0) v /= d;
  }
  if (v > 1) out.insert(v);
}

}  // namespace

bool Certificate::admits(std::uint64_t q) const {
  const bool listed = std::binary_search(primes.begin(), primes.end(), q);
  return cofinite ? !listed : listed;
}

Certificate certify(const Signature& sig, const std::vector<std::int64_t>& m) {
  const std::size_t n = sig.n();
  if (m.size() != n) throw Error(ErrorCode::kMismatchedShape, "one value per line required");
  Certificate cert;
  cert.singleton_values = m;

  // shifted[I] = sum_{i in I} m_i + 1
  std::vector<std::int64_t> shifted(std::size_t{1} << n, 1);
  std::uint64_t member_gcd = 0;
  std::set<std::uint64_t> must_not_divide;  // |values| that have to stay nonzero
  bool impossible = false;
  for (auto v : m) {
    if (v == 0) impossible = true;
    must_not_divide.insert(static_cast<std::uint64_t>(std::abs(v)));
  }
  for (std::uint32_t set = 1; set < shifted.size(); ++set) {
    const std::uint32_t low = set & (~set + 1);
    shifted[set] = shifted[set & ~low] + m[std::countr_zero(low)];
    const auto magnitude = static_cast<std::uint64_t>(std::abs(shifted[set]));
    if (sig.contains_bits(set)) {
      member_gcd = std::gcd(member_gcd, magnitude);
    } else if (magnitude == 0) {
      impossible = true;
    } else {
      must_not_divide.insert(magnitude);
    }
  }
  if (impossible) return cert;  // nothing qualifies

  std::set<std::uint64_t> excluded;
  for (auto v : must_not_divide) add_prime_factors(v, excluded);

  if (member_gcd == 0) {
    cert.characteristic_zero = true;
    cert.cofinite = true;
    cert.primes.assign(excluded.begin(), excluded.end());
    return cert;
  }
  std::set<std::uint64_t> candidates;
  add_prime_factors(member_gcd, candidates);
  for (auto q : candidates) {
    if (!excluded.contains(q)) cert.primes.push_back(q);
  }
  return cert;
}

std::optional<Certificate> certificate_for(const Signature& sig, std::uint32_t p) {
  const auto facts = propagate_facts(sig, p);
  const auto pinned = facts.pinned_singletons();
  if (!pinned) return std::nullopt;
  return certify(sig, *pinned);
}

}  // namespace spikelab
