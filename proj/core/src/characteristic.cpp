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

#include "spikelab/characteristic.hpp"

#include <algorithm>
#include <bit>

#include "spikelab/equivalence.hpp"
#include "spikelab/error.hpp"
#include "spikelab/parallel.hpp"
#include "spikelab/signature.hpp"

namespace spikelab {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kUnknown: return "unknown";
  }
  return "?";
}

std::string_view to_string(VerdictMethod m) noexcept {
  return m == VerdictMethod::kCertificate ? "certificate" : "exhaustive-search";
}

std::string_view to_string(ThresholdStatus s) noexcept {
  switch (s) {
    case ThresholdStatus::kFound: return "found";
    case ThresholdStatus::kInconclusive: return "inconclusive";
    case ThresholdStatus::kNotFound: return "not_found";
  }
  return "?";
}

CharacteristicReport characteristic_set(const Diagonal& x, std::span<const std::uint32_t> primes,
                                        std::uint64_t node_budget) {
  if (x.size() > kSearchMaxN) {
    throw Error(ErrorCode::kTooLarge, "characteristic scans are capped at n = 12");
  }
  std::vector<PrimeModulus> fields;
  for (auto q : primes) {
    if (q > kCharacteristicMaxPrime) throw Error(ErrorCode::kOutOfRange, "primes must be <= 97");
    fields.push_back(make_field(q));
  }

  const auto sig = signature(x);
  CharacteristicReport report;
  if (x.size() <= kFactsMaxN) report.certificate = certificate_for(sig, x.p());

  std::vector<CharVerdict> verdicts(fields.size());
  std::vector<std::uint64_t> nodes(fields.size(), 0);
  parallel_chunks(fields.size(), [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
    for (auto i = begin; i < end; ++i) {
      auto& v = verdicts[i];
      v.q = fields[i].value();
      try {
        auto found = find_rep_over(sig, fields[i], node_budget);
        nodes[i] = found.nodes;
        v.representable = found.witness ? Verdict::kYes : Verdict::kNo;
        v.witness = std::move(found.witness);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kBudgetExceeded) throw;
        nodes[i] = node_budget;
        v.representable = Verdict::kUnknown;
      }
    }
  });

  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    auto& v = verdicts[i];
    report.nodes_visited += nodes[i];
    if (v.representable == Verdict::kUnknown) {
      report.budget_exhausted = true;
      if (report.certificate) {
        v.method = VerdictMethod::kCertificate;
        if (report.certificate->admits(v.q)) {
          v.representable = Verdict::kYes;
          v.witness = Diagonal::from_inverse_integers(fields[i],
                                                      report.certificate->singleton_values);
        } else {
          v.representable = Verdict::kNo;
        }
      }
    } else if (report.certificate &&
               report.certificate->admits(v.q) != (v.representable == Verdict::kYes)) {
      report.agreement = false;
    }
  }
  report.verdicts = std::move(verdicts);
  return report;
}

std::vector<std::int64_t> multi_characteristic_integers(std::uint32_t p) {
  make_field(p);
  if (p < 3) throw Error(ErrorCode::kTooSmall, "the construction needs p >= 3");
  std::vector<std::int64_t> out(p, -1);
  out.resize(2 * p - 2, 1);
  return out;
}

Diagonal multi_characteristic_spike(std::uint32_t p) {
  return Diagonal::from_integers(make_field(p), multi_characteristic_integers(p));
}

std::vector<std::int64_t> single_characteristic_inverses(std::uint32_t p) {
  make_field(p);
  if (p == 2) throw Error(ErrorCode::kOutOfRange, "the construction needs an odd prime");
  const unsigned k = std::bit_width(p) - 1;
  std::vector<std::int64_t> out{-1};
  for (unsigned i = 1; i <= k; ++i) {
    const std::int64_t power = std::int64_t{1} << (i - 1);
    out.push_back(-power);
    out.push_back(power);
  }
  out.push_back(-(std::int64_t{1} << k));
  return out;
}

Diagonal single_characteristic_spike(std::uint32_t p) {
  return Diagonal::from_inverse_integers(make_field(p), single_characteristic_inverses(p));
}

Interval threshold_interval(std::uint32_t p) {
  const std::uint64_t m = std::uint64_t{p} + 2;
  const std::size_t k = std::bit_width(m) - 1;  // floor(log2(p+2))
  // floor(log2(4m/3)) is the largest j with 3 * 2^j <= 4m.
  std::size_t j = 0;
  while (3 * (std::uint64_t{1} << (j + 1)) <= 4 * m) ++j;
  return {k + 1, k + j};
}

ThresholdReport estimate_threshold(std::uint32_t p, std::span<const std::uint32_t> primes,
                                   std::size_t n_max, std::uint64_t node_budget) {
  make_field(p);
  if (p > 7) throw Error(ErrorCode::kTooLarge, "threshold scans are capped at p = 7");
  if (n_max < 3) throw Error(ErrorCode::kTooSmall, "n_max must be at least 3");
  if (n_max > 7) throw Error(ErrorCode::kTooLarge, "threshold scans are capped at n = 7");

  ThresholdReport report;
  report.p = p;
  report.n_max = n_max;
  if (primes.empty()) {
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
      if (q != p) report.primes.push_back(q);
    }
  } else {
    for (auto q : primes) {
      make_field(q);
      if (q == p) throw Error(ErrorCode::kOutOfRange, "the comparison primes must exclude p");
      report.primes.push_back(q);
    }
  }
  report.interval = threshold_interval(p);

  for (std::size_t n = 3; n <= n_max; ++n) {
    std::optional<Diagonal> unproven;
    for (const auto& cls : enumerate_spikes(p, n)) {
      ++report.classes_scanned;
      const auto sig = signature(cls.representative);
      if (auto cert = certificate_for(sig, p)) {
        const bool only_p = cert->admits(p) &&
                            std::none_of(report.primes.begin(), report.primes.end(),
                                         [&](auto q) { return cert->admits(q); });
        if (only_p) {
          report.status = ThresholdStatus::kFound;
          report.least_n = n;
          report.witness = cls.representative;
          report.certificate = std::move(cert);
          report.in_interval = report.interval.contains(n);
          return report;
        }
        continue;
      }
      if (unproven) continue;
      bool elsewhere = false;
      for (auto q : report.primes) {
        const auto found = find_rep_over(sig, make_field(q), node_budget);
        report.nodes_visited += found.nodes;
        if (found.witness) {
          elsewhere = true;
          break;
        }
      }
      if (!elsewhere) unproven = cls.representative;
    }
    if (unproven) {
      report.status = ThresholdStatus::kInconclusive;
      report.least_n = n;
      report.witness = std::move(unproven);
      report.in_interval = report.interval.contains(n);
      return report;
    }
  }
  return report;
}

}  // namespace spikelab
