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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails or overruns its time limit.

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "cli.hpp"
#include "oracles.hpp"
#include "spikelab/characteristic.hpp"
#include "spikelab/equivalence.hpp"
#include "spikelab/error.hpp"
#include "spikelab/exact_matrix.hpp"
#include "spikelab/parallel.hpp"
#include "spikelab/search.hpp"
#include "spikelab/zero_sum.hpp"

using namespace spikelab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> body;
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

Outcome determinant_identity() {
  std::mt19937_64 rng(1);
  std::uint64_t cases = 0, mismatches = 0;
  for (std::int64_t p : {3, 5, 7, 11}) {
    const auto f = make_field(p);
    for (int trial = 0; trial < 700; ++trial) {
      const auto x = oracle::random_diagonal(rng, f, 1 + trial % 7);
      const auto elems = x.elements();
      ++cases;
      if (spike_det(elems) != det(ones_plus_diagonal(elems))) ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(cases) + " diagonals, " + std::to_string(mismatches) +
                               " mismatches"};
}

Outcome lemma_sweep(bool zero_sum) {
  struct Case {
    std::uint32_t p, n;
  };
  const std::vector<Case> cases = zero_sum ? std::vector<Case>{{3, 3}, {5, 5}, {7, 7}}
                                           : std::vector<Case>{{3, 2}, {5, 4}, {7, 6}};
  Outcome out;
  std::vector<std::string> parts;
  for (auto [p, n] : cases) {
    const auto r = zero_sum ? verify_zero_sum_bound(p, n) : verify_subset_sum_bound(p, n);
    out.ok = out.ok && r.failures.empty();
    parts.push_back("(" + std::to_string(p) + "," + std::to_string(n) + "): " +
                    std::to_string(r.checked) + " checked, " +
                    std::to_string(r.failures.size()) + " failures");
  }
  out.detail = join(parts);
  return out;
}

// Signature against the rank oracle, plus circuit-hyperplane checks.
bool correspondence_holds(const Diagonal& x) {
  const auto sig = signature(x);
  if (sig != oracle::rank_dependent_transversals(x)) return false;
  const std::size_t n = x.size();
  const auto rep = build_matrix(x);
  for (auto member : sig.members()) {
    const auto labels = circuit_hyperplane(x, member);
    if (oracle::rank_of_labels(rep, labels) != n - 1) return false;
    for (std::size_t drop = 0; drop < n; ++drop) {
      auto rest = labels;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
      if (oracle::rank_of_labels(rep, rest) != n - 1) return false;
    }
  }
  return true;
}

Outcome correspondence() {
  std::uint64_t checked = 0, mismatches = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& x : oracle::all_diagonals(make_field(3), n)) {
      ++checked;
      if (!correspondence_holds(x)) ++mismatches;
    }
  }
  std::mt19937_64 rng(4);
  for (std::int64_t p : {5, 7}) {
    for (int trial = 0; trial < 120; ++trial) {
      ++checked;
      if (!correspondence_holds(oracle::random_diagonal(rng, make_field(p), 1 + trial % 8))) {
        ++mismatches;
      }
    }
  }
  return {mismatches == 0, std::to_string(checked) + " diagonals, " + std::to_string(mismatches) +
                               " mismatches"};
}

bool swap_laws_hold(const Diagonal& x, IndexSet s, const std::vector<std::size_t>& perm) {
  const auto sig = signature(x);
  const auto y = swap(x, s);
  if (swap(x, s, SwapPath::kMatrix) != y) return false;
  if (swap(y, s) != x) return false;
  if (signature(y) != sig.transformed(s)) return false;
  if (signature(x.permuted(perm)) != sig.permuted(perm)) return false;
  std::vector<unsigned> moved;
  for (unsigned e : s.elements()) moved.push_back(static_cast<unsigned>(perm[e - 1] + 1));
  return swap(x.permuted(perm), IndexSet::from_elements(moved)) == y.permuted(perm);
}

bool normalize_ok(const Diagonal& x) {
  if (signature(x).empty()) return true;
  const auto y = normalize(x);
  return inv(y[0]).value() == x.p() - 1 && (x.size() > kOrbitMaxN || weakly_equivalent(x, y));
}

Outcome swap_calculus() {
  std::uint64_t cases = 0, failures = 0, normalized = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& x : oracle::all_diagonals(make_field(3), n)) {
      const auto sig = signature(x);
      std::vector<std::size_t> perm(n);
      std::iota(perm.rbegin(), perm.rend(), std::size_t{0});
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        if (sig.contains_bits(bits)) continue;
        ++cases;
        if (!swap_laws_hold(x, IndexSet(bits), perm)) ++failures;
      }
      ++normalized;
      if (!normalize_ok(x)) ++failures;
    }
  }
  std::mt19937_64 rng(5);
  std::uint64_t random_cases = 0;
  while (random_cases < 600) {
    const std::uint32_t p = std::vector<std::uint32_t>{5, 7, 11}[random_cases % 3];
    const std::size_t n = 3 + random_cases % 6;
    const auto x = oracle::random_diagonal(rng, make_field(p), n);
    const IndexSet s(static_cast<std::uint32_t>(rng() % (1u << n)));
    if (signature(x).contains(s)) continue;
    ++random_cases;
    if (!swap_laws_hold(x, s, oracle::random_permutation(rng, n))) ++failures;
    if (n + 1 >= p) {
      ++normalized;
      if (!normalize_ok(x)) ++failures;
    }
  }
  return {failures == 0, std::to_string(cases) + " exhaustive + " + std::to_string(random_cases) +
                             " random swap cases, " + std::to_string(normalized) +
                             " normalizations, " + std::to_string(failures) + " failures"};
}

Outcome uniqueness() {
  Outcome out;
  std::vector<std::string> parts;
  for (auto [p, n] : {std::pair{3u, 5u}, std::pair{3u, 6u}, std::pair{5u, 9u}}) {
    const auto r = uniqueness_audit(p, n);
    out.ok = out.ok && r.collisions == 0;
    parts.push_back("(" + std::to_string(p) + "," + std::to_string(n) + "): " +
                    std::to_string(r.diagonals) + " diagonals, " + std::to_string(r.collisions) +
                    " collisions");
  }
  out.detail = join(parts);
  return out;
}

// Searches every (diagonal, q) pair in parallel; counts representations found.
struct SweepResult {
  std::uint64_t searches = 0;
  std::uint64_t found = 0;
  bool budget_hit = false;
};

SweepResult sweep(const std::vector<Diagonal>& xs, const std::vector<std::uint32_t>& qs) {
  std::atomic<std::uint64_t> found{0};
  std::atomic<bool> budget_hit{false};
  const std::uint64_t total = xs.size() * qs.size();
  parallel_chunks(total, [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
    for (auto i = begin; i < end; ++i) {
      const auto& x = xs[i / qs.size()];
      try {
        if (find_rep_over(signature(x), make_field(qs[i % qs.size()])).witness) ++found;
      } catch (const spikelab::Error& e) {
        if (e.code() != ErrorCode::kBudgetExceeded) throw;
        budget_hit = true;
      }
    }
  });
  return {total, found.load(), budget_hit.load()};
}

Outcome characteristic_restriction() {
  Outcome out;
  std::vector<std::string> parts;
  auto record = [&](const std::string& label, const SweepResult& r) {
    out.ok = out.ok && r.found == 0 && !r.budget_hit;
    parts.push_back(label + ": " + std::to_string(r.searches) + " searches, " +
                    std::to_string(r.found) + " representations" +
                    (r.budget_hit ? ", budget exhausted" : ""));
  };
  record("p=3 n=5", sweep(oracle::all_diagonals(make_field(3), 5), {2, 5, 7, 11, 13}));
  for (std::size_t n : {4, 5}) {
    record("p=2 n=" + std::to_string(n), sweep(oracle::all_diagonals(make_field(2), n), {3, 5, 7}));
  }
  std::mt19937_64 rng(7);
  std::vector<Diagonal> sampled;
  for (int i = 0; i < 60; ++i) sampled.push_back(oracle::random_diagonal(rng, make_field(5), 9));
  record("p=5 n=9 (60 sampled)", sweep(sampled, {2, 3, 7, 11, 13}));
  out.detail = join(parts);
  return out;
}

std::vector<std::uint32_t> primes_from(std::uint32_t p, std::size_t count) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = p; out.size() < count; ++q) {
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

Outcome sharpness() {
  Outcome out;
  std::vector<std::string> parts;
  for (std::uint32_t p : {3u, 5u}) {
    const auto integers = multi_characteristic_integers(p);
    std::optional<BasisFamily> reference;
    for (auto q : primes_from(p, 3)) {
      const auto rep = build_rep(Diagonal::from_integers(make_field(q), integers));
      const auto fam = basis_family(rep.matrix());
      const bool axioms = check_axioms(rep);
      if (!reference) reference = fam;
      const bool same = fam == *reference;
      out.ok = out.ok && same && axioms;
      parts.push_back("p=" + std::to_string(p) + " q=" + std::to_string(q) + ": " +
                      std::to_string(fam.members.size()) + " bases" + (same ? "" : " (differs)") +
                      (axioms ? "" : " (axioms fail)"));
    }
  }
  out.detail = join(parts);
  return out;
}

Outcome single_characteristic() {
  Outcome out;
  std::vector<std::string> parts;
  const std::vector<std::uint32_t> primes{2, 3, 5, 7, 11, 13};
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto x = single_characteristic_spike(p);
    const auto r = characteristic_set(x, primes);
    const bool exact = r.certificate && !r.certificate->cofinite &&
                       !r.certificate->characteristic_zero &&
                       r.certificate->primes == std::vector<std::uint64_t>{p};
    bool verdicts_ok = !r.budget_exhausted && r.agreement;
    for (const auto& v : r.verdicts) {
      verdicts_ok = verdicts_ok && v.method == VerdictMethod::kExhaustiveSearch &&
                    (v.representable == Verdict::kYes) == (v.q == p);
    }
    out.ok = out.ok && exact && verdicts_ok;
    parts.push_back("p=" + std::to_string(p) + " n=" + std::to_string(x.size()) +
                    (exact ? ": certificate {p}" : ": certificate not exact") +
                    (verdicts_ok ? ", search agrees" : ", search disagrees"));
  }
  out.detail = join(parts);
  return out;
}

Outcome threshold() {
  Outcome out;
  std::vector<std::string> parts;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto r = estimate_threshold(p, {}, 5);
    bool ok = r.status == ThresholdStatus::kFound && r.certificate && r.in_interval;
    if (p == 2) ok = ok && r.least_n == 3u;
    out.ok = out.ok && ok;
    parts.push_back("p=" + std::to_string(p) + ": " + std::string(to_string(r.status)) +
                    (r.least_n ? " n=" + std::to_string(*r.least_n) : "") + " interval [" +
                    std::to_string(r.interval.lo) + "," + std::to_string(r.interval.hi) + "]" +
                    (r.witness ? " witness " + r.witness->to_text() : ""));
  }
  out.detail = join(parts);
  return out;
}

// Path of the spike-lab executable; when set, criterion 11 also runs each
// subcommand as a separate process.
std::string g_executable;

std::string strip_timing(const std::string& text) {
  auto j = nlohmann::ordered_json::parse(text);
  j.erase("timing");
  return j.dump();
}

std::string cli_payload(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return strip_timing(out.str());
}

std::string process_payload(const std::vector<std::string>& args, int& code) {
  std::string command = "'" + g_executable + "'";
  for (const auto& a : args) command += " '" + a + "'";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot start " + g_executable);
  std::string text;
  char buf[4096];
  for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;) text.append(buf, got);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return strip_timing(text);
}

Outcome cli_determinism() {
  const std::vector<std::vector<std::string>> commands{
      {"axioms", "--diag", "p=3;x=2,2,2,1"},
      {"signature", "--diag", "p=3;x=2,2,1,1"},
      {"normalize", "--diag", "p=5;x=1,2,3,4"},
      {"canonical", "--diag", "p=5;x=1,2,3,4"},
      {"enumerate", "--p", "5", "--n", "4"},
      {"lemma21", "--p", "5", "--n", "4"},
      {"lemma22", "--p", "5", "--n", "5"},
      {"detcheck", "--p", "7", "--n", "6"},
      {"unique", "--p", "5", "--n", "5"},
      {"transfer", "--diag", "p=7;x=1,2,3,4,5,6"},
      {"charset", "--diag", "p=3;x=2,2,1,1", "--primes", "2,5,7,11,13"},
      {"construct", "prop41", "--p", "5"},
      {"construct", "prop43", "--p", "7"},
      {"lbound", "--p", "3"},
  };
  std::vector<std::string> broken;
  for (const auto& args : commands) {
    int first_code = 0, second_code = 0;
    const auto first = cli_payload(args, first_code);
    const auto second = cli_payload(args, second_code);
    bool same = first == second && first_code == second_code && first_code == 0;
    if (!g_executable.empty()) {
      int a = 0, b = 0;
      const auto run_a = process_payload(args, a);
      const auto run_b = process_payload(args, b);
      same = same && run_a == run_b && run_a == first && a == 0 && b == 0;
    }
    if (!same) broken.push_back(args[0] + (args[0] == "construct" ? " " + args[1] : ""));
  }
  return {broken.empty(), std::to_string(commands.size()) + " subcommands" +
                              (g_executable.empty() ? " in-process" : " in-process and as processes") +
                              (broken.empty() ? ", identical payloads" : ", differing: " + join(broken))};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_executable = argv[1];
  const std::vector<Criterion> criteria{
      {1, "determinant identity", 5, determinant_identity},
      {2, "subset-sum bound, exhaustive", 60, [] { return lemma_sweep(false); }},
      {3, "zero-sum bound, exhaustive", 60, [] { return lemma_sweep(true); }},
      {4, "circuit-hyperplane correspondence", 60, correspondence},
      {5, "swap calculus and normalization", 30, swap_calculus},
      {6, "signature injectivity", 120, uniqueness},
      {7, "characteristic restriction", 180, characteristic_restriction},
      {8, "multi-characteristic sharpness", 30, sharpness},
      {9, "single-characteristic construction", 60, single_characteristic},
      {10, "threshold experiment", 180, threshold},
      {11, "CLI determinism", 120, cli_determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = s <= c.limit_s;
    const bool pass = o.ok && in_time;
    if (!pass) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", s, c.limit_s);
    std::cout << (pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << "  (" << timing
              << (in_time ? "" : ", over time limit") << ")  " << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
