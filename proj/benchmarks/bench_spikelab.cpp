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

#include <benchmark/benchmark.h>

#include <random>

#include "spikelab/characteristic.hpp"
#include "spikelab/equivalence.hpp"
#include "spikelab/exact_matrix.hpp"
#include "spikelab/search.hpp"
#include "spikelab/signature.hpp"
#include "spikelab/spike_rep.hpp"
#include "spikelab/zero_sum.hpp"

namespace {

using namespace spikelab;

Diagonal sample_diagonal(std::uint32_t p, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(1, p - 1);
  std::vector<std::uint32_t> v(n);
  for (auto& e : v) e = pick(rng);
  return Diagonal(make_field(p), v);
}

void BM_Signature(benchmark::State& state) {
  const auto x = sample_diagonal(13, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(signature(x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Signature)->DenseRange(8, 20, 4);

void BM_FindRepOver(benchmark::State& state) {
  const auto sig = signature(sample_diagonal(5, static_cast<std::size_t>(state.range(0)), 2));
  const auto q = make_field(13);
  for (auto _ : state) benchmark::DoNotOptimize(find_rep_over(sig, q));
}
BENCHMARK(BM_FindRepOver)->Arg(6)->Arg(9)->Arg(12);

void BM_UniquenessAudit(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(uniqueness_audit(5, static_cast<std::uint32_t>(state.range(0))));
  }
}
BENCHMARK(BM_UniquenessAudit)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_BasisFamily(benchmark::State& state) {
  const auto rep = build_rep(multi_characteristic_spike(static_cast<std::uint32_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(basis_family(rep.matrix()));
}
BENCHMARK(BM_BasisFamily)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto x = sample_diagonal(7, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(x));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(3, 7, 2);

void BM_ZeroSumSubset(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto f = make_field(31);
  std::vector<std::uint32_t> a(31);
  for (auto& v : a) v = static_cast<std::uint32_t>(rng() % 31);
  for (auto _ : state) benchmark::DoNotOptimize(zero_sum_subset({f, a, 0}));
}
BENCHMARK(BM_ZeroSumSubset);

}  // namespace

BENCHMARK_MAIN();
