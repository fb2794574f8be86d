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

#include "spikelab/equivalence.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "spikelab/error.hpp"
#include "spikelab/signature.hpp"
#include "spikelab/spike_rep.hpp"

namespace spikelab {

namespace {

Diagonal swap_closed_form(const Diagonal& x, IndexSet s) {
  const auto p = x.p();
  const auto& r = x.residues();
  std::uint32_t scale = 1 % p;
  for (unsigned e : s.elements()) scale = modp::add(scale, modp::inverse(r[e - 1], p), p);
  if (scale == 0) {
    throw Error(ErrorCode::kDependentTransversal,
                "swap set is a circuit-hyperplane of the diagonal");
  }
  std::vector<std::uint32_t> y(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto v = modp::mul(r[i], scale, p);
    y[i] = s.contains(static_cast<unsigned>(i + 1)) ? modp::neg(v, p) : v;
  }
  return Diagonal(x.modulus(), std::move(y));
}

}  // namespace

Diagonal swap(const Diagonal& x, IndexSet s, SwapPath path) {
  if (!s.fits(static_cast<unsigned>(x.size()))) {
    throw Error(ErrorCode::kMismatchedShape, "swap set exceeds n");
  }
  if (s.empty()) return x;
  if (path == SwapPath::kClosedForm) return swap_closed_form(x, s);
  auto rep = change_basis_standardize(build_matrix(x), s);
  return *rep.diagonal();
}

Diagonal normalize(const Diagonal& x) {
  const auto sig = signature(x);
  const auto members = sig.members();
  if (members.empty()) {
    throw Error(ErrorCode::kNoCircuitHyperplane,
                "diagonal has no circuit-hyperplane to normalize with");
  }
  IndexSet chosen = members.front();
  for (auto m : members) {
    if (lex_less(m, chosen)) chosen = m;
  }
  const unsigned lead = chosen.min();

  // Transposition (1 lead), applied to both the diagonal and the chosen set.
  std::vector<std::size_t> perm(x.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::swap(perm[0], perm[lead - 1]);
  const Diagonal relabeled = x.permuted(perm);
  IndexSet moved;
  for (unsigned e : chosen.elements()) moved = moved.with(static_cast<unsigned>(perm[e - 1]) + 1);

  return swap(relabeled, moved.without(1));
}

Diagonal canonical_form(const Diagonal& x) {
  const std::size_t n = x.size();
  if (n > kOrbitMaxN) {
    throw Error(ErrorCode::kTooLarge, "orbit enumeration is capped at n = 7");
  }
  // Relabeling the lines permutes the entries, and the least permutation of
  // a vector is its sorted form; so the orbit minimum is the least sorted
  // swap image.
  const auto sig = signature(x);
  std::vector<std::uint32_t> best;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    const IndexSet s(bits);
    if (sig.contains(s)) continue;
    auto y = swap(x, s);
    std::vector<std::uint32_t> sorted(y.residues().begin(), y.residues().end());
    std::sort(sorted.begin(), sorted.end());
    if (best.empty() || sorted < best) best = std::move(sorted);
  }
  return Diagonal(x.modulus(), std::move(best));
}

bool weakly_equivalent(const Diagonal& x, const Diagonal& y) {
  if (x.p() != y.p() || x.size() != y.size()) {
    throw Error(ErrorCode::kMismatchedShape, "diagonals differ in p or n");
  }
  return canonical_form(x) == canonical_form(y);
}

std::vector<SpikeClass> enumerate_spikes(std::uint32_t p, std::size_t n) {
  if (n < 3) throw Error(ErrorCode::kTooSmall, "spikes need n >= 3");
  if (n > kOrbitMaxN || p > 13) {
    throw Error(ErrorCode::kTooLarge, "enumeration is capped at n <= 7, p <= 13");
  }
  const auto modulus = make_field(p);

  std::vector<std::uint64_t> factorial(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * i;

  // Walk multisets (nondecreasing vectors); each stands for
  // n! / prod(multiplicity!) labeled diagonals.
  std::map<Diagonal, std::uint64_t> classes;
  std::vector<std::uint32_t> v(n, 1);
  while (true) {
    std::uint64_t labeled = factorial[n];
    for (std::size_t i = 0; i < n;) {
      std::size_t j = i;
      while (j < n && v[j] == v[i]) ++j;
      labeled /= factorial[j - i];
      i = j;
    }
    classes[canonical_form(Diagonal(modulus, v))] += labeled;

    std::size_t pos = n;
    while (pos > 0 && v[pos - 1] == p - 1) --pos;
    if (pos == 0) break;
    const auto next = v[pos - 1] + 1;
    for (std::size_t i = pos - 1; i < n; ++i) v[i] = next;
  }

  std::vector<SpikeClass> out;
  out.reserve(classes.size());
  for (auto& [rep, size] : classes) out.push_back({rep, size});
  return out;
}

}  // namespace spikelab
