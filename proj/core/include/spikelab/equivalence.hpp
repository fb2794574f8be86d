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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spikelab/diagonal.hpp"
#include "spikelab/index_set.hpp"

namespace spikelab {

enum class SwapPath {
  kClosedForm,  // y_i = -x_i * s for i in S, x_i * s otherwise, s = 1 + sum_S x_i^-1
  kMatrix,      // change_basis_standardize on the explicit representation
};

/// Diagonal of the special standard representation whose distinguished basis
/// takes f_i for i in S. Throws DependentTransversal when S is a
/// circuit-hyperplane (S nonempty and sum_S x_i^-1 = -1).
Diagonal swap(const Diagonal& x, IndexSet s, SwapPath path = SwapPath::kClosedForm);

/// A weakly equivalent diagonal whose first entry is -1: take the
/// lexicographically least circuit-hyperplane I, move min(I) to line 1, and
/// swap the rest of I. Throws NoCircuitHyperplane if the signature is empty.
Diagonal normalize(const Diagonal& x);

inline constexpr std::size_t kOrbitMaxN = 7;

/// Least diagonal (residue order 1 < ... < p-1) over all valid swaps
/// followed by all relabelings of the lines. Throws TooLarge past kOrbitMaxN.
Diagonal canonical_form(const Diagonal& x);

/// Throws MismatchedShape when p or n differ.
bool weakly_equivalent(const Diagonal& x, const Diagonal& y);

struct SpikeClass {
  Diagonal representative;   // canonical form
  std::uint64_t orbit_size;  // labeled diagonals in the class
};

/// One canonical representative per weak-equivalence class of
/// (GF(p)^*)^n, sorted ascending. Requires 3 <= n <= 7 and p <= 13.
std::vector<SpikeClass> enumerate_spikes(std::uint32_t p, std::size_t n);

}  // namespace spikelab
