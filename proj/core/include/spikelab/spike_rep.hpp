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
#include <optional>
#include <string>
#include <vector>

#include "spikelab/diagonal.hpp"
#include "spikelab/exact_matrix.hpp"
#include "spikelab/index_set.hpp"

namespace spikelab {

/// Name of a spike element: e_i (distinguished basis), t (tip), f_i (the
/// conjugate of e_i). Lines are numbered from 1; the tip has line 0.
struct ColumnLabel {
  enum class Role : std::uint8_t { kBasis, kTip, kConjugate };

  Role role = Role::kTip;
  unsigned line = 0;

  static ColumnLabel basis(unsigned i) { return {Role::kBasis, i}; }
  static ColumnLabel tip() { return {Role::kTip, 0}; }
  static ColumnLabel conjugate(unsigned i) { return {Role::kConjugate, i}; }

  std::string to_string() const;

  friend bool operator==(const ColumnLabel&, const ColumnLabel&) = default;
};

/// An n x (2n+1) matrix with labeled columns. Laid out in special standard
/// form when built by build_rep: identity at columns 0..n-1, all-ones tip at
/// column n, t + x_i e_i at column n+i. The labels travel with the columns
/// through change_basis_standardize.
class SpikeRep {
 public:
  SpikeRep(MatrixGF matrix, std::vector<ColumnLabel> labels);

  std::size_t n() const noexcept { return matrix_.rows(); }
  const MatrixGF& matrix() const noexcept { return matrix_; }
  const std::vector<ColumnLabel>& labels() const noexcept { return labels_; }

  /// Column holding the given element; throws MismatchedShape if absent.
  std::size_t column_of(const ColumnLabel& label) const;

  /// True iff the matrix matches the special standard pattern exactly.
  bool is_special_standard() const;
  /// Reads x_i = M[i][n+1+i] - 1 off a special standard matrix; empty if the
  /// pattern does not hold.
  std::optional<Diagonal> diagonal() const;

  friend bool operator==(const SpikeRep&, const SpikeRep&) = default;

 private:
  MatrixGF matrix_;
  std::vector<ColumnLabel> labels_;
};

/// Throws TooSmall for n < 3.
SpikeRep build_rep(const Diagonal& x);
/// Same layout without the n >= 3 requirement, for diagonal-level checks.
SpikeRep build_matrix(const Diagonal& x);

/// Spike conditions via the rank oracle: every line {e_i, t, f_i} has rank 2
/// with pairwise non-parallel points, every union of k < n lines has rank
/// k + 1, and all lines together have rank n. False for n < 3.
bool check_axioms(const SpikeRep& rep);

/// The circuit-hyperplane {f_i : i in I} u {e_j : j not in I}. Throws
/// NotInSignature when I is not a member.
std::vector<ColumnLabel> circuit_hyperplane(const Diagonal& x, IndexSet i);

/// Re-express `rep` in the basis that takes the conjugate of line i for
/// i in S, then restore the special standard pattern by row and column
/// scalings. Throws DependentTransversal when that transversal is not a
/// basis.
SpikeRep change_basis_standardize(const SpikeRep& rep, IndexSet s);

}  // namespace spikelab
