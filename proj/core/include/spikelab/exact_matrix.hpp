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
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "spikelab/gf_prime.hpp"

namespace spikelab {

/// Dense row-major matrix over GF(p). Entries are stored as residues.
class MatrixGF {
 public:
  MatrixGF(PrimeModulus modulus, std::size_t rows, std::size_t cols);

  static MatrixGF identity(PrimeModulus modulus, std::size_t n);
  /// Integer literals are reduced mod p.
  static MatrixGF from_rows(
      PrimeModulus modulus,
      std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  PrimeModulus modulus() const noexcept { return modulus_; }

  FieldElem at(std::size_t r, std::size_t c) const {
    return FieldElem(modulus_, entries_[r * cols_ + c]);
  }
  std::uint32_t residue(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, FieldElem v);
  void set_residue(std::size_t r, std::size_t c, std::uint32_t v) {
    entries_[r * cols_ + c] = v % modulus_.value();
  }

  std::span<const std::uint32_t> residues() const noexcept { return entries_; }

  /// Columns in the given order (duplicates allowed).
  MatrixGF select_columns(std::span<const std::size_t> columns) const;

  void scale_row(std::size_t r, std::uint32_t factor);
  void scale_column(std::size_t c, std::uint32_t factor);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, std::uint32_t factor);
  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const MatrixGF&, const MatrixGF&) = default;

 private:
  PrimeModulus modulus_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> entries_;
};

MatrixGF operator*(const MatrixGF& a, const MatrixGF& b);

/// Pivoted Gaussian elimination; throws NonSquare.
FieldElem det(const MatrixGF& m);
std::size_t rank(const MatrixGF& m);
/// Empty when singular; throws NonSquare.
std::optional<MatrixGF> inverse(const MatrixGF& m);

/// Determinant of the n x n matrix with 1 + x_i on the diagonal and 1
/// elsewhere, via the closed form (1 + sum x_i^-1) * prod x_i. O(n).
/// Throws ZeroEntry if some x_i = 0.
FieldElem spike_det(std::span<const FieldElem> x);

/// The explicit all-ones-plus-diagonal matrix that spike_det evaluates.
MatrixGF ones_plus_diagonal(std::span<const FieldElem> x);

/// Bases of the column matroid of a full-row-rank matrix. Each member is a
/// bit pattern over column indices (bit c = column c, zero-based); members
/// are sorted ascending.
struct BasisFamily {
  std::size_t rank = 0;
  std::size_t ground_size = 0;
  std::vector<std::uint32_t> members;

  friend bool operator==(const BasisFamily&, const BasisFamily&) = default;
};

inline constexpr std::size_t kBasisFamilyMaxRows = 10;
inline constexpr std::size_t kBasisFamilyMaxCols = 21;

/// Throws RankDeficient if rank(m) < rows, TooLarge past the desk caps.
BasisFamily basis_family(const MatrixGF& m);

}  // namespace spikelab
