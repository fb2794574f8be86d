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

#include "spikelab/exact_matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "spikelab/error.hpp"

namespace spikelab {

MatrixGF::MatrixGF(PrimeModulus modulus, std::size_t rows, std::size_t cols)
    : modulus_(modulus), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

MatrixGF MatrixGF::identity(PrimeModulus modulus, std::size_t n) {
  MatrixGF m(modulus, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set_residue(i, i, 1);
  return m;
}

MatrixGF MatrixGF::from_rows(
    PrimeModulus modulus,
    std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  MatrixGF m(modulus, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) {
      throw Error(ErrorCode::kMismatchedShape, "ragged matrix literal");
    }
    std::size_t j = 0;
    for (std::int64_t v : row) {
      m.set_residue(i, j++, modp::reduce(v, modulus.value()));
    }
    ++i;
  }
  return m;
}

void MatrixGF::set(std::size_t r, std::size_t c, FieldElem v) {
  if (v.modulus() != modulus_) {
    throw Error(ErrorCode::kMismatchedModulus, "entry from another field");
  }
  entries_[r * cols_ + c] = v.value();
}

MatrixGF MatrixGF::select_columns(std::span<const std::size_t> columns) const {
  MatrixGF out(modulus_, rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      out.entries_[r * out.cols_ + j] = entries_[r * cols_ + columns[j]];
    }
  }
  return out;
}

void MatrixGF::scale_row(std::size_t r, std::uint32_t factor) {
  const auto p = modulus_.value();
  for (std::size_t c = 0; c < cols_; ++c) {
    auto& e = entries_[r * cols_ + c];
    e = modp::mul(e, factor, p);
  }
}

void MatrixGF::scale_column(std::size_t c, std::uint32_t factor) {
  const auto p = modulus_.value();
  for (std::size_t r = 0; r < rows_; ++r) {
    auto& e = entries_[r * cols_ + c];
    e = modp::mul(e, factor, p);
  }
}

void MatrixGF::add_row_multiple(std::size_t dst, std::size_t src,
                                std::uint32_t factor) {
  const auto p = modulus_.value();
  for (std::size_t c = 0; c < cols_; ++c) {
    auto& e = entries_[dst * cols_ + c];
    e = modp::add(e, modp::mul(factor, entries_[src * cols_ + c], p), p);
  }
}

void MatrixGF::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap(entries_[a * cols_ + c], entries_[b * cols_ + c]);
  }
}

MatrixGF operator*(const MatrixGF& a, const MatrixGF& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(ErrorCode::kMismatchedModulus, "matrix product");
  }
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kMismatchedShape, "matrix product shapes");
  }
  const auto p = a.modulus().value();
  MatrixGF out(a.modulus(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a.residue(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.set_residue(
            i, j, modp::add(out.residue(i, j), modp::mul(aik, b.residue(k, j), p), p));
      }
    }
  }
  return out;
}

namespace {

struct Elimination {
  std::size_t rank = 0;
  std::uint32_t det = 1;  // meaningful only for square input
};

// Forward elimination in place; tracks the determinant of the leading square
// block when the input is square.
Elimination eliminate(MatrixGF& m) {
  const auto p = m.modulus().value();
  Elimination out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m.residue(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) {
      out.det = 0;
      continue;
    }
    if (pivot != row) {
      m.swap_rows(pivot, row);
      out.det = modp::neg(out.det, p);
    }
    const auto lead = m.residue(row, col);
    out.det = modp::mul(out.det, lead, p);
    const auto lead_inv = modp::inverse(lead, p);
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      const auto v = m.residue(r, col);
      if (v != 0) m.add_row_multiple(r, row, modp::neg(modp::mul(v, lead_inv, p), p));
    }
    ++row;
  }
  out.rank = row;
  if (out.rank < m.rows()) out.det = 0;
  return out;
}

}  // namespace

FieldElem det(const MatrixGF& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kNonSquare, std::to_string(m.rows()) + "x" +
                                           std::to_string(m.cols()));
  }
  MatrixGF work = m;
  return FieldElem(m.modulus(), eliminate(work).det);
}

std::size_t rank(const MatrixGF& m) {
  MatrixGF work = m;
  return eliminate(work).rank;
}

std::optional<MatrixGF> inverse(const MatrixGF& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kNonSquare, "inverse of non-square matrix");
  }
  const std::size_t n = m.rows();
  const auto p = m.modulus().value();
  // Gauss-Jordan on [m | I].
  MatrixGF aug(m.modulus(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set_residue(r, c, m.residue(r, c));
    aug.set_residue(r, n + r, 1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && aug.residue(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    aug.swap_rows(pivot, col);
    aug.scale_row(col, modp::inverse(aug.residue(col, col), p));
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const auto v = aug.residue(r, col);
      if (v != 0) aug.add_row_multiple(r, col, modp::neg(v, p));
    }
  }
  std::vector<std::size_t> right(n);
  for (std::size_t i = 0; i < n; ++i) right[i] = n + i;
  return aug.select_columns(right);
}

FieldElem spike_det(std::span<const FieldElem> x) {
  if (x.empty()) throw Error(ErrorCode::kTooSmall, "spike_det of empty vector");
  const auto modulus = x.front().modulus();
  FieldElem inverse_sum(modulus, 1);
  FieldElem product(modulus, 1);
  for (const auto& xi : x) {
    if (xi.is_zero()) throw Error(ErrorCode::kZeroEntry, "diagonal entry is 0");
    inverse_sum += inv(xi);
    product *= xi;
  }
  return inverse_sum * product;
}

MatrixGF ones_plus_diagonal(std::span<const FieldElem> x) {
  if (x.empty()) throw Error(ErrorCode::kTooSmall, "empty vector");
  const auto modulus = x.front().modulus();
  const auto p = modulus.value();
  MatrixGF m(modulus, x.size(), x.size());
  for (std::size_t r = 0; r < x.size(); ++r) {
    for (std::size_t c = 0; c < x.size(); ++c) {
      m.set_residue(r, c, r == c ? modp::add(1 % p, x[r].value(), p) : 1 % p);
    }
  }
  return m;
}

namespace {

// Incremental row-echelon state for the basis DFS: each stored vector has a
// leading 1 at its pivot position and zeros at earlier pivots.
class EchelonStack {
 public:
  EchelonStack(std::size_t dim, std::uint32_t p) : dim_(dim), p_(p) {}

  bool try_push(std::vector<std::uint32_t> v) {
    for (const auto& [pivot, row] : rows_) {
      const auto f = v[pivot];
      if (f == 0) continue;
      for (std::size_t i = 0; i < dim_; ++i) {
        v[i] = modp::sub(v[i], modp::mul(f, row[i], p_), p_);
      }
    }
    std::size_t pivot = 0;
    while (pivot < dim_ && v[pivot] == 0) ++pivot;
    if (pivot == dim_) return false;
    const auto lead_inv = modp::inverse(v[pivot], p_);
    for (auto& e : v) e = modp::mul(e, lead_inv, p_);
    rows_.emplace_back(pivot, std::move(v));
    return true;
  }
  void pop() { rows_.pop_back(); }

 private:
  std::size_t dim_;
  std::uint32_t p_;
  std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> rows_;
};

void collect_bases(const std::vector<std::vector<std::uint32_t>>& columns,
                   std::size_t need, std::size_t next, std::uint32_t chosen,
                   EchelonStack& stack, std::vector<std::uint32_t>& out) {
  if (need == 0) {
    out.push_back(chosen);
    return;
  }
  for (std::size_t c = next; c + need <= columns.size(); ++c) {
    if (!stack.try_push(columns[c])) continue;
    collect_bases(columns, need - 1, c + 1, chosen | (1u << c), stack, out);
    stack.pop();
  }
}

}  // namespace

BasisFamily basis_family(const MatrixGF& m) {
  if (m.rows() > kBasisFamilyMaxRows || m.cols() > kBasisFamilyMaxCols) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                    " exceeds the basis enumeration cap");
  }
  if (rank(m) < m.rows()) {
    throw Error(ErrorCode::kRankDeficient, "matrix is not of full row rank");
  }
  std::vector<std::vector<std::uint32_t>> columns(m.cols(),
                                                  std::vector<std::uint32_t>(m.rows()));
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) columns[c][r] = m.residue(r, c);
  }
  BasisFamily family;
  family.rank = m.rows();
  family.ground_size = m.cols();
  EchelonStack stack(m.rows(), m.modulus().value());
  collect_bases(columns, m.rows(), 0, 0, stack, family.members);
  std::sort(family.members.begin(), family.members.end());
  return family;
}

}  // namespace spikelab
