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

#include "spikelab/spike_rep.hpp"

#include <bit>
#include <stdexcept>

#include "spikelab/error.hpp"
#include "spikelab/signature.hpp"

namespace spikelab {

std::string ColumnLabel::to_string() const {
  switch (role) {
    case Role::kBasis: return "e" + std::to_string(line);
    case Role::kTip: return "t";
    case Role::kConjugate: return "f" + std::to_string(line);
  }
  return "?";
}

SpikeRep::SpikeRep(MatrixGF matrix, std::vector<ColumnLabel> labels)
    : matrix_(std::move(matrix)), labels_(std::move(labels)) {
  if (labels_.size() != matrix_.cols()) {
    throw Error(ErrorCode::kMismatchedShape, "one label per column required");
  }
}

std::size_t SpikeRep::column_of(const ColumnLabel& label) const {
  for (std::size_t c = 0; c < labels_.size(); ++c) {
    if (labels_[c] == label) return c;
  }
  throw Error(ErrorCode::kMismatchedShape, "no column labeled " + label.to_string());
}

bool SpikeRep::is_special_standard() const {
  const std::size_t n = matrix_.rows();
  if (n == 0 || matrix_.cols() != 2 * n + 1) return false;
  const std::uint32_t one = 1 % matrix_.modulus().value();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (matrix_.residue(r, c) != (r == c ? one : 0)) return false;
    }
    if (matrix_.residue(r, n) != one) return false;
    for (std::size_t i = 0; i < n; ++i) {
      const auto v = matrix_.residue(r, n + 1 + i);
      if (r == i ? v == one : v != one) return false;
    }
  }
  return true;
}

std::optional<Diagonal> SpikeRep::diagonal() const {
  if (!is_special_standard()) return std::nullopt;
  const std::size_t n = matrix_.rows();
  const auto p = matrix_.modulus().value();
  std::vector<std::uint32_t> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = modp::sub(matrix_.residue(i, n + 1 + i), 1 % p, p);
  }
  return Diagonal(matrix_.modulus(), std::move(x));
}

SpikeRep build_matrix(const Diagonal& x) {
  const std::size_t n = x.size();
  const auto p = x.p();
  MatrixGF m(x.modulus(), n, 2 * n + 1);
  std::vector<ColumnLabel> labels;
  labels.reserve(2 * n + 1);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(ColumnLabel::basis(static_cast<unsigned>(i + 1)));
  labels.push_back(ColumnLabel::tip());
  for (std::size_t i = 0; i < n; ++i) labels.push_back(ColumnLabel::conjugate(static_cast<unsigned>(i + 1)));
  for (std::size_t r = 0; r < n; ++r) {
    m.set_residue(r, r, 1);
    m.set_residue(r, n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      m.set_residue(r, n + 1 + i, r == i ? modp::add(1 % p, x.residues()[i], p) : 1);
    }
  }
  return SpikeRep(std::move(m), std::move(labels));
}

SpikeRep build_rep(const Diagonal& x) {
  if (x.size() < 3) {
    throw Error(ErrorCode::kTooSmall,
                "a spike needs n >= 3, got n = " + std::to_string(x.size()));
  }
  return build_matrix(x);
}

bool check_axioms(const SpikeRep& rep) {
  const std::size_t n = rep.n();
  if (n < 3 || rep.matrix().cols() != 2 * n + 1) return false;
  if (n > 16) throw Error(ErrorCode::kTooLarge, "axiom sweep is capped at n = 16");
  std::size_t tip;
  std::vector<std::size_t> e(n), f(n);
  try {
    tip = rep.column_of(ColumnLabel::tip());
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = rep.column_of(ColumnLabel::basis(static_cast<unsigned>(i + 1)));
      f[i] = rep.column_of(ColumnLabel::conjugate(static_cast<unsigned>(i + 1)));
    }
  } catch (const Error&) {
    return false;
  }
  const auto& m = rep.matrix();
  auto rank_of = [&](const std::vector<std::size_t>& cols) {
    return rank(m.select_columns(cols));
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (rank_of({e[i], tip, f[i]}) != 2) return false;
    if (rank_of({e[i], tip}) != 2 || rank_of({e[i], f[i]}) != 2 ||
        rank_of({tip, f[i]}) != 2) {
      return false;
    }
  }
  const std::uint32_t all = (1u << n) - 1;
  for (std::uint32_t lines = 1; lines <= all; ++lines) {
    std::vector<std::size_t> cols{tip};
    for (std::size_t i = 0; i < n; ++i) {
      if ((lines >> i) & 1u) {
        cols.push_back(e[i]);
        cols.push_back(f[i]);
      }
    }
    const std::size_t k = static_cast<std::size_t>(std::popcount(lines));
    const std::size_t expected = k < n ? k + 1 : n;
    if (rank_of(cols) != expected) return false;
  }
  return true;
}

std::vector<ColumnLabel> circuit_hyperplane(const Diagonal& x, IndexSet i) {
  if (!is_dependent_transversal(x, i)) {
    throw Error(ErrorCode::kNotInSignature, "index set is not a circuit-hyperplane");
  }
  std::vector<ColumnLabel> out;
  out.reserve(x.size());
  for (unsigned line = 1; line <= x.size(); ++line) {
    out.push_back(i.contains(line) ? ColumnLabel::conjugate(line)
                                   : ColumnLabel::basis(line));
  }
  return out;
}

SpikeRep change_basis_standardize(const SpikeRep& rep, IndexSet s) {
  const std::size_t n = rep.n();
  if (!rep.is_special_standard()) {
    throw Error(ErrorCode::kMismatchedShape, "input is not in special standard form");
  }
  if (n < 2) throw Error(ErrorCode::kTooSmall, "basis change needs n >= 2");
  if (!s.fits(static_cast<unsigned>(n))) {
    throw Error(ErrorCode::kMismatchedShape, "swap set exceeds n");
  }
  const auto p = rep.matrix().modulus().value();

  std::vector<std::size_t> basis(n), order(2 * n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const bool swapped = s.contains(static_cast<unsigned>(i + 1));
    basis[i] = swapped ? n + 1 + i : i;
    order[i] = basis[i];
    order[n + 1 + i] = swapped ? i : n + 1 + i;
  }
  order[n] = n;

  const auto b_inv = inverse(rep.matrix().select_columns(basis));
  if (!b_inv) {
    throw Error(ErrorCode::kDependentTransversal,
                "the requested transversal is not a basis");
  }
  MatrixGF m = (*b_inv * rep.matrix()).select_columns(order);
  std::vector<ColumnLabel> labels(2 * n + 1);
  for (std::size_t c = 0; c < order.size(); ++c) labels[c] = rep.labels()[order[c]];

  // Tip column to all ones: scale row r, then undo the damage to the
  // identity block by scaling basis column r.
  for (std::size_t r = 0; r < n; ++r) {
    const auto alpha = m.residue(r, n);
    if (alpha == 0) throw std::logic_error("tip lies in a basis hyperplane");
    m.scale_row(r, modp::inverse(alpha, p));
    m.scale_column(r, alpha);
  }
  // Each conjugate column is c * (1 + y_i e_i); divide out c.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t col = n + 1 + i;
    const std::size_t probe = i == 0 ? 1 : 0;
    const auto c = m.residue(probe, col);
    if (c == 0) throw std::logic_error("conjugate column lost its off-diagonal pattern");
    m.scale_column(col, modp::inverse(c, p));
  }

  SpikeRep out(std::move(m), std::move(labels));
  if (!out.is_special_standard()) {
    throw std::logic_error("re-standardization did not restore the special standard pattern");
  }
  return out;
}

}  // namespace spikelab
