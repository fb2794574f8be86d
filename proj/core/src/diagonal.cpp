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

#include "spikelab/diagonal.hpp"

#include <algorithm>
#include <charconv>

#include "spikelab/error.hpp"

namespace spikelab {

Diagonal::Diagonal(PrimeModulus modulus, std::vector<std::uint32_t> residues)
    : modulus_(modulus), x_(std::move(residues)) {
  if (x_.empty()) throw Error(ErrorCode::kTooSmall, "diagonal must be nonempty");
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (x_[i] >= modulus_.value()) {
      throw Error(ErrorCode::kOutOfRange,
                  "entry " + std::to_string(i + 1) + " = " + std::to_string(x_[i]) +
                      " is not a residue mod " + std::to_string(modulus_.value()));
    }
    if (x_[i] == 0) {
      throw Error(ErrorCode::kZeroEntry,
                  "entry " + std::to_string(i + 1) + " is 0");
    }
  }
}

Diagonal Diagonal::from_integers(PrimeModulus modulus,
                                 std::span<const std::int64_t> values) {
  std::vector<std::uint32_t> r;
  r.reserve(values.size());
  for (auto v : values) r.push_back(modp::reduce(v, modulus.value()));
  return Diagonal(modulus, std::move(r));
}

Diagonal Diagonal::from_inverse_integers(PrimeModulus modulus,
                                         std::span<const std::int64_t> inverses) {
  std::vector<std::uint32_t> r;
  r.reserve(inverses.size());
  for (auto v : inverses) {
    const auto z = modp::reduce(v, modulus.value());
    if (z == 0) throw Error(ErrorCode::kZeroEntry, "inverse entry reduces to 0");
    r.push_back(modp::inverse(z, modulus.value()));
  }
  return Diagonal(modulus, std::move(r));
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParse,
                "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Diagonal Diagonal::parse(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos || text.substr(0, 2) != "p=" ||
      text.substr(semi + 1, 2) != "x=") {
    throw Error(ErrorCode::kParse,
                "expected 'p=<prime>;x=<v1>,...,<vn>', got '" + std::string(text) + "'");
  }
  const auto modulus = make_field(parse_int(text.substr(2, semi - 2), "modulus"));
  std::string_view rest = text.substr(semi + 3);
  std::vector<std::uint32_t> x;
  while (true) {
    const auto comma = rest.find(',');
    const auto v = parse_int(rest.substr(0, comma), "residue");
    if (v < 1 || v >= modulus.value()) {
      throw Error(ErrorCode::kParse, "residue " + std::to_string(v) +
                                         " is not in [1, " +
                                         std::to_string(modulus.value()) + ")");
    }
    x.push_back(static_cast<std::uint32_t>(v));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return Diagonal(modulus, std::move(x));
}

std::string Diagonal::to_text() const {
  std::string out = "p=" + std::to_string(p()) + ";x=";
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(x_[i]);
  }
  return out;
}

std::vector<std::uint32_t> Diagonal::inverse_residues() const {
  std::vector<std::uint32_t> z;
  z.reserve(x_.size());
  for (auto v : x_) z.push_back(modp::inverse(v, p()));
  return z;
}

std::vector<FieldElem> Diagonal::elements() const {
  std::vector<FieldElem> out;
  out.reserve(x_.size());
  for (auto v : x_) out.emplace_back(modulus_, v);
  return out;
}

std::vector<std::int64_t> Diagonal::balanced() const {
  std::vector<std::int64_t> out;
  out.reserve(x_.size());
  for (auto v : x_) out.push_back(balanced_lift(FieldElem(modulus_, v)));
  return out;
}

Diagonal Diagonal::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != x_.size()) {
    throw Error(ErrorCode::kMismatchedShape, "permutation length");
  }
  std::vector<std::uint32_t> y(x_.size());
  for (std::size_t i = 0; i < x_.size(); ++i) y[perm[i]] = x_[i];
  return Diagonal(modulus_, std::move(y));
}

std::strong_ordering operator<=>(const Diagonal& a, const Diagonal& b) {
  if (auto c = a.p() <=> b.p(); c != 0) return c;
  if (auto c = a.x_.size() <=> b.x_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.x_.begin(), a.x_.end(),
                                                b.x_.begin(), b.x_.end());
}

}  // namespace spikelab
