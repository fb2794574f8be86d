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

#include "spikelab/signature.hpp"

#include <bit>
#include <utility>

#include "spikelab/error.hpp"

namespace spikelab {

namespace {

std::size_t word_count(std::size_t n) {
  return n >= 6 ? (std::size_t{1} << n) / 64 : 1;
}

std::size_t hex_digits(std::size_t n) {
  return n >= 2 ? (std::size_t{1} << n) / 4 : 1;
}

}  // namespace

Signature::Signature(std::size_t n) : n_(n) {
  if (n > kSignatureMaxN) {
    throw Error(ErrorCode::kTooLarge,
                "signature over n = " + std::to_string(n) + " > " +
                    std::to_string(kSignatureMaxN));
  }
  words_.assign(word_count(n), 0);
}

std::size_t Signature::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

std::vector<IndexSet> Signature::members() const {
  std::vector<IndexSet> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
      out.emplace_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
    }
  }
  return out;
}

Signature Signature::transformed(IndexSet s) const {
  Signature out(n_);
  for (auto member : members()) out.insert(member ^ s);
  return out;
}

Signature Signature::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != n_) throw Error(ErrorCode::kMismatchedShape, "permutation length");
  Signature out(n_);
  for (auto member : members()) {
    IndexSet image;
    for (unsigned e : member.elements()) image = image.with(static_cast<unsigned>(perm[e - 1]) + 1);
    out.insert(image);
  }
  return out;
}

std::string Signature::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = hex_digits(n_);
  std::string out;
  out.reserve(digits);
  for (std::size_t k = digits; k-- > 0;) {
    const std::size_t bit = 4 * k;
    out.push_back(kDigits[(words_[bit / 64] >> (bit % 64)) & 0xF]);
  }
  return out;
}

Signature Signature::from_hex(std::size_t n, std::string_view hex) {
  Signature out(n);
  if (hex.size() != hex_digits(n)) {
    throw Error(ErrorCode::kParse, "signature hex for n = " + std::to_string(n) +
                                       " needs " + std::to_string(hex_digits(n)) +
                                       " digits");
  }
  const std::uint64_t limit_mask =
      n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::size_t{1} << n)) - 1;
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const char c = hex[i];
    std::uint64_t v;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      v = c - 'a' + 10;
    } else {
      throw Error(ErrorCode::kParse, std::string("bad hex digit '") + c + "'");
    }
    const std::size_t bit = 4 * (hex.size() - 1 - i);
    out.words_[bit / 64] |= v << (bit % 64);
  }
  if ((out.words_[0] & ~limit_mask) != 0) {
    throw Error(ErrorCode::kParse, "signature hex has bits beyond 2^n");
  }
  return out;
}

Signature Signature::from_words(std::size_t n, std::vector<std::uint64_t> words) {
  Signature out(n);
  if (words.size() != out.words_.size()) {
    throw Error(ErrorCode::kMismatchedShape, "signature word count");
  }
  out.words_ = std::move(words);
  return out;
}

void signature_bits(std::span<const std::uint32_t> inverses, std::uint32_t p,
                    std::span<std::uint64_t> out) {
  const std::size_t n = inverses.size();
  const std::uint32_t target = p - 1;
  const std::uint64_t total = std::uint64_t{1} << n;
  std::uint32_t gray = 0;
  std::uint32_t sum = 0;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int bit = std::countr_zero(i);
    gray ^= 1u << bit;
    sum = (gray >> bit) & 1u ? modp::add(sum, inverses[bit], p)
                             : modp::sub(sum, inverses[bit], p);
    if (sum == target) out[gray >> 6] |= std::uint64_t{1} << (gray & 63);
  }
}

Signature signature(const Diagonal& x) {
  Signature sig(x.size());
  const auto z = x.inverse_residues();
  std::vector<std::uint64_t> words(sig.words().size(), 0);
  signature_bits(z, x.p(), words);
  return Signature::from_words(x.size(), std::move(words));
}

bool is_dependent_transversal(const Diagonal& x, IndexSet k) {
  if (k.empty()) return false;
  if (!k.fits(static_cast<unsigned>(x.size()))) {
    throw Error(ErrorCode::kMismatchedShape, "index set exceeds diagonal length");
  }
  const auto p = x.p();
  std::uint32_t sum = 0;
  for (unsigned e : k.elements()) {
    sum = modp::add(sum, modp::inverse(x.residues()[e - 1], p), p);
  }
  return sum == p - 1;
}

}  // namespace spikelab
