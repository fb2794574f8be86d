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

#include "spikelab/gf_prime.hpp"

#include <string>

#include "spikelab/error.hpp"

namespace spikelab {

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus make_field(std::int64_t p) {
  if (p > kMaxModulus) {
    throw Error(ErrorCode::kOutOfRange,
                "modulus " + std::to_string(p) + " exceeds " +
                    std::to_string(kMaxModulus));
  }
  if (!is_prime(p)) {
    throw Error(ErrorCode::kCompositeModulus,
                std::to_string(p) + " is not prime");
  }
  return PrimeModulus(static_cast<std::uint32_t>(p));
}

namespace modp {

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw Error(ErrorCode::kZeroInverse, "0 has no inverse");
  std::int64_t old_r = a % p, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return reduce(old_s, p);
}

}  // namespace modp

namespace {

void require_same(PrimeModulus a, PrimeModulus b) {
  if (a != b) {
    throw Error(ErrorCode::kMismatchedModulus,
                "GF(" + std::to_string(a.value()) + ") vs GF(" +
                    std::to_string(b.value()) + ")");
  }
}

}  // namespace

FieldElem FieldElem::operator+(FieldElem rhs) const {
  require_same(modulus_, rhs.modulus_);
  return FieldElem(modulus_, modp::add(value_, rhs.value_, modulus_.value()));
}

FieldElem FieldElem::operator-(FieldElem rhs) const {
  require_same(modulus_, rhs.modulus_);
  return FieldElem(modulus_, modp::sub(value_, rhs.value_, modulus_.value()));
}

FieldElem FieldElem::operator*(FieldElem rhs) const {
  require_same(modulus_, rhs.modulus_);
  return FieldElem(modulus_, modp::mul(value_, rhs.value_, modulus_.value()));
}

FieldElem FieldElem::operator/(FieldElem rhs) const { return *this * inv(rhs); }

FieldElem FieldElem::operator-() const {
  return FieldElem(modulus_, modp::neg(value_, modulus_.value()));
}

std::ostream& operator<<(std::ostream& os, const FieldElem& a) {
  return os << a.value() << " (mod " << a.modulus().value() << ")";
}

FieldElem inv(FieldElem a) {
  return FieldElem(a.modulus(), modp::inverse(a.value(), a.modulus().value()));
}

std::int64_t balanced_lift(FieldElem a) noexcept {
  const std::int64_t p = a.modulus().value();
  const std::int64_t v = a.value();
  if (p == 2) return v;
  return v > (p - 1) / 2 ? v - p : v;
}

}  // namespace spikelab
