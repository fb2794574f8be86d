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

#include <cstdint>
#include <ostream>

namespace spikelab {

/// Largest modulus accepted by make_field (the largest 16-bit prime).
inline constexpr std::int64_t kMaxModulus = 65521;

bool is_prime(std::int64_t n) noexcept;

/// Handle for a prime modulus p with 2 <= p <= kMaxModulus. Only make_field
/// can create one, so holding a PrimeModulus means primality was checked.
class PrimeModulus {
 public:
  std::uint32_t value() const noexcept { return p_; }

  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  explicit PrimeModulus(std::uint32_t p) : p_(p) {}
  friend PrimeModulus make_field(std::int64_t p);

  std::uint32_t p_;
};

/// Throws CompositeModulus for non-primes (and for p < 2), OutOfRange above
/// kMaxModulus.
PrimeModulus make_field(std::int64_t p);

// Residue-level helpers used by the hot loops. All inputs are residues in
// [0, p) except `reduce`, which accepts any integer.
namespace modp {

inline std::uint32_t reduce(std::int64_t v, std::uint32_t p) noexcept {
  auto r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) noexcept {
  return a == 0 ? 0 : p - a;
}
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
/// Extended Euclid; `a` must be nonzero mod p.
std::uint32_t inverse(std::uint32_t a, std::uint32_t p);

}  // namespace modp

/// An element of GF(p). Arithmetic between different moduli throws
/// MismatchedModulus.
class FieldElem {
 public:
  FieldElem(PrimeModulus modulus, std::int64_t value)
      : modulus_(modulus), value_(modp::reduce(value, modulus.value())) {}

  PrimeModulus modulus() const noexcept { return modulus_; }
  std::uint32_t value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElem operator+(FieldElem rhs) const;
  FieldElem operator-(FieldElem rhs) const;
  FieldElem operator*(FieldElem rhs) const;
  FieldElem operator/(FieldElem rhs) const;
  FieldElem operator-() const;
  FieldElem& operator+=(FieldElem rhs) { return *this = *this + rhs; }
  FieldElem& operator-=(FieldElem rhs) { return *this = *this - rhs; }
  FieldElem& operator*=(FieldElem rhs) { return *this = *this * rhs; }

  friend bool operator==(const FieldElem&, const FieldElem&) = default;

 private:
  PrimeModulus modulus_;
  std::uint32_t value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& a);

/// Throws ZeroInverse for a = 0.
FieldElem inv(FieldElem a);

/// Integer representative in [-(p-1)/2, (p-1)/2] for odd p; the residue
/// itself for p = 2.
std::int64_t balanced_lift(FieldElem a) noexcept;

}  // namespace spikelab
