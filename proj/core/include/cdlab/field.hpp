// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

namespace cdlab {

bool is_prime(std::uint64_t n) noexcept;

/// The prime p of F_p. Construction rejects composites and anything that
/// does not fit in 32 bits, so products of two residues fit in uint64_t.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  std::uint32_t value() const noexcept { return p_; }

  std::uint32_t reduce(std::int64_t x) const noexcept {
    auto r = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p_ - b);
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
  }
  std::uint32_t pow(std::uint32_t base, std::uint64_t exp) const noexcept;
  // Throws Error(SingularTransform) on zero.
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::uint32_t p_;
};

/// A residue together with its field. Mixed-modulus arithmetic throws
/// Error(ModulusMismatch).
class FpScalar {
 public:
  FpScalar(std::int64_t value, PrimeModulus modulus)
      : modulus_(modulus), value_(modulus.reduce(value)) {}

  std::uint32_t value() const noexcept { return value_; }
  PrimeModulus modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FpScalar inverse() const;

  FpScalar operator-() const { return {modulus_.neg(value_), modulus_}; }
  friend FpScalar operator+(FpScalar a, FpScalar b);
  friend FpScalar operator-(FpScalar a, FpScalar b);
  friend FpScalar operator*(FpScalar a, FpScalar b);
  friend FpScalar operator/(FpScalar a, FpScalar b);
  friend bool operator==(const FpScalar&, const FpScalar&) = default;

 private:
  PrimeModulus modulus_;
  std::uint32_t value_;
};

std::ostream& operator<<(std::ostream& os, const FpScalar& x);

}  // namespace cdlab
