// SPDX-License-Identifier: Apache-2.0
#include "cdlab/field.hpp"

#include <limits>
#include <ostream>
#include <string>

#include "cdlab/error.hpp"

namespace cdlab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::BadSupport: return "BadSupport";
    case ErrorKind::SingularTransform: return "SingularTransform";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::TrivialKernel: return "TrivialKernel";
    case ErrorKind::FullRankKernel: return "FullRankKernel";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NotInDomain: return "NotInDomain";
    case ErrorKind::NoSolution: return "NoSolution";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(0) {
  if (p > std::numeric_limits<std::uint32_t>::max())
    fail(ErrorKind::InvalidInput, "modulus " + std::to_string(p) + " exceeds 32 bits");
  if (!is_prime(p)) fail(ErrorKind::InvalidInput, "modulus " + std::to_string(p) + " is not prime");
  p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t PrimeModulus::pow(std::uint32_t base, std::uint64_t exp) const noexcept {
  std::uint32_t result = 1 % p_;
  base %= p_;
  while (exp > 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint32_t PrimeModulus::inv(std::uint32_t a) const {
  a %= p_;
  if (a == 0) fail(ErrorKind::SingularTransform, "zero has no inverse in F_" + std::to_string(p_));
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

namespace {
void check_same(const FpScalar& a, const FpScalar& b) {
  if (!(a.modulus() == b.modulus()))
    fail(ErrorKind::ModulusMismatch, "scalars from F_" + std::to_string(a.modulus().value()) +
                                         " and F_" + std::to_string(b.modulus().value()));
}
}  // namespace

FpScalar FpScalar::inverse() const { return {modulus_.inv(value_), modulus_}; }

FpScalar operator+(FpScalar a, FpScalar b) {
  check_same(a, b);
  return {a.modulus_.add(a.value_, b.value_), a.modulus_};
}
FpScalar operator-(FpScalar a, FpScalar b) {
  check_same(a, b);
  return {a.modulus_.sub(a.value_, b.value_), a.modulus_};
}
FpScalar operator*(FpScalar a, FpScalar b) {
  check_same(a, b);
  return {a.modulus_.mul(a.value_, b.value_), a.modulus_};
}
FpScalar operator/(FpScalar a, FpScalar b) {
  check_same(a, b);
  return a * b.inverse();
}

std::ostream& operator<<(std::ostream& os, const FpScalar& x) {
  return os << x.value() << " (mod " << x.modulus().value() << ")";
}

}  // namespace cdlab
