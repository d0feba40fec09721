// SPDX-License-Identifier: Apache-2.0
#include "cdlab/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

#include "cdlab/error.hpp"

namespace cdlab {

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars()) fail(ErrorKind::InvalidInput, "monomials over different variable counts");
  Monomial out = a;
  for (std::size_t i = 0; i < a.vars(); ++i) out.e_[i] += b.e_[i];
  return out;
}

SparsePoly SparsePoly::constant(PrimeModulus modulus, std::size_t vars, std::int64_t c) {
  SparsePoly out(modulus, vars);
  out.add_term(Monomial::one(vars), c);
  return out;
}

SparsePoly SparsePoly::variable(PrimeModulus modulus, std::size_t vars, std::size_t index) {
  if (index >= vars) fail(ErrorKind::InvalidInput, "variable index out of range");
  auto mon = Monomial::one(vars);
  mon[index] = 1;
  return term(modulus, mon, 1);
}

SparsePoly SparsePoly::term(PrimeModulus modulus, const Monomial& mon, std::int64_t c) {
  SparsePoly out(modulus, mon.vars());
  out.add_term(mon, c);
  return out;
}

std::int64_t SparsePoly::degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<std::int64_t>(terms_.begin()->first.degree());
}

std::int64_t SparsePoly::degree_in(std::size_t var) const noexcept {
  std::int64_t d = -1;
  for (const auto& [mon, c] : terms_) d = std::max<std::int64_t>(d, mon[var]);
  return d;
}

std::uint32_t SparsePoly::coefficient(const Monomial& mon) const noexcept {
  auto it = terms_.find(mon);
  return it == terms_.end() ? 0 : it->second;
}

void SparsePoly::add_term(const Monomial& mon, std::int64_t c) {
  if (mon.vars() != vars_) fail(ErrorKind::InvalidInput, "monomial variable count does not match polynomial");
  const auto r = modulus_.reduce(c);
  if (r == 0) return;
  auto [it, inserted] = terms_.try_emplace(mon, r);
  if (inserted) return;
  it->second = modulus_.add(it->second, r);
  if (it->second == 0) terms_.erase(it);
}

std::uint32_t SparsePoly::evaluate(std::span<const std::uint32_t> point) const {
  if (point.size() != vars_) fail(ErrorKind::InvalidInput, "evaluation point has the wrong dimension");
  std::uint32_t acc = 0;
  for (const auto& [mon, c] : terms_) {
    std::uint32_t v = c;
    for (std::size_t i = 0; i < vars_; ++i)
      if (mon[i]) v = modulus_.mul(v, modulus_.pow(modulus_.reduce(point[i]), mon[i]));
    acc = modulus_.add(acc, v);
  }
  return acc;
}

void SparsePoly::check_compatible(const SparsePoly& other) const {
  if (!(modulus_ == other.modulus_))
    fail(ErrorKind::ModulusMismatch, "polynomials over F_" + std::to_string(modulus_.value()) + " and F_" +
                                         std::to_string(other.modulus_.value()));
  if (vars_ != other.vars_) fail(ErrorKind::InvalidInput, "polynomials over different variable counts");
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out = *this;
  for (auto& [mon, c] : out.terms_) c = modulus_.neg(c);
  return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  check_compatible(other);
  for (const auto& [mon, c] : other.terms_) add_term(mon, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  check_compatible(other);
  for (const auto& [mon, c] : other.terms_) add_term(mon, modulus_.neg(c));
  return *this;
}

SparsePoly& SparsePoly::operator*=(std::uint32_t scalar) {
  scalar %= modulus_.value();
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mon, c] : terms_) c = modulus_.mul(c, scalar);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check_compatible(b);
  SparsePoly out(a.modulus_, a.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, a.modulus_.mul(ca, cb));
  return out;
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& poly) {
  if (poly.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [mon, c] : poly.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (std::size_t i = 0; i < mon.vars(); ++i) {
      if (mon[i] == 0) continue;
      os << "*x" << i + 1;
      if (mon[i] > 1) os << '^' << mon[i];
    }
  }
  return os;
}

}  // namespace cdlab
