// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "cdlab/field.hpp"

namespace cdlab {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents) : e_(std::move(exponents)) {}
  Monomial(std::initializer_list<std::uint32_t> exponents) : e_(exponents) {}
  static Monomial one(std::size_t vars) { return Monomial(std::vector<std::uint32_t>(vars, 0)); }

  std::size_t vars() const noexcept { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const noexcept { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) noexcept { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return e_; }
  std::uint64_t degree() const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> e_;
};

/// Graded lexicographic order, larger terms first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exponents() > b.exponents();
  }
};

/// Sparse polynomial over F_p. Only nonzero coefficients are stored; terms
/// iterate in descending graded lexicographic order.
class SparsePoly {
 public:
  using Terms = std::map<Monomial, std::uint32_t, GrlexGreater>;

  SparsePoly(PrimeModulus modulus, std::size_t vars) : modulus_(modulus), vars_(vars) {}

  static SparsePoly constant(PrimeModulus modulus, std::size_t vars, std::int64_t c);
  static SparsePoly variable(PrimeModulus modulus, std::size_t vars, std::size_t index);
  static SparsePoly term(PrimeModulus modulus, const Monomial& mon, std::int64_t c);

  PrimeModulus modulus() const noexcept { return modulus_; }
  std::size_t vars() const noexcept { return vars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // -1 for the zero polynomial.
  std::int64_t degree() const noexcept;
  std::int64_t degree_in(std::size_t var) const noexcept;
  std::uint32_t coefficient(const Monomial& mon) const noexcept;
  bool appears(const Monomial& mon) const noexcept { return coefficient(mon) != 0; }

  // Adds c * mon (c is reduced mod p).
  void add_term(const Monomial& mon, std::int64_t c);

  std::uint32_t evaluate(std::span<const std::uint32_t> point) const;

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(std::uint32_t scalar);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, std::uint32_t s) { return a *= s; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  void check_compatible(const SparsePoly& other) const;

  PrimeModulus modulus_;
  std::size_t vars_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const SparsePoly& poly);

}  // namespace cdlab
