// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cdlab/field.hpp"
#include "cdlab/image.hpp"
#include "cdlab/poly.hpp"

namespace cdlab {

/// prod_{a in A} (T - a) as a univariate polynomial. Throws EmptySet.
SparsePoly vanishing_poly(PrimeModulus modulus, std::span<const std::uint32_t> roots);

/// The ideal <P_1(Y_1), ..., P_n(Y_n)> with each P_i monic univariate of
/// degree k_i >= 1.
class IdealSpec {
 public:
  explicit IdealSpec(std::vector<SparsePoly> generators);

  /// P_i = vanishing polynomial of the i-th root set.
  static IdealSpec from_root_sets(PrimeModulus modulus, const std::vector<std::vector<std::uint32_t>>& roots);
  static IdealSpec from_grid(const SetSystem& grid) { return from_root_sets(grid.modulus(), grid.sets()); }
  /// P_i = Y_i^{k_i}; enough wherever only legality matters.
  static IdealSpec from_degrees(PrimeModulus modulus, const std::vector<std::uint32_t>& degrees);

  PrimeModulus modulus() const noexcept { return modulus_; }
  std::size_t vars() const noexcept { return generators_.size(); }
  const std::vector<std::uint32_t>& degrees() const noexcept { return degrees_; }
  const SparsePoly& generator(std::size_t i) const { return generators_.at(i); }
  /// a_0..a_{k-1} with Y^k = sum a_j Y^j modulo P_i.
  const std::vector<std::uint32_t>& tail(std::size_t i) const { return tails_.at(i); }

  bool is_legal(const Monomial& mon) const noexcept;

 private:
  PrimeModulus modulus_;
  std::vector<SparsePoly> generators_;
  std::vector<std::uint32_t> degrees_;
  std::vector<std::vector<std::uint32_t>> tails_;
};

/// Canonical reduction mod I: substitutes Y_i^{k_i} by P_i's tail, highest
/// powers first, one variable at a time in `order` (ascending by default)
/// until every monomial is legal.
SparsePoly canonical_reduce(const SparsePoly& h, const IdealSpec& ideal, std::span<const std::size_t> order = {});

struct NssOutcome {
  bool vanishes = false;         // h is zero at every grid point
  bool reduced_is_zero = false;  // canonical reduction mod <P_i(Y_i)> is 0
};

/// Decides both sides of the Nullstellensatz equivalence independently.
NssOutcome nss_check(const SparsePoly& h, const SetSystem& grid);

struct NssSuiteReport {
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::uint64_t instances = 0;
  std::uint64_t vanishing = 0;     // instances where h vanishes on the grid
  std::uint64_t disagreements = 0;
};

/// Seeded random (h, grid) pairs with grid sizes in [1, min(max_grid, p)];
/// half of the h are built inside the ideal so both outcomes occur.
NssSuiteReport nss_suite(PrimeModulus modulus, std::size_t n, std::uint64_t instances, std::uint32_t max_grid,
                         std::uint64_t seed);

// Monomial machinery for the correlated sumset C = {(u_i + v)_i}. Monomials
// in Gamma live in Y_1..Y_m, Z (Z last); monomials in Delta in X_1..X_m.

/// Y^e Z^e0 with e_i < k_i, e0 < khat, and e0 > 0 only if some e_i = k_i - 1.
/// Sorted by degree, then exponent vector.
std::vector<Monomial> gamma_set(const std::vector<std::uint32_t>& k, std::uint32_t khat);

bool in_gamma(const Monomial& mon, const std::vector<std::uint32_t>& k, std::uint32_t khat) noexcept;

/// X^e, times X_j^{e0} for the first j with e_j = k_j - 1 when e0 > 0.
/// Throws NotInDomain outside Gamma.
Monomial phi(const Monomial& mon, const std::vector<std::uint32_t>& k, std::uint32_t khat);

/// e_i = min(f_i, k_i - 1), e0 = sum f - sum e. Throws NotInDomain outside Delta.
Monomial phi_inverse(const Monomial& mon, const std::vector<std::uint32_t>& k, std::uint32_t khat);

std::vector<Monomial> delta_set(const std::vector<std::uint32_t>& k, std::uint32_t khat);

struct DeltaEntry {
  Monomial delta;    // K in X-variables
  Monomial witness;  // mon_K = phi^{-1}(K) in Y, Z variables
};

/// Delta sorted by total degree, then by decreasing Z-degree of phi^{-1}(K),
/// then by exponent vector. Throws NotInDomain for monomials outside Delta.
std::vector<DeltaEntry> delta_ordering(const std::vector<Monomial>& delta, const std::vector<std::uint32_t>& k,
                                       std::uint32_t khat);

/// K(Y_1 + Z, ..., Y_m + Z) from exact binomial coefficients reduced mod p.
SparsePoly shifted_expansion(const Monomial& delta, PrimeModulus modulus);

/// f(Y_1 + Z, ..., Y_m + Z).
SparsePoly shifted_composition(const SparsePoly& f);

struct OrderingViolation {
  std::size_t position = 0;
  char property = ' ';  // 'o' for degree order, 'a'..'d' for the entry properties
  std::string detail;
};

struct OrderingReport {
  std::size_t entries = 0;
  std::vector<OrderingViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
  std::size_t count(char property) const noexcept;
};

/// Checks, for every entry K with witness mon: (a) mon appears in
/// K(Y + Z) mod p, (b) deg mon = deg K, (c) mon is legal for `ideal`,
/// (d) mon does not appear in K'(Y + Z) for any earlier K'; plus that
/// degrees never decrease along the list.
OrderingReport verify_ordering(const std::vector<DeltaEntry>& ordering, const IdealSpec& ideal);

/// A nonzero f = sum_{K in Delta} c_K K vanishing on every point, from the
/// null space of the evaluation matrix. Throws NoSolution if none exists.
SparsePoly interpolate_in_delta(const std::vector<Monomial>& delta,
                                const std::vector<std::vector<std::uint32_t>>& points, PrimeModulus modulus);

struct ContradictionCheck {
  bool reduced_nonzero = false;  // g = f(Y + Z) has a nonzero reduction
  Monomial top;                  // largest K in the ordering with c_K != 0
  Monomial top_witness;          // mon_K for that K
  std::uint32_t witness_coefficient = 0;  // its coefficient in the reduction
};

/// Runs the polynomial-method argument on a concrete f supported on Delta:
/// reduces f(Y + Z) modulo `ideal` (over Y_1..Y_m, Z) and reports whether the
/// witness monomial of the top-ordered K survives.
ContradictionCheck check_contradiction(const SparsePoly& f, const std::vector<DeltaEntry>& ordering,
                                       const IdealSpec& ideal);

}  // namespace cdlab
