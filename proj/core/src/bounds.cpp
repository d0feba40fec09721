// SPDX-License-Identifier: Apache-2.0
#include "cdlab/bounds.hpp"

#include <algorithm>
#include <string>

#include "cdlab/error.hpp"
#include "cdlab/linalg.hpp"

namespace cdlab {

SizeVector::SizeVector(std::vector<std::uint32_t> k, PrimeModulus modulus)
    : k_(std::move(k)), modulus_(modulus) {
  for (auto v : k_)
    if (v < 1 || v > modulus_.value())
      fail(ErrorKind::InvalidInput, "set size " + std::to_string(v) + " outside [1, " +
                                        std::to_string(modulus_.value()) + "]");
}

BigInt lambda_value(const std::vector<std::uint32_t>& k, IndexSet s, IndexSet sprime) {
  BigInt full = 1, reduced = 1, tail = 1;
  for (auto i : s.elements()) {
    full *= k.at(i);
    reduced *= k.at(i) - 1;
  }
  for (auto i : sprime.elements()) tail *= k.at(i);
  return (full - reduced) * tail;
}

BoundCertificate make_certificate(const SizeVector& k, IndexSet s, IndexSet sprime) {
  BoundCertificate c;
  c.s = s;
  c.sprime = sprime;
  c.lambda = lambda_value(k.values(), s, sprime);
  c.kmax = 0;
  c.kmin = ~std::uint32_t{0};
  for (auto i : s.elements()) {
    c.kmax = std::max(c.kmax, k[i]);
    c.kmin = std::min(c.kmin, k[i]);
  }
  if (s.empty()) c.kmin = 0;
  c.precondition_ok = !s.empty() && std::uint64_t{k.modulus().value()} + 1 >= std::uint64_t{c.kmax} + c.kmin;
  return c;
}

namespace {

void check_map(const FpMatrix& l, const SizeVector& k) {
  if (k.size() != l.cols())
    fail(ErrorKind::InvalidInput, "size vector has " + std::to_string(k.size()) + " entries for " +
                                      std::to_string(l.cols()) + " columns");
  if (!(k.modulus() == l.modulus())) fail(ErrorKind::ModulusMismatch, "size vector and map disagree on p");
  if (rank(l) < l.rows()) fail(ErrorKind::RankDeficient, "rank(L) is below m");
  if (l.cols() == l.rows()) fail(ErrorKind::FullRankKernel, "ker(L) = {0}; lambda is undefined");
}

}  // namespace

std::vector<BoundCertificate> lambda_certificates(const FpMatrix& l, const SizeVector& k,
                                                  const BoundOptions& options) {
  check_map(l, k);
  std::vector<BoundCertificate> out;
  for (const auto& s : minimal_supports(l, options.supports))
    for (auto sprime : all_complements(l, s.support)) out.push_back(make_certificate(k, s.support, sprime));
  return out;
}

BoundCertificate lambda_bound(const FpMatrix& l, const SizeVector& k,
                              std::optional<std::pair<IndexSet, IndexSet>> choice,
                              const BoundOptions& options) {
  if (choice) {
    check_map(l, k);
    auto [s, sprime] = *choice;
    if (!is_circuit(l, s)) fail(ErrorKind::BadSupport, s.to_string() + " is not a minimal support");
    if (!(s & sprime).empty()) fail(ErrorKind::BadSupport, "S and S' overlap");
    if (!unique_support_within(l, s, s | sprime) || (s | sprime).size() != l.rows() + 1)
      fail(ErrorKind::BadSupport, sprime.to_string() + " is not a maximal complement of " + s.to_string());
    return make_certificate(k, s, sprime);
  }
  auto all = lambda_certificates(l, k, options);
  const BoundCertificate* best = nullptr;
  for (const auto& c : all)
    if (c.precondition_ok && (!best || c.lambda > best->lambda)) best = &c;
  if (!best)
    for (const auto& c : all)
      if (!best || c.lambda > best->lambda) best = &c;
  return *best;
}

BigInt equal_k_bound(std::uint32_t s, std::uint32_t m, std::uint32_t k) {
  if (s < 1 || s > m + 1) fail(ErrorKind::InvalidInput, "support size must satisfy 1 <= s <= m+1");
  if (k < 1) fail(ErrorKind::InvalidInput, "k must be positive");
  BigInt kk = k, km = k - 1;
  return (boost::multiprecision::pow(kk, s) - boost::multiprecision::pow(km, s)) *
         boost::multiprecision::pow(kk, m - s + 1);
}

BigInt injective_image_size(const std::vector<std::uint32_t>& k) {
  BigInt out = 1;
  for (auto v : k) out *= v;
  return out;
}

bool gencd_precondition(const GenCdInstance& inst) noexcept {
  return std::all_of(inst.u_sizes.begin(), inst.u_sizes.end(), [&](auto ki) {
    return std::uint64_t{inst.modulus.value()} + 1 >= std::uint64_t{inst.v_size} + ki;
  });
}

BigInt gencd_count(const GenCdInstance& inst) {
  if (inst.u_sizes.empty() || inst.v_size < 1 ||
      std::any_of(inst.u_sizes.begin(), inst.u_sizes.end(), [](auto v) { return v < 1; }))
    fail(ErrorKind::InvalidInput, "GenCD sizes must be positive and m >= 1");
  if (!gencd_precondition(inst))
    fail(ErrorKind::PreconditionViolated, "need p >= khat + k_i - 1 for every i");
  BigInt full = 1, reduced = 1;
  for (auto v : inst.u_sizes) {
    full *= v;
    reduced *= v - 1;
  }
  return BigInt(inst.v_size) * full - BigInt(inst.v_size - 1) * reduced;
}

}  // namespace cdlab
