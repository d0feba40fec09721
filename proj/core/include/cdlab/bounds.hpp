// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cdlab/field.hpp"
#include "cdlab/index_set.hpp"
#include "cdlab/matrix.hpp"
#include "cdlab/supports.hpp"

namespace cdlab {

using BigInt = boost::multiprecision::cpp_int;

/// Set sizes (k_1, ..., k_n) with 1 <= k_i <= p.
class SizeVector {
 public:
  SizeVector(std::vector<std::uint32_t> k, PrimeModulus modulus);

  const std::vector<std::uint32_t>& values() const noexcept { return k_; }
  std::size_t size() const noexcept { return k_.size(); }
  std::uint32_t operator[](std::size_t i) const noexcept { return k_[i]; }
  PrimeModulus modulus() const noexcept { return modulus_; }

 private:
  std::vector<std::uint32_t> k_;
  PrimeModulus modulus_;
};

struct BoundCertificate {
  BigInt lambda;
  IndexSet s;
  IndexSet sprime;
  std::uint32_t kmax = 0;
  std::uint32_t kmin = 0;
  bool precondition_ok = false;
};

/// (prod_{S} k_i - prod_{S} (k_i - 1)) * prod_{S'} k_i.
BigInt lambda_value(const std::vector<std::uint32_t>& k, IndexSet s, IndexSet sprime);

/// Certificate for a fixed choice, without validating the choice against L.
BoundCertificate make_certificate(const SizeVector& k, IndexSet s, IndexSet sprime);

struct BoundOptions {
  SupportOptions supports;
};

/// Every (S, S') pair: S a minimal support, S' a maximal complement. Ordered
/// by S then S'.
std::vector<BoundCertificate> lambda_certificates(const FpMatrix& l, const SizeVector& k,
                                                  const BoundOptions& options = {});

/// With `choice`, the certificate for that pair (validated: BadSupport if S
/// is not minimal or S' is not a maximal unique-support complement). Without,
/// the largest lambda among certificates with a satisfied precondition, or
/// the largest flagged one if none qualifies.
///
/// Errors: RankDeficient if rank(L) < m, FullRankKernel if ker(L) = {0}.
BoundCertificate lambda_bound(const FpMatrix& l, const SizeVector& k,
                              std::optional<std::pair<IndexSet, IndexSet>> choice = std::nullopt,
                              const BoundOptions& options = {});

/// (k^s - (k-1)^s) * k^(m-s+1); requires 1 <= s <= m+1 and k >= 1.
BigInt equal_k_bound(std::uint32_t s, std::uint32_t m, std::uint32_t k);

/// prod k_i: the image size of an injective map (m = n), reported in place
/// of lambda, which is undefined there.
BigInt injective_image_size(const std::vector<std::uint32_t>& k);

struct GenCdInstance {
  std::vector<std::uint32_t> u_sizes;
  std::uint32_t v_size = 1;
  PrimeModulus modulus{2};
};

bool gencd_precondition(const GenCdInstance& inst) noexcept;

/// khat * prod k_i - (khat - 1) * prod (k_i - 1). Throws PreconditionViolated
/// unless p >= khat + k_i - 1 for every i.
BigInt gencd_count(const GenCdInstance& inst);

}  // namespace cdlab
