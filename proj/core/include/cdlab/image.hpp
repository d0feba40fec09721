// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdlab/bounds.hpp"
#include "cdlab/field.hpp"
#include "cdlab/matrix.hpp"

namespace cdlab {

/// (A_1, ..., A_n), each A_i a nonempty sorted subset of [0, p).
class SetSystem {
 public:
  // Elements must lie in [0, p); duplicates are dropped.
  SetSystem(PrimeModulus modulus, const std::vector<std::vector<std::int64_t>>& sets);
  SetSystem(PrimeModulus modulus, std::vector<std::vector<std::uint32_t>> sets);

  /// A_i = {start, ..., start + k_i - 1} mod p.
  static SetSystem intervals(PrimeModulus modulus, const std::vector<std::uint32_t>& k,
                             std::int64_t start = 0);

  PrimeModulus modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return sets_.size(); }
  const std::vector<std::vector<std::uint32_t>>& sets() const noexcept { return sets_; }
  const std::vector<std::uint32_t>& operator[](std::size_t i) const noexcept { return sets_[i]; }
  std::vector<std::uint32_t> sizes() const;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  PrimeModulus modulus_;
  std::vector<std::vector<std::uint32_t>> sets_;
};

struct ImageOptions {
  // Cap on prod k_i, the number of product points enumerated per image.
  std::uint64_t max_points = std::uint64_t{1} << 34;
  // Flat bit array when p^m is at most this; hashing above it.
  std::uint64_t dense_limit = std::uint64_t{1} << 26;
  unsigned parallelism = 1;
};

struct ImageResult {
  std::uint64_t size = 0;
  // Lexicographically sorted m-tuples, when requested.
  std::optional<std::vector<std::vector<std::uint32_t>>> points;
};

/// |L(A_1, ..., A_n)| exactly. Throws BudgetExceeded past max_points.
ImageResult image_size(const FpMatrix& l, const SetSystem& a, bool keep_points = false,
                       const ImageOptions& options = {});

/// Reusable single-threaded image counter. Keeps its marking buffer between
/// calls so the search loops do not allocate.
class ImageCounter {
 public:
  explicit ImageCounter(const FpMatrix& l, const ImageOptions& options = {});
  ~ImageCounter();
  ImageCounter(ImageCounter&&) noexcept;
  ImageCounter& operator=(ImageCounter&&) noexcept;

  /// Image size, or any value >= stop_at once stop_at distinct points have
  /// been seen. Sets are sorted residues; one per column.
  std::uint64_t count(std::span<const std::vector<std::uint32_t>> sets,
                      std::uint64_t stop_at = ~std::uint64_t{0});

 private:
  struct Impl;
  friend ImageResult image_size(const FpMatrix&, const SetSystem&, bool, const ImageOptions&);
  std::unique_ptr<Impl> impl_;
};

enum class SearchMethod { Exhaustive, Heuristic };

struct ExtremalResult {
  std::uint64_t mu = 0;
  SetSystem witness;
  SearchMethod method = SearchMethod::Exhaustive;
  std::string probe;  // what produced the witness
};

struct ExactSearchOptions {
  // Cap on the number of normalized candidate families.
  std::uint64_t max_candidates = 50'000'000;
  unsigned parallelism = 1;
  ImageOptions image;
};

/// Number of candidate families after translation and common-scaling
/// normalization (before canonicity pruning); saturates at UINT64_MAX.
std::uint64_t normalized_space_size(const std::vector<std::uint32_t>& k, std::uint32_t p);

/// mu(L, k) by exhaustive search over normalized families, skipping tuples
/// that are not lexicographically minimal in their symmetry orbit.
/// Throws BudgetExceeded with the reduced-space size in the message.
ExtremalResult mu_exact(const FpMatrix& l, const SizeVector& k, const ExactSearchOptions& options = {});

/// min |L(A, ..., A)| over |A| = k, exhaustively.
ExtremalResult mu_symmetric_exact(const FpMatrix& l, std::uint32_t k,
                                  const ExactSearchOptions& options = {});

enum class Probe { Intervals, ArithmeticProgressions, LocalSearch };

struct HeuristicOptions {
  std::vector<Probe> probes{Probe::Intervals, Probe::ArithmeticProgressions, Probe::LocalSearch};
  std::uint32_t restarts = 200;
  std::uint32_t steps = 500;
  std::uint64_t seed = 0;
  // Per-coordinate difference vectors tried by the progression probe; all of
  // them when (p-1)^(n-1) fits, a seeded sample otherwise.
  std::uint64_t max_progressions = 4096;
  unsigned parallelism = 1;
  ImageOptions image;
};

/// Upper bound on mu(L, k) from the configured probes.
ExtremalResult mu_heuristic(const FpMatrix& l, const SizeVector& k, const HeuristicOptions& options = {});

/// |C| for C = {(u_1 + v, ..., u_m + v)}: the image of [I_m | 1] on (U_1, ..., U_m, V).
std::uint64_t gencd_image_size(PrimeModulus modulus, const std::vector<std::vector<std::uint32_t>>& u,
                               const std::vector<std::uint32_t>& v);

/// Integer mode: |L(A_1, ..., A_n)| for an integer matrix and integer sets,
/// with no reduction.
std::uint64_t integer_image_size(const std::vector<std::vector<std::int64_t>>& l,
                                 const std::vector<std::vector<std::int64_t>>& sets,
                                 std::uint64_t max_points = std::uint64_t{1} << 26);

/// [c | I_{n-1}] with c = (1, ..., 1, 0, ..., 0), s - 1 ones: a canonical
/// m = n - 1 map whose unique minimal support has size s.
FpMatrix canonical_corank_one(std::size_t n, std::size_t s, PrimeModulus modulus);

struct TightnessRow {
  std::size_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t p = 0;
  std::size_t s = 0;
  bool tight_regime = false;  // p >= 2k - 1
  std::uint64_t image = 0;    // intervals {0, ..., k-1}
  BigInt lambda;
  bool pass = false;  // image == lambda when tight, image < lambda otherwise
};

/// Interval images of canonical_corank_one(n, s) for s = 2..n, equal k.
std::vector<TightnessRow> tightness_rows(std::size_t n, std::uint32_t k, PrimeModulus modulus,
                                         const ImageOptions& options = {});

std::string to_string(SearchMethod method);
std::string to_string(Probe probe);

}  // namespace cdlab
