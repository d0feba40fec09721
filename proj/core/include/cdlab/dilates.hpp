// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdlab/field.hpp"
#include "cdlab/image.hpp"
#include "cdlab/index_set.hpp"
#include "cdlab/matrix.hpp"

namespace cdlab {

/// Coefficients (l_1, ..., l_r), each nonzero mod p.
class DilateSpec {
 public:
  DilateSpec(std::vector<std::int64_t> coefficients, PrimeModulus modulus);

  const std::vector<std::uint32_t>& coefficients() const noexcept { return coefficients_; }
  PrimeModulus modulus() const noexcept { return modulus_; }

 private:
  std::vector<std::uint32_t> coefficients_;
  PrimeModulus modulus_;
};

/// {x mod p}, sorted and deduplicated.
std::vector<std::uint32_t> residue_set(const std::vector<std::int64_t>& x, PrimeModulus modulus);

/// |l_1 X + ... + l_r X| exactly. Throws EmptySet.
std::uint64_t dilate_sumset(const DilateSpec& spec, const std::vector<std::uint32_t>& x);

/// |X + Y| in F_p.
std::uint64_t sumset_size(const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y,
                          PrimeModulus modulus);

/// lhs <= rhs_num / rhs_den, compared as lhs * rhs_den <= rhs_num.
struct RuzsaOutcome {
  std::uint64_t lhs = 0;
  std::uint64_t rhs_num = 0;
  std::uint64_t rhs_den = 1;
  bool holds = false;
};

/// |X + Z| * |Y| <= |X + Y| * |Y + Z|.
RuzsaOutcome ruzsa_triangle(const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y,
                            const std::vector<std::uint32_t>& z, PrimeModulus modulus);

/// lhs = |A4 + c^2 A4|, rhs = |A4 + c A3| * |A3 + c A4| / |A3|.
RuzsaOutcome ruzsa_check(const std::vector<std::uint32_t>& a3, const std::vector<std::uint32_t>& a4, std::int64_t c,
                         PrimeModulus modulus);

/// L_c = [[1, 0, c, 1], [0, 1, 1, c]].
FpMatrix dilate_matrix(std::int64_t c, PrimeModulus modulus);

struct Section4Row {
  std::int64_t c = 0;
  std::uint32_t k = 0;
  std::uint32_t p = 0;
  std::string probe;
  std::uint64_t seed = 0;
  std::uint64_t image_size = 0;
};

struct Section4Report {
  std::int64_t c = 0;
  std::uint32_t k = 0;
  std::uint32_t p = 0;
  std::uint32_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t interval_image = 0;  // A_i = {1, ..., k}
  std::uint64_t interval_cap = 0;    // 16 k^2
  std::uint64_t min_image = 0;
  SetSystem min_witness;
  std::string min_probe;
  std::uint64_t min_seed = 0;
  std::vector<IndexSet> supker;
  bool supker_all_large = false;  // supker = all subsets of [4] of size >= 3
  bool small_p_warning = false;   // p < 20 k c^2
  std::vector<Section4Row> rows;
};

struct Section4Options {
  std::uint64_t seed = 0;
  unsigned parallelism = 1;
  // Heuristic probes on top of the random trials; restarts and steps of the
  // local search.
  bool heuristics = true;
  std::uint32_t restarts = 200;
  std::uint32_t steps = 500;
};

/// Interval image, minimum over `trials` seeded random k-subset families and
/// the heuristic probes, and supker(L_c). Rows are emitted in trial order.
Section4Report section4_experiment(std::int64_t c, std::uint32_t k, PrimeModulus modulus, std::uint32_t trials,
                                   const Section4Options& options = {});

}  // namespace cdlab
