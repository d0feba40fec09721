// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cdlab/index_set.hpp"
#include "cdlab/linalg.hpp"
#include "cdlab/matrix.hpp"

namespace cdlab {

/// A member of supker(L) together with a kernel vector whose support it is.
struct SupportWitness {
  IndexSet support;
  KernelVector witness;
};

enum class SupportMethod {
  // Inclusion-exclusion over column subsets: the number of kernel vectors
  // with support exactly S is sum_{T in S} (-1)^{|S\T|} p^{nullity(cols T)}.
  SubsetCount,
  // Walk all p^nullity kernel vectors.
  KernelEnumeration,
};

struct SupportOptions {
  SupportMethod method = SupportMethod::SubsetCount;
  std::size_t max_columns = 24;
  std::uint64_t max_kernel_vectors = 1'000'000;
  unsigned parallelism = 1;
};

/// supker(L), sorted by (size, elements). Throws TooLarge past the budget.
std::vector<SupportWitness> support_kernel(const FpMatrix& l, const SupportOptions& options = {});

/// Inclusion-minimal members of supker(L) (the circuits of the column
/// matroid). Throws TrivialKernel when ker(L) = {0}.
std::vector<SupportWitness> minimal_supports(const FpMatrix& l, const SupportOptions& options = {});

/// Rank test: cols(S) are dependent and every proper subset is independent.
bool is_circuit(const FpMatrix& l, IndexSet s);

/// Greedy (ascending column index) maximal S' with 2^{S u S'} n supker = {S}.
/// Requires rank(L) = rows and S a circuit; then |S u S'| = rows + 1.
IndexSet choose_complement(const FpMatrix& l, IndexSet s);

/// Every maximal S' for the circuit S, in ascending (size, elements) order.
std::vector<IndexSet> all_complements(const FpMatrix& l, IndexSet s);

/// True iff the only member of supker(L) inside `t` is `s`, via
/// rank(cols t) = |t| - 1 with s a circuit inside t.
bool unique_support_within(const FpMatrix& l, IndexSet s, IndexSet t);

struct SupportProfile {
  std::vector<SupportWitness> supker;
  std::vector<IndexSet> minimal_supports;
  IndexSet chosen_s;
  IndexSet chosen_sprime;
};

/// Full profile with the first minimal support (smallest, then lexicographic)
/// and its greedy complement. Requires rank(L) = rows < cols.
SupportProfile support_profile(const FpMatrix& l, const SupportOptions& options = {});

}  // namespace cdlab
