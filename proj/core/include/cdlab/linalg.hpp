// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "cdlab/index_set.hpp"
#include "cdlab/matrix.hpp"

namespace cdlab {

// Elementary row operations. All factors are residues in [0, p).
struct RowSwap {
  std::size_t a;
  std::size_t b;
  friend bool operator==(const RowSwap&, const RowSwap&) = default;
};
struct RowScale {
  std::size_t row;
  std::uint32_t factor;  // nonzero
  friend bool operator==(const RowScale&, const RowScale&) = default;
};
struct RowAddMultiple {
  std::size_t target;
  std::size_t source;
  std::uint32_t factor;  // target += factor * source
  friend bool operator==(const RowAddMultiple&, const RowAddMultiple&) = default;
};
using RowOp = std::variant<RowSwap, RowScale, RowAddMultiple>;

void apply_row_op(FpMatrix& m, const RowOp& op);
FpMatrix apply_row_ops(FpMatrix m, const std::vector<RowOp>& ops);

struct RrefResult {
  FpMatrix matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  std::vector<RowOp> row_ops;
};

RrefResult rref(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);

/// A nonzero vector of ker(L) with its support (zero-based column indices).
struct KernelVector {
  std::vector<std::uint32_t> coords;
  IndexSet support;
  friend bool operator==(const KernelVector&, const KernelVector&) = default;
};

KernelVector make_kernel_vector(std::vector<std::uint32_t> coords);

/// Null-space basis, one vector per free column in ascending order, each
/// scaled so its first nonzero coordinate is 1.
std::vector<KernelVector> kernel_basis(const FpMatrix& m);

// Equivalences: x -> L' L x, x -> L D x, x -> L P x.
struct LeftMultiply {
  FpMatrix transform;  // invertible m x m
};
struct DiagonalScale {
  std::vector<std::uint32_t> diagonal;  // length n, all nonzero
};
/// New column j is old column source[j]. Size vectors follow the same rule:
/// k'_j = k_{source[j]}.
struct ColumnPermutation {
  std::vector<std::size_t> source;
};
using Equivalence = std::variant<LeftMultiply, DiagonalScale, ColumnPermutation>;

FpMatrix apply_equivalence(const FpMatrix& m, const Equivalence& op);
bool is_invertible(const FpMatrix& square);
bool is_permutation(const std::vector<std::size_t>& perm, std::size_t n);

/// One step of a canonical-form reduction. Row ops act on the left, column
/// scalings and permutations on the right, replayed in log order.
using TransformStep = std::variant<RowOp, DiagonalScale, ColumnPermutation>;

struct CanonicalForm {
  FpMatrix matrix;
  std::vector<TransformStep> log;
};

FpMatrix replay(FpMatrix m, const std::vector<TransformStep>& log);

/// Reduces an m x (m+1) rank-m map whose kernel support is `support` to the
/// shape [c | I_m] with c a 0/1 column, using row operations, column
/// scalings and a column permutation that moves `pivot` first and the rest
/// of the support right after it.
///
/// Errors: RankDeficient if rank < m; BadSupport if `support` is not the
/// support of the kernel line or `pivot` is not in it; InvalidInput if the
/// matrix is not m x (m+1).
CanonicalForm canonical_form(const FpMatrix& m, IndexSet support, std::size_t pivot);

}  // namespace cdlab
