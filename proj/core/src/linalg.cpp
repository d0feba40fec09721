// SPDX-License-Identifier: Apache-2.0
#include "cdlab/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cdlab/error.hpp"

namespace cdlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_row(const FpMatrix& m, std::size_t r) {
  if (r >= m.rows()) fail(ErrorKind::InvalidInput, "row index out of range");
}

// Gauss-Jordan on the listed columns, logging every non-trivial step. The
// pivot for the i-th listed column lands in row i (or the next free row).
std::vector<std::size_t> eliminate(FpMatrix& m, const std::vector<std::size_t>& columns,
                                   std::vector<RowOp>* log) {
  const auto& f = m.modulus();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  auto emit = [&](const RowOp& op) {
    apply_row_op(m, op);
    if (log) log->push_back(op);
  };
  for (auto col : columns) {
    if (row == m.rows()) break;
    std::size_t found = row;
    while (found < m.rows() && m(found, col) == 0) ++found;
    if (found == m.rows()) continue;
    if (found != row) emit(RowSwap{row, found});
    if (auto lead = m(row, col); lead != 1) emit(RowScale{row, f.inv(lead)});
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      if (auto v = m(r, col); v != 0) emit(RowAddMultiple{r, row, f.neg(v)});
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

FpMatrix scale_columns(const FpMatrix& m, const std::vector<std::uint32_t>& d) {
  if (d.size() != m.cols()) fail(ErrorKind::InvalidInput, "diagonal length does not match column count");
  FpMatrix out = m;
  const auto& f = m.modulus();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (d[c] % f.value() == 0) fail(ErrorKind::SingularTransform, "zero diagonal entry in column scaling");
    for (std::size_t r = 0; r < m.rows(); ++r) out.set(r, c, f.mul(m(r, c), d[c] % f.value()));
  }
  return out;
}

FpMatrix permute_columns(const FpMatrix& m, const std::vector<std::size_t>& source) {
  if (!is_permutation(source, m.cols())) fail(ErrorKind::InvalidInput, "not a permutation of the columns");
  return m.select_columns(std::span<const std::size_t>(source));
}

}  // namespace

void apply_row_op(FpMatrix& m, const RowOp& op) {
  const auto& f = m.modulus();
  std::visit(overloaded{
                 [&](const RowSwap& s) {
                   check_row(m, s.a);
                   check_row(m, s.b);
                   if (s.a == s.b) return;
                   auto a = m.mutable_row(s.a);
                   auto b = m.mutable_row(s.b);
                   std::swap_ranges(a.begin(), a.end(), b.begin());
                 },
                 [&](const RowScale& s) {
                   check_row(m, s.row);
                   if (s.factor % f.value() == 0) fail(ErrorKind::SingularTransform, "row scaled by zero");
                   for (auto& v : m.mutable_row(s.row)) v = f.mul(v, s.factor % f.value());
                 },
                 [&](const RowAddMultiple& s) {
                   check_row(m, s.target);
                   check_row(m, s.source);
                   if (s.target == s.source) fail(ErrorKind::InvalidInput, "row added to itself");
                   auto t = m.mutable_row(s.target);
                   auto src = m.row(s.source);
                   for (std::size_t c = 0; c < t.size(); ++c)
                     t[c] = f.add(t[c], f.mul(src[c], s.factor % f.value()));
                 },
             },
             op);
}

FpMatrix apply_row_ops(FpMatrix m, const std::vector<RowOp>& ops) {
  for (const auto& op : ops) apply_row_op(m, op);
  return m;
}

RrefResult rref(const FpMatrix& m) {
  RrefResult out{m, 0, {}, {}};
  std::vector<std::size_t> all(m.cols());
  std::iota(all.begin(), all.end(), std::size_t{0});
  out.pivot_columns = eliminate(out.matrix, all, &out.row_ops);
  out.rank = out.pivot_columns.size();
  return out;
}

std::size_t rank(const FpMatrix& m) {
  FpMatrix work = m;
  std::vector<std::size_t> all(m.cols());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return eliminate(work, all, nullptr).size();
}

KernelVector make_kernel_vector(std::vector<std::uint32_t> coords) {
  IndexSet support;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) support = support.with(i);
  return {std::move(coords), support};
}

std::vector<KernelVector> kernel_basis(const FpMatrix& m) {
  if (m.cols() > IndexSet::kMaxIndices) fail(ErrorKind::TooLarge, "more than 32 columns");
  const auto r = rref(m);
  const auto& f = m.modulus();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_columns) is_pivot[c] = true;

  std::vector<KernelVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivot_columns.size(); ++i) v[r.pivot_columns[i]] = f.neg(r.matrix(i, free));
    auto lead = *std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
    auto scale = f.inv(lead);
    for (auto& x : v) x = f.mul(x, scale);
    basis.push_back(make_kernel_vector(std::move(v)));
  }
  return basis;
}

bool is_invertible(const FpMatrix& square) {
  return square.rows() == square.cols() && rank(square) == square.rows();
}

bool is_permutation(const std::vector<std::size_t>& perm, std::size_t n) {
  if (perm.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto i : perm) {
    if (i >= n || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

FpMatrix apply_equivalence(const FpMatrix& m, const Equivalence& op) {
  return std::visit(overloaded{
                        [&](const LeftMultiply& l) {
                          if (l.transform.rows() != m.rows() || l.transform.cols() != m.rows())
                            fail(ErrorKind::InvalidInput, "left transform must be m x m");
                          if (!is_invertible(l.transform))
                            fail(ErrorKind::SingularTransform, "left transform is singular");
                          return l.transform * m;
                        },
                        [&](const DiagonalScale& d) { return scale_columns(m, d.diagonal); },
                        [&](const ColumnPermutation& p) { return permute_columns(m, p.source); },
                    },
                    op);
}

FpMatrix replay(FpMatrix m, const std::vector<TransformStep>& log) {
  for (const auto& step : log) {
    std::visit(overloaded{
                   [&](const RowOp& op) { apply_row_op(m, op); },
                   [&](const DiagonalScale& d) { m = scale_columns(m, d.diagonal); },
                   [&](const ColumnPermutation& p) { m = permute_columns(m, p.source); },
               },
               step);
  }
  return m;
}

CanonicalForm canonical_form(const FpMatrix& m, IndexSet support, std::size_t pivot) {
  const std::size_t rows = m.rows();
  if (m.cols() != rows + 1)
    fail(ErrorKind::InvalidInput, "canonical form needs an m x (m+1) matrix; restrict to S u S' first");
  if (rank(m) < rows) fail(ErrorKind::RankDeficient, "matrix rank is below its row count");
  const auto basis = kernel_basis(m);
  if (basis.size() != 1 || basis.front().support != support)
    fail(ErrorKind::BadSupport, support.to_string() + " is not the support of the kernel line");
  if (!support.contains(pivot)) fail(ErrorKind::BadSupport, "pivot is not in the support");

  const auto& f = m.modulus();
  CanonicalForm out{m, {}};

  std::vector<std::size_t> order{pivot};
  for (auto i : support.without(pivot).elements()) order.push_back(i);
  for (auto i : IndexSet::full(m.cols()).minus(support).elements()) order.push_back(i);
  std::vector<std::size_t> ident(order.size());
  std::iota(ident.begin(), ident.end(), std::size_t{0});
  if (order != ident) {
    out.log.emplace_back(ColumnPermutation{order});
    out.matrix = permute_columns(out.matrix, order);
  }

  // Columns 1..m are independent: a dependency among them would be a kernel
  // vector vanishing at the pivot.
  std::vector<RowOp> ops;
  std::vector<std::size_t> tail(rows);
  std::iota(tail.begin(), tail.end(), std::size_t{1});
  eliminate(out.matrix, tail, &ops);

  std::vector<std::uint32_t> diagonal(m.cols(), 1);
  bool scaled = false;
  for (std::size_t r = 0; r < rows; ++r) {
    auto c = out.matrix(r, 0);
    if (c == 0 || c == 1) continue;
    RowOp op = RowScale{r, f.inv(c)};
    apply_row_op(out.matrix, op);
    ops.push_back(op);
    diagonal[r + 1] = c;
    scaled = true;
  }
  for (auto& op : ops) out.log.emplace_back(op);
  if (scaled) {
    out.log.emplace_back(DiagonalScale{diagonal});
    out.matrix = scale_columns(out.matrix, diagonal);
  }
  return out;
}

}  // namespace cdlab
