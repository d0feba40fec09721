// SPDX-License-Identifier: Apache-2.0
#include "cdlab/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "cdlab/error.hpp"

namespace cdlab {

IndexSet IndexSet::of(const std::vector<std::size_t>& zero_based) {
  IndexSet s;
  for (auto i : zero_based) {
    if (i >= kMaxIndices) fail(ErrorKind::InvalidInput, "index out of range for IndexSet");
    s = s.with(i);
  }
  return s;
}

IndexSet IndexSet::from_one_based(const std::vector<std::size_t>& one_based) {
  IndexSet s;
  for (auto i : one_based) {
    if (i == 0 || i > kMaxIndices) fail(ErrorKind::InvalidInput, "1-based index out of range");
    s = s.with(i - 1);
  }
  return s;
}

std::vector<std::size_t> IndexSet::elements() const {
  std::vector<std::size_t> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::vector<std::size_t> IndexSet::one_based() const {
  auto out = elements();
  for (auto& i : out) ++i;
  return out;
}

std::string IndexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto i : one_based()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

std::strong_ordering operator<=>(IndexSet a, IndexSet b) noexcept {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.elements() <=> b.elements();
}

FpMatrix::FpMatrix(PrimeModulus modulus, std::size_t rows, std::size_t cols)
    : modulus_(modulus), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix::FpMatrix(PrimeModulus modulus, const std::vector<std::vector<std::int64_t>>& entries)
    : modulus_(modulus), rows_(entries.size()), cols_(entries.empty() ? 0 : entries.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : entries) {
    if (r.size() != cols_) fail(ErrorKind::InvalidInput, "ragged matrix rows");
    for (auto v : r) data_.push_back(modulus_.reduce(v));
  }
}

FpMatrix::FpMatrix(PrimeModulus modulus,
                   std::initializer_list<std::initializer_list<std::int64_t>> entries)
    : FpMatrix(modulus, [&] {
        std::vector<std::vector<std::int64_t>> v;
        for (auto r : entries) v.emplace_back(r);
        return v;
      }()) {}

FpMatrix FpMatrix::identity(PrimeModulus modulus, std::size_t n) {
  FpMatrix m(modulus, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

std::vector<std::uint32_t> FpMatrix::column(std::size_t c) const {
  std::vector<std::uint32_t> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

FpMatrix FpMatrix::select_columns(std::span<const std::size_t> cols) const {
  FpMatrix out(modulus_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out.data_[r * cols.size() + j] = (*this)(r, cols[j]);
  return out;
}

FpMatrix FpMatrix::select_columns(IndexSet cols) const {
  auto idx = cols.elements();
  return select_columns(std::span<const std::size_t>(idx));
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(modulus_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.data_[c * rows_ + r] = (*this)(r, c);
  return out;
}

std::vector<std::uint32_t> FpMatrix::apply(std::span<const std::uint32_t> x) const {
  if (x.size() != cols_) fail(ErrorKind::InvalidInput, "vector length does not match column count");
  std::vector<std::uint32_t> y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = (acc + std::uint64_t{(*this)(r, c)} * x[c]) % modulus_.value();
    y[r] = static_cast<std::uint32_t>(acc);
  }
  return y;
}

bool FpMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](auto v) { return v == 0; });
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (!(a.modulus_ == b.modulus_)) fail(ErrorKind::ModulusMismatch, "matrix product across moduli");
  if (a.cols_ != b.rows_) fail(ErrorKind::InvalidInput, "matrix product shape mismatch");
  FpMatrix out(a.modulus_, a.rows_, b.cols_);
  const auto p = a.modulus_.value();
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) acc = (acc + std::uint64_t{a(i, k)} * b(k, j)) % p;
      out.data_[i * b.cols_ + j] = static_cast<std::uint32_t>(acc);
    }
  return out;
}

std::ostream& operator<<(std::ostream& os, const FpMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  return os << "] mod " << m.modulus().value();
}

}  // namespace cdlab
