// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "cdlab/field.hpp"
#include "cdlab/index_set.hpp"

namespace cdlab {

/// Dense m x n matrix over F_p, row-major, entries always reduced to [0, p).
class FpMatrix {
 public:
  FpMatrix(PrimeModulus modulus, std::size_t rows, std::size_t cols);
  // Entries may be any integers; they are reduced mod p. Ragged input throws.
  FpMatrix(PrimeModulus modulus, const std::vector<std::vector<std::int64_t>>& entries);
  FpMatrix(PrimeModulus modulus, std::initializer_list<std::initializer_list<std::int64_t>> entries);

  static FpMatrix identity(PrimeModulus modulus, std::size_t n);

  PrimeModulus modulus() const noexcept { return modulus_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::int64_t value) noexcept {
    data_[r * cols_ + c] = modulus_.reduce(value);
  }
  std::span<const std::uint32_t> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  // Caller keeps entries reduced.
  std::span<std::uint32_t> mutable_row(std::size_t r) noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<std::uint32_t> column(std::size_t c) const;

  FpMatrix select_columns(std::span<const std::size_t> cols) const;
  FpMatrix select_columns(IndexSet cols) const;
  FpMatrix transpose() const;

  std::vector<std::uint32_t> apply(std::span<const std::uint32_t> x) const;
  bool is_zero() const noexcept;

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  PrimeModulus modulus_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

std::ostream& operator<<(std::ostream& os, const FpMatrix& m);

}  // namespace cdlab
