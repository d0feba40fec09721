// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cdlab {

/// A subset of the column indices {0, ..., n-1}, n <= 32, stored as a bitmask.
/// Serialized forms (JSON, CSV) are 1-based.
class IndexSet {
 public:
  static constexpr std::size_t kMaxIndices = 32;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}

  static IndexSet of(const std::vector<std::size_t>& zero_based);
  static IndexSet from_one_based(const std::vector<std::size_t>& one_based);
  static constexpr IndexSet full(std::size_t n) {
    return IndexSet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t i) const noexcept { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(IndexSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr IndexSet with(std::size_t i) const noexcept {
    return IndexSet(bits_ | (std::uint32_t{1} << i));
  }
  constexpr IndexSet without(std::size_t i) const noexcept {
    return IndexSet(bits_ & ~(std::uint32_t{1} << i));
  }
  constexpr IndexSet operator|(IndexSet o) const noexcept { return IndexSet(bits_ | o.bits_); }
  constexpr IndexSet operator&(IndexSet o) const noexcept { return IndexSet(bits_ & o.bits_); }
  constexpr IndexSet minus(IndexSet o) const noexcept { return IndexSet(bits_ & ~o.bits_); }

  std::vector<std::size_t> elements() const;
  std::vector<std::size_t> one_based() const;
  // "{1,2,3}" in 1-based notation.
  std::string to_string() const;

  // Ordered by size, then by the sorted element list, so sets of supports
  // print in a stable, human-friendly order.
  friend std::strong_ordering operator<=>(IndexSet a, IndexSet b) noexcept;
  friend constexpr bool operator==(IndexSet a, IndexSet b) noexcept { return a.bits_ == b.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace cdlab
