// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cdlab/error.hpp>
#include <cdlab/field.hpp>
#include <cdlab/index_set.hpp>
#include <cdlab/matrix.hpp>

using namespace cdlab;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(PrimeModulus, AcceptsPrimesOnly) {
  for (std::uint64_t p : {2, 3, 5, 7, 101, 10007}) EXPECT_EQ(PrimeModulus(p).value(), p);
  for (std::uint64_t n : {0, 1, 4, 9, 100}) EXPECT_EQ(kind_of([&] { PrimeModulus{n}; }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { PrimeModulus{(1ULL << 32) + 15}; }), ErrorKind::InvalidInput);
}

TEST(PrimeModulus, PrimalityAgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 2000; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) prime = false;
    EXPECT_EQ(is_prime(n), prime) << n;
  }
}

TEST(PrimeModulus, ArithmeticMatchesIntegers) {
  const PrimeModulus f(13);
  for (std::int64_t a = 0; a < 13; ++a)
    for (std::int64_t b = 0; b < 13; ++b) {
      EXPECT_EQ(f.add(a, b), (a + b) % 13);
      EXPECT_EQ(f.sub(a, b), (a - b + 13) % 13);
      EXPECT_EQ(f.mul(a, b), a * b % 13);
    }
  for (std::uint32_t a = 1; a < 13; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1U);
  EXPECT_EQ(f.reduce(-1), 12U);
  EXPECT_EQ(f.pow(2, 12), 1U);
  EXPECT_EQ(kind_of([&] { (void)f.inv(0); }), ErrorKind::SingularTransform);
}

TEST(FpScalar, ReducedAndInvertibleIffNonzero) {
  const PrimeModulus f(7);
  const FpScalar a(-3, f), b(10, f);
  EXPECT_EQ(a.value(), 4U);
  EXPECT_EQ(b.value(), 3U);
  EXPECT_EQ((a + b).value(), 0U);
  EXPECT_EQ((a * b).value(), 5U);
  EXPECT_EQ((a / b * b), a);
  EXPECT_EQ((-a).value(), 3U);
  EXPECT_EQ(kind_of([&] { (void)FpScalar(0, f).inverse(); }), ErrorKind::SingularTransform);
  EXPECT_EQ(kind_of([&] { (void)(a + FpScalar(1, PrimeModulus(5))); }), ErrorKind::ModulusMismatch);
}

TEST(FpMatrix, ConstructionReducesAndRejectsRagged) {
  const PrimeModulus f(5);
  const FpMatrix m(f, {{-1, 6}, {10, 3}});
  EXPECT_EQ(m(0, 0), 4U);
  EXPECT_EQ(m(0, 1), 1U);
  EXPECT_EQ(m(1, 0), 0U);
  EXPECT_EQ(kind_of([&] { FpMatrix(f, std::vector<std::vector<std::int64_t>>{{1, 2}, {3}}); }),
            ErrorKind::InvalidInput);
}

TEST(FpMatrix, ProductTransposeAndApply) {
  const PrimeModulus f(7);
  const FpMatrix a(f, {{1, 2}, {3, 4}}), b(f, {{0, 1}, {1, 0}});
  EXPECT_EQ(a * b, FpMatrix(f, {{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), FpMatrix(f, {{1, 3}, {2, 4}}));
  const std::vector<std::uint32_t> x{1, 1};
  EXPECT_EQ(a.apply(x), (std::vector<std::uint32_t>{3, 0}));
  EXPECT_EQ(FpMatrix::identity(f, 2) * a, a);
  EXPECT_EQ(a.select_columns(IndexSet::of({1})), FpMatrix(f, {{2}, {4}}));
}

TEST(IndexSet, OneBasedRoundTripAndOrder) {
  const auto s = IndexSet::from_one_based({3, 1});
  EXPECT_EQ(s.elements(), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(s.to_string(), "{1,3}");
  EXPECT_LT(IndexSet::of({3}), IndexSet::of({0, 1}));
  EXPECT_LT(IndexSet::of({0, 1}), IndexSet::of({0, 2}));
  EXPECT_TRUE(IndexSet::of({0}).subset_of(s));
}
