// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cdlab/error.hpp>
#include <cdlab/poly.hpp>
#include <cdlab/random.hpp>
#include <sstream>

using namespace cdlab;

namespace {

const PrimeModulus p5(5), p7(7);

SparsePoly random_poly(Rng& rng, PrimeModulus f, std::size_t vars, std::uint32_t max_exp, int terms) {
  SparsePoly out(f, vars);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e(vars);
    for (auto& x : e) x = static_cast<std::uint32_t>(uniform_below(rng, max_exp + 1));
    out.add_term(Monomial(e), static_cast<std::int64_t>(uniform_below(rng, f.value())));
  }
  return out;
}

}  // namespace

TEST(Monomial, DegreeProductAndOrder) {
  const Monomial a{1, 2}, b{0, 3};
  EXPECT_EQ(a.degree(), 3U);
  EXPECT_EQ(a * b, (Monomial{1, 5}));
  EXPECT_TRUE(GrlexGreater{}(Monomial{0, 4}, a));
  EXPECT_TRUE(GrlexGreater{}(Monomial{3, 0}, a));
}

TEST(SparsePoly, Examples) {
  const auto y = SparsePoly::variable(p5, 2, 0), z = SparsePoly::variable(p5, 2, 1);
  EXPECT_EQ((y + z) * (y - z), SparsePoly::term(p5, {2, 0}, 1) - SparsePoly::term(p5, {0, 2}, 1));

  const auto y1 = SparsePoly::variable(p7, 2, 0), y2 = SparsePoly::variable(p7, 2, 1);
  const std::vector<std::uint32_t> pt{2, 3};
  EXPECT_EQ((y1 + y2).evaluate(pt), 5U);

  const auto t = SparsePoly::variable(p7, 1, 0);
  auto prod = SparsePoly::constant(p7, 1, 1);
  for (int a : {0, 1, 2}) prod = prod * (t - SparsePoly::constant(p7, 1, a));
  SparsePoly expect(p7, 1);
  expect.add_term({3}, 1);
  expect.add_term({2}, 4);
  expect.add_term({1}, 2);
  EXPECT_EQ(prod, expect);
}

TEST(SparsePoly, NoZeroTermsAndDegrees) {
  SparsePoly f(p5, 2);
  f.add_term({1, 1}, 3);
  f.add_term({1, 1}, 2);
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.degree(), -1);
  f.add_term({2, 1}, 1);
  f.add_term({0, 4}, -1);
  EXPECT_EQ(f.degree(), 4);
  EXPECT_EQ(f.degree_in(0), 2);
  EXPECT_EQ(f.coefficient({0, 4}), 4U);
  EXPECT_FALSE(f.appears({1, 1}));
  for (const auto& [mon, c] : f.terms()) EXPECT_NE(c, 0U);
  std::ostringstream os;
  os << f;
  EXPECT_FALSE(os.str().empty());
}

TEST(SparsePoly, MismatchesRejected) {
  const auto a = SparsePoly::variable(p5, 1, 0);
  try {
    (void)(a + SparsePoly::variable(p7, 1, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ModulusMismatch);
  }
  EXPECT_THROW((void)(a * SparsePoly::variable(p5, 2, 0)), Error);
}

TEST(SparsePoly, RingAxiomsAndEvaluationHomomorphism) {
  Rng rng(51);
  for (int t = 0; t < 200; ++t) {
    const auto f = random_poly(rng, p7, 3, 3, 4), g = random_poly(rng, p7, 3, 3, 4), h = random_poly(rng, p7, 3, 2, 3);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f + g) * h, f * h + g * h);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_TRUE((f - f).is_zero());
    std::vector<std::uint32_t> pt(3);
    for (auto& x : pt) x = static_cast<std::uint32_t>(uniform_below(rng, 7));
    EXPECT_EQ((f * g).evaluate(pt), p7.mul(f.evaluate(pt), g.evaluate(pt)));
    EXPECT_EQ((f + g).evaluate(pt), p7.add(f.evaluate(pt), g.evaluate(pt)));
    EXPECT_EQ((f * 3).evaluate(pt), p7.mul(f.evaluate(pt), 3));
  }
}
