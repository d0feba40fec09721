// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cdlab/dilates.hpp>
#include <cdlab/error.hpp>
#include <cdlab/random.hpp>
#include <set>

using namespace cdlab;

namespace {

const PrimeModulus p101(101);

// |l_1 X + ... + l_r X| by nested enumeration into a std::set.
std::size_t naive_dilate_sum(const std::vector<std::int64_t>& l, const std::vector<std::uint32_t>& x, std::int64_t p) {
  std::set<std::int64_t> acc{0};
  for (auto c : l) {
    std::set<std::int64_t> next;
    for (auto s : acc)
      for (auto a : x) next.insert(((s + c * a) % p + p) % p);
    acc = std::move(next);
  }
  return acc.size();
}

std::vector<std::uint32_t> interval(std::uint32_t k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < k; ++i) out.push_back(i);
  return out;
}

}  // namespace

TEST(DilateSpec, RejectsZeroCoefficients) {
  EXPECT_THROW(DilateSpec({1, 101}, p101), Error);
  EXPECT_THROW(DilateSpec({}, p101), Error);
  EXPECT_EQ(DilateSpec({-1, 2}, p101).coefficients(), (std::vector<std::uint32_t>{100, 2}));
}

TEST(DilateSumset, Examples) {
  EXPECT_EQ(dilate_sumset(DilateSpec({1, 1}, p101), {0, 1, 2}), 5U);
  // {0,1,2} + 4{0,1,2} = {0,1,2,4,5,6,8,9,10}.
  EXPECT_EQ(dilate_sumset(DilateSpec({1, 4}, p101), interval(3)), 9U);
  for (std::uint32_t k = 4; k <= 12; ++k) EXPECT_EQ(dilate_sumset(DilateSpec({1, 4}, p101), interval(k)), 5 * k - 4);
  EXPECT_EQ(dilate_sumset(DilateSpec({1}, p101), {3, 17, 40}), 3U);
  EXPECT_THROW(dilate_sumset(DilateSpec({1}, p101), {}), Error);
}

TEST(DilateSumset, MatchesNaiveAndInvariant) {
  Rng rng(71);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_subset(rng, 101, 1 + static_cast<std::uint32_t>(uniform_below(rng, 8)));
    std::vector<std::int64_t> l;
    for (std::uint64_t i = 0, r = 1 + uniform_below(rng, 3); i < r; ++i)
      l.push_back(1 + static_cast<std::int64_t>(uniform_below(rng, 100)));
    const DilateSpec spec(l, p101);
    const auto base = dilate_sumset(spec, x);
    EXPECT_EQ(base, naive_dilate_sum(l, x, 101));
    const auto t_shift = static_cast<std::uint32_t>(uniform_below(rng, 101));
    const auto u = 1 + static_cast<std::uint32_t>(uniform_below(rng, 100));
    std::vector<std::uint32_t> shifted, scaled;
    for (auto a : x) {
      shifted.push_back((a + t_shift) % 101);
      scaled.push_back(a * u % 101);
    }
    EXPECT_EQ(dilate_sumset(spec, residue_set({shifted.begin(), shifted.end()}, p101)), base);
    EXPECT_EQ(dilate_sumset(spec, residue_set({scaled.begin(), scaled.end()}, p101)), base);
  }
}

TEST(RuzsaCheck, Examples) {
  const auto a = interval(5);
  const auto r = ruzsa_check(a, a, 2, p101);
  EXPECT_EQ(r.lhs, 21U);
  // |A + 2A| = 13 on both sides, |A| = 5.
  EXPECT_EQ(r.rhs_num, 169U);
  EXPECT_EQ(r.rhs_den, 5U);
  EXPECT_TRUE(r.holds);
  const auto s = ruzsa_check({7}, {9}, 3, p101);
  EXPECT_EQ(s.lhs, 1U);
  EXPECT_EQ(s.rhs_num, 1U);
  EXPECT_EQ(s.rhs_den, 1U);
  EXPECT_TRUE(s.holds);
}

TEST(RuzsaCheck, HoldsOnRandomInstances) {
  Rng rng(72);
  for (int t = 0; t < 200; ++t) {
    const auto a3 = random_subset(rng, 101, 1 + static_cast<std::uint32_t>(uniform_below(rng, 12)));
    const auto a4 = random_subset(rng, 101, 1 + static_cast<std::uint32_t>(uniform_below(rng, 12)));
    const auto c = 2 + static_cast<std::int64_t>(uniform_below(rng, 98));
    const auto r = ruzsa_check(a3, a4, c, p101);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.holds, r.lhs * r.rhs_den <= r.rhs_num);
    const auto x = random_subset(rng, 101, 1 + static_cast<std::uint32_t>(uniform_below(rng, 12)));
    EXPECT_TRUE(ruzsa_triangle(a3, a4, x, p101).holds);
  }
}

TEST(DilateExperiment, IntervalImagesStayUnderSixteenKSquared) {
  Section4Options quick;
  quick.heuristics = false;
  for (std::uint32_t k = 1; k <= 5; ++k) {
    const auto r = section4_experiment(2, k, p101, 5, quick);
    EXPECT_LE(r.interval_image, 16ULL * k * k);
    EXPECT_EQ(r.interval_cap, 16ULL * k * k);
    EXPECT_LE(r.min_image, r.interval_image);
  }
}

TEST(DilateExperiment, SupkerIsAllLargeSubsetsForGenericC) {
  Section4Options quick;
  quick.heuristics = false;
  for (std::int64_t c = 2; c <= 10; ++c) {
    const auto r = section4_experiment(c, 2, p101, 1, quick);
    EXPECT_TRUE(r.supker_all_large) << c;
    EXPECT_EQ(r.supker.size(), 5U);
  }
  // c = -1 makes columns 3 and 4 proportional.
  const auto r = section4_experiment(100, 2, p101, 1, quick);
  EXPECT_FALSE(r.supker_all_large);
  EXPECT_EQ(r.supker.front(), IndexSet::of({2, 3}));
}

TEST(DilateExperiment, RowsSeedsAndDeterminism) {
  Section4Options o;
  o.seed = 5;
  o.restarts = 10;
  o.steps = 40;
  const auto a = section4_experiment(3, 2, p101, 30, o);
  o.parallelism = 3;
  const auto b = section4_experiment(3, 2, p101, 30, o);
  ASSERT_EQ(a.rows.size(), 32U);
  EXPECT_EQ(a.rows.front().probe, "intervals");
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].seed, b.rows[i].seed);
    EXPECT_EQ(a.rows[i].image_size, b.rows[i].image_size);
  }
  EXPECT_EQ(a.min_image, b.min_image);
  EXPECT_EQ(a.min_witness, b.min_witness);
  EXPECT_TRUE(a.small_p_warning);
  std::uint64_t lowest = ~std::uint64_t{0};
  for (const auto& row : a.rows) lowest = std::min(lowest, row.image_size);
  EXPECT_EQ(a.min_image, lowest);
  EXPECT_FALSE(section4_experiment(2, 1, PrimeModulus(101), 1, o).small_p_warning);
}
