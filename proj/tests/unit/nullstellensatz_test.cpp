// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cdlab/bounds.hpp>
#include <cdlab/error.hpp>
#include <cdlab/image.hpp>
#include <cdlab/nullstellensatz.hpp>
#include <cdlab/random.hpp>

#include "oracles.hpp"

using namespace cdlab;

namespace {

const PrimeModulus p5(5), p7(7);

SparsePoly uni(PrimeModulus f, std::initializer_list<std::pair<std::uint32_t, std::int64_t>> terms) {
  SparsePoly out(f, 1);
  for (auto [e, c] : terms) out.add_term(Monomial{e}, c);
  return out;
}

SparsePoly random_poly(Rng& rng, PrimeModulus f, std::size_t vars, std::uint32_t max_exp, int terms) {
  SparsePoly out(f, vars);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e(vars);
    for (auto& x : e) x = static_cast<std::uint32_t>(uniform_below(rng, max_exp + 1));
    out.add_term(Monomial(e), static_cast<std::int64_t>(uniform_below(rng, f.value())));
  }
  return out;
}

IdealSpec random_ideal(Rng& rng, PrimeModulus f, std::size_t vars, std::uint32_t max_deg) {
  std::vector<std::vector<std::uint32_t>> roots;
  for (std::size_t i = 0; i < vars; ++i)
    roots.push_back(random_subset(rng, f.value(),
                                  1 + static_cast<std::uint32_t>(uniform_below(rng, std::min(max_deg, f.value())))));
  return IdealSpec::from_root_sets(f, roots);
}

}  // namespace

TEST(VanishingPoly, Examples) {
  const std::vector<std::uint32_t> zero{0}, zero_one{0, 1}, three{1, 2, 4};
  EXPECT_EQ(vanishing_poly(p5, zero), uni(p5, {{1, 1}}));
  EXPECT_EQ(vanishing_poly(p5, zero_one), uni(p5, {{2, 1}, {1, -1}}));
  const auto t3 = vanishing_poly(p7, three);
  EXPECT_EQ(t3, uni(p7, {{3, 1}, {0, 6}}));
  for (std::uint32_t x = 0; x < 7; ++x) {
    const std::vector<std::uint32_t> pt{x};
    EXPECT_EQ(t3.evaluate(pt) == 0, x == 1 || x == 2 || x == 4);
  }
  try {
    (void)vanishing_poly(p5, std::vector<std::uint32_t>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptySet);
  }
}

TEST(IdealSpec, RejectsNonMonic) {
  EXPECT_THROW(IdealSpec({uni(p5, {{2, 2}})}), Error);
  EXPECT_THROW(IdealSpec({uni(p5, {{0, 1}})}), Error);
  const IdealSpec ok({uni(p5, {{2, 1}, {1, -1}})});
  EXPECT_EQ(ok.degrees(), (std::vector<std::uint32_t>{2}));
  EXPECT_EQ(ok.tail(0), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_TRUE(ok.is_legal(Monomial{1}));
  EXPECT_FALSE(ok.is_legal(Monomial{2}));
}

TEST(CanonicalReduce, Examples) {
  const IdealSpec y2y({uni(p5, {{2, 1}, {1, -1}})});
  EXPECT_EQ(canonical_reduce(uni(p5, {{3, 1}}), y2y), uni(p5, {{1, 1}}));
  const auto legal = uni(p5, {{1, 3}, {0, 2}});
  EXPECT_EQ(canonical_reduce(legal, y2y), legal);

  const auto ideal = IdealSpec::from_root_sets(p5, {{0, 1}, {0, 1}});
  const auto y = SparsePoly::variable(p5, 2, 0), z = SparsePoly::variable(p5, 2, 1);
  SparsePoly expect(p5, 2);
  expect.add_term({1, 0}, 1);
  expect.add_term({1, 1}, 2);
  expect.add_term({0, 1}, 1);
  EXPECT_EQ(canonical_reduce((y + z) * (y + z), ideal), expect);
}

TEST(CanonicalReduce, SoundIdempotentLinearAndOrderFree) {
  Rng rng(61);
  for (std::uint32_t p : {2, 3, 5, 7}) {
    const PrimeModulus f(p);
    for (int t = 0; t < 150; ++t) {
      const std::size_t n = 1 + uniform_below(rng, 3);
      const auto ideal = random_ideal(rng, f, n, 3);
      const auto h1 = random_poly(rng, f, n, 6, 5), h2 = random_poly(rng, f, n, 6, 5);
      const auto r1 = canonical_reduce(h1, ideal);
      for (const auto& [mon, c] : r1.terms()) EXPECT_TRUE(ideal.is_legal(mon));
      EXPECT_EQ(canonical_reduce(r1, ideal), r1);
      const std::uint32_t alpha = static_cast<std::uint32_t>(uniform_below(rng, p));
      EXPECT_EQ(canonical_reduce(h1 * alpha + h2, ideal), r1 * alpha + canonical_reduce(h2, ideal));
      std::vector<std::size_t> reversed(n);
      for (std::size_t i = 0; i < n; ++i) reversed[i] = n - 1 - i;
      EXPECT_EQ(canonical_reduce(h1, ideal, reversed), r1);
      // Agreement at every grid point of the generators' roots.
      std::vector<std::vector<std::uint32_t>> roots(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::uint32_t a = 0; a < p; ++a)
          if (ideal.generator(i).evaluate(std::vector<std::uint32_t>{a}) == 0) roots[i].push_back(a);
      std::vector<std::size_t> idx(n, 0);
      std::vector<std::uint32_t> pt(n);
      while (true) {
        for (std::size_t i = 0; i < n; ++i) pt[i] = roots[i][idx[i]];
        EXPECT_EQ(r1.evaluate(pt), h1.evaluate(pt));
        std::size_t i = 0;
        while (i < n && ++idx[i] == roots[i].size()) idx[i++] = 0;
        if (i == n) break;
      }
    }
  }
}

TEST(CanonicalReduce, ReducedFormIsUniqueAndPreservesValues) {
  Rng rng(62);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + uniform_below(rng, 3);
    const auto ideal = random_ideal(rng, p7, n, 4);
    const auto h = random_poly(rng, p7, n, 5, 5);
    if (h.is_zero()) continue;
    const auto r = canonical_reduce(h, ideal);
    const auto deg = static_cast<std::uint64_t>(h.degree());
    for (const auto& [mon, c] : h.terms())
      if (mon.degree() == deg && ideal.is_legal(mon)) EXPECT_EQ(r.coefficient(mon), c);
    for (const auto& [mon, c] : r.terms())
      if (mon.degree() == deg) EXPECT_TRUE(h.appears(mon));
  }
}

TEST(NssCheck, Examples) {
  const SetSystem grid(p5, std::vector<std::vector<std::int64_t>>{{0, 1}, {0, 1, 2}});
  const auto ideal = IdealSpec::from_grid(grid);
  SparsePoly p1(p5, 2);
  for (const auto& [mon, c] : ideal.generator(0).terms()) p1.add_term({mon[0], 0}, c);
  const auto member = p1 * (SparsePoly::variable(p5, 2, 1) + SparsePoly::constant(p5, 2, 3));
  auto o = nss_check(member, grid);
  EXPECT_TRUE(o.vanishes);
  EXPECT_TRUE(o.reduced_is_zero);
  o = nss_check(SparsePoly::constant(p5, 2, 1), grid);
  EXPECT_FALSE(o.vanishes);
  EXPECT_FALSE(o.reduced_is_zero);
}

TEST(NssCheck, RandomEquivalence) {
  Rng rng(63);
  const SetSystem grid(p5, std::vector<std::vector<std::int64_t>>{{0, 1}, {0, 1, 2}});
  int vanishing = 0;
  for (int t = 0; t < 500; ++t) {
    auto h = random_poly(rng, p5, 2, 4, 1 + static_cast<int>(uniform_below(rng, 5)));
    if (t % 2 == 0) {
      // Force vanishing on the grid with the product of root factors.
      SparsePoly q(p5, 2);
      q.add_term({2, 0}, 1);
      q.add_term({1, 0}, -1);
      h = h * q;
    }
    const auto o = nss_check(h, grid);
    vanishing += o.vanishes;
    EXPECT_EQ(o.vanishes, o.reduced_is_zero);
  }
  EXPECT_GE(vanishing, 250);
}

TEST(NssSuite, NoDisagreements) {
  for (std::uint32_t p : {2, 3, 5, 7})
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto r = nss_suite(PrimeModulus(p), n, 200, 3, 7);
      EXPECT_EQ(r.disagreements, 0U);
      EXPECT_GT(r.vanishing, 0U);
      EXPECT_LT(r.vanishing, r.instances);
    }
}

TEST(Gamma, Examples) {
  EXPECT_EQ(gamma_set({2}, 2), (std::vector<Monomial>{{0, 0}, {1, 0}, {1, 1}}));
  EXPECT_EQ(gamma_set({2, 3}, 1).size(), 6U);
  EXPECT_EQ(gamma_set({2, 2}, 2).size(), 7U);
}

TEST(Gamma, CountsAndPhiRoundTrip) {
  for (std::size_t m = 1; m <= 3; ++m) {
    std::vector<std::uint32_t> k(m, 1);
    while (true) {
      for (std::uint32_t kh = 1; kh <= 4; ++kh) {
        const auto gamma = gamma_set(k, kh);
        // Oracle: direct enumeration of the defining conditions.
        std::uint64_t count = 0;
        std::vector<std::uint32_t> e(m + 1, 0);
        while (true) {
          bool sat = false;
          for (std::size_t i = 0; i < m; ++i) sat = sat || e[i] == k[i] - 1;
          count += e[m] == 0 || sat;
          std::size_t i = 0;
          while (i <= m && ++e[i] == (i < m ? k[i] : kh)) e[i++] = 0;
          if (i > m) break;
        }
        std::uint64_t prod = 1, prod1 = 1;
        for (auto v : k) {
          prod *= v;
          prod1 *= v - 1;
        }
        EXPECT_EQ(gamma.size(), count);
        EXPECT_EQ(gamma.size(), kh * prod - (kh - 1) * prod1);
        const auto delta = delta_set(k, kh);
        EXPECT_EQ(std::set<Monomial>(delta.begin(), delta.end()).size(), gamma.size());
        for (const auto& g : gamma) {
          const auto d = phi(g, k, kh);
          EXPECT_EQ(d.degree(), g.degree());
          EXPECT_EQ(phi_inverse(d, k, kh), g);
          EXPECT_EQ(phi(phi_inverse(d, k, kh), k, kh), d);
        }
      }
      std::size_t i = 0;
      while (i < m && ++k[i] > 4) k[i++] = 1;
      if (i == m) break;
    }
  }
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi(Monomial{1, 0, 1}, {2, 2}, 2), (Monomial{2, 0}));
  EXPECT_EQ(phi(Monomial{1, 1, 0}, {2, 2}, 2), (Monomial{1, 1}));
  EXPECT_EQ(phi_inverse(Monomial{2, 0}, {2, 2}, 2), (Monomial{1, 0, 1}));
  auto kind = [](const std::function<void()>& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidInput;
  };
  EXPECT_EQ(kind([] { (void)phi(Monomial{0, 0, 1}, {2, 2}, 2); }), ErrorKind::NotInDomain);
  EXPECT_EQ(kind([] { (void)phi_inverse(Monomial{3, 0}, {2, 2}, 2); }), ErrorKind::NotInDomain);
  EXPECT_EQ(kind([] { (void)phi_inverse(Monomial{2, 2}, {2, 2}, 2); }), ErrorKind::NotInDomain);
}

TEST(DeltaOrdering, Examples) {
  const auto ord = delta_ordering(delta_set({2}, 2), {2}, 2);
  ASSERT_EQ(ord.size(), 3U);
  EXPECT_EQ(ord[0].delta, Monomial{0});
  EXPECT_EQ(ord[1].delta, Monomial{1});
  EXPECT_EQ(ord[2].delta, Monomial{2});
  EXPECT_EQ(ord[2].witness, (Monomial{1, 1}));
  const auto two = delta_ordering(delta_set({2, 2}, 3), {2, 2}, 3);
  for (std::size_t i = 1; i < two.size(); ++i) {
    const auto &a = two[i - 1], &b = two[i];
    ASSERT_LE(a.delta.degree(), b.delta.degree());
    if (a.delta.degree() == b.delta.degree()) {
      ASSERT_GE(a.witness[2], b.witness[2]);
      if (a.witness[2] == b.witness[2]) EXPECT_LT(a.delta.exponents(), b.delta.exponents());
    }
  }
}

TEST(ShiftedExpansion, MatchesRepeatedMultiplication) {
  for (std::uint32_t p : {2, 3, 5, 7})
    for (std::uint32_t a = 0; a <= 4; ++a)
      for (std::uint32_t b = 0; b <= 4; ++b) {
        const auto got = shifted_expansion(Monomial{a, b}, PrimeModulus(p));
        const auto want = oracle::shifted({a, b}, p);
        EXPECT_EQ(got.terms().size(), want.size());
        for (const auto& [e, c] : want) EXPECT_EQ(got.coefficient(Monomial(e)), c);
      }
}

TEST(VerifyOrdering, Examples) {
  auto report = [](std::vector<std::uint32_t> k, std::uint32_t kh, std::uint32_t p) {
    auto degrees = k;
    degrees.push_back(kh);
    return verify_ordering(delta_ordering(delta_set(k, kh), k, kh), IdealSpec::from_degrees(PrimeModulus(p), degrees));
  };
  const auto one = report({2}, 2, 5);
  EXPECT_TRUE(one.ok());
  EXPECT_EQ(one.entries, 3U);
  const auto two = report({2, 2}, 2, 5);
  EXPECT_TRUE(two.ok());
  EXPECT_EQ(two.entries, 7U);
  const auto bad = report({2}, 2, 2);
  EXPECT_FALSE(bad.ok());
  EXPECT_GE(bad.count('a'), 1U);
}

TEST(VerifyOrdering, AllPropertiesWithPrecondition) {
  for (std::size_t m = 1; m <= 2; ++m) {
    std::vector<std::uint32_t> k(m, 1);
    while (true) {
      for (std::uint32_t kh = 1; kh <= 3; ++kh) {
        const auto need = kh + *std::max_element(k.begin(), k.end()) - 1;
        std::uint32_t p = std::max(2U, need);
        while (!is_prime(p)) ++p;
        auto degrees = k;
        degrees.push_back(kh);
        const auto ord = delta_ordering(delta_set(k, kh), k, kh);
        const auto rep = verify_ordering(ord, IdealSpec::from_degrees(PrimeModulus(p), degrees));
        EXPECT_TRUE(rep.ok()) << (rep.ok() ? "" : rep.violations.front().detail);
        // (a) coefficient is 1 or binom(l, k_j - 1).
        for (const auto& [delta, mon] : ord) {
          const auto c = shifted_expansion(delta, PrimeModulus(p)).coefficient(mon);
          bool matches = c == 1;
          for (std::size_t j = 0; j < m; ++j)
            matches = matches || c == static_cast<std::uint32_t>(oracle::binomial(delta[j], k[j] - 1) % p);
          EXPECT_TRUE(matches);
        }
      }
      std::size_t i = 0;
      while (i < m && ++k[i] > 3) k[i++] = 1;
      if (i == m) break;
    }
  }
}

TEST(Interpolate, Examples) {
  const std::vector<Monomial> delta{{0}, {1}, {2}};
  const auto f0 = interpolate_in_delta(delta, {}, p5);
  EXPECT_FALSE(f0.is_zero());
  const auto f = interpolate_in_delta(delta, {{0}, {1}}, p5);
  EXPECT_FALSE(f.is_zero());
  EXPECT_EQ(f.evaluate(std::vector<std::uint32_t>{0}), 0U);
  EXPECT_EQ(f.evaluate(std::vector<std::uint32_t>{1}), 0U);
  EXPECT_EQ(f.coefficient({2}), p5.neg(f.coefficient({1})));
  try {
    (void)interpolate_in_delta(delta, {{0}, {1}, {2}}, p5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoSolution);
  }
}

TEST(Contradiction, FullSumsetLeavesNoRoomAndTruncationSurvives) {
  for (std::uint32_t p : {5, 7}) {
    const PrimeModulus f(p);
    for (std::uint32_t a = 1; a <= 3; ++a)
      for (std::uint32_t b = 1; b <= 3; ++b)
        for (std::uint32_t kh = 1; kh <= 3; ++kh) {
          const std::vector<std::uint32_t> k{a, b};
          if (!gencd_precondition({k, kh, f})) continue;
          std::vector<std::vector<std::uint32_t>> u{{}, {}};
          for (std::uint32_t i = 0; i < a; ++i) u[0].push_back(i);
          for (std::uint32_t i = 0; i < b; ++i) u[1].push_back(i);
          std::vector<std::uint32_t> v;
          for (std::uint32_t i = 0; i < kh; ++i) v.push_back(i);
          std::set<std::vector<std::uint32_t>> c;
          for (auto x : u[0])
            for (auto y : u[1])
              for (auto z : v) c.insert({f.add(x, z), f.add(y, z)});
          const auto delta = delta_set(k, kh);
          ASSERT_EQ(c.size(), delta.size());
          std::vector<std::vector<std::uint32_t>> full(c.begin(), c.end());
          EXPECT_THROW(interpolate_in_delta(delta, full, f), Error);

          const auto ord = delta_ordering(delta, k, kh);
          const auto ideal = IdealSpec::from_root_sets(f, {u[0], u[1], v});
          std::vector<std::vector<std::uint32_t>> truncated(full.begin(), full.end() - 1);
          const auto g = interpolate_in_delta(delta, truncated, f);
          for (const auto& pt : truncated) EXPECT_EQ(g.evaluate(pt), 0U);
          const auto check = check_contradiction(g, ord, ideal);
          EXPECT_TRUE(check.reduced_nonzero);
          EXPECT_NE(check.witness_coefficient, 0U);
          EXPECT_EQ(check.top_witness, phi_inverse(check.top, k, kh));
        }
  }
}
