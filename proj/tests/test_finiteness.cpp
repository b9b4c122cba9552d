#include "nefcone/errors.hpp"
#include "nefcone/finiteness.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace nefcone;

namespace {

Bound to_bound(const oracle::Endpoint& e) {
  return e.sqrt ? Bound::sqrt(Rational(e.p, e.q)) : Bound::rational(Rational(e.p, e.q));
}

}  // namespace

TEST(SimplestRational, Examples) {
  EXPECT_EQ(simplest_rational_in(Bound::sqrt(2), Bound::rational(Rational(11, 5))), Rational(2));
  EXPECT_EQ(simplest_rational_in(Bound::sqrt(5), Bound::rational(Rational(16, 7))), Rational(9, 4));
  EXPECT_EQ(simplest_rational_in(Bound::rational(Rational(1, 3)), Bound::rational(Rational(1, 2))), Rational(2, 5));
  EXPECT_EQ(simplest_rational_in(Bound::rational(0), Bound::rational(Rational(1, 1000))), Rational(1, 1001));
  EXPECT_EQ(simplest_rational_in(Bound::rational(1000), Bound::rational(Rational(10001, 10))), Rational(11001, 11));
  EXPECT_THROW(simplest_rational_in(Bound::rational(3), Bound::rational(3)), PreconditionError);
  EXPECT_THROW(simplest_rational_in(Bound::sqrt(5), Bound::rational(2)), PreconditionError);
}

TEST(SimplestRational, AgreesWithDenominatorScan) {
  std::mt19937_64 rng(20260407);
  std::uniform_int_distribution<std::int64_t> num(0, 400), den(1, 60);
  std::bernoulli_distribution coin(0.5);
  int checked = 0;
  while (checked < 200) {
    oracle::Endpoint lo{coin(rng), num(rng), den(rng)};
    oracle::Endpoint hi{coin(rng), num(rng), den(rng)};
    const Bound blo = to_bound(lo), bhi = to_bound(hi);
    if (!(blo < bhi)) continue;
    const auto expected = oracle::simplest_by_scan(lo, hi);
    if (!expected) continue;
    ++checked;
    const Rational got = simplest_rational_in(blo, bhi);
    ASSERT_EQ(got, Rational(expected->first, expected->second)) << blo.exact() << " " << bhi.exact();
    ASSERT_LT(blo, got);
    ASSERT_LT(Bound::rational(got), bhi);
  }
}

TEST(EulerChar, Polynomials) {
  const Quadratic two = euler_char_polynomial(2, Rational(2));
  EXPECT_EQ(two.c0, 0);
  EXPECT_EQ(two.c1, 0);
  EXPECT_EQ(two.c2, 1);

  const Quadratic four = euler_char_polynomial(4, Rational(5, 2));
  EXPECT_EQ(four.c2, Rational(9, 8));
  EXPECT_EQ(four.c0, 3);
  EXPECT_EQ(four.c1, -Rational(17, 4));
  EXPECT_THROW(euler_char_polynomial(4, Rational(2)), PreconditionError);
}

TEST(EulerChar, ConstantTermIsChiOfStructureSheaf) {
  // chi(O) = 1 - q + p_g with q = g and p_g = g(g-1)/2
  for (std::int64_t g = 2; g <= 40; ++g) {
    const Quadratic p = euler_char_polynomial(g, Rational(g));
    EXPECT_EQ(p.c0, Rational(1 - g + g * (g - 1) / 2));
    EXPECT_EQ(p(Rational(0)), p.c0);
  }
}

TEST(MinK, Goldens) {
  EXPECT_EQ(min_k(2, Rational(2)), 1);
  EXPECT_EQ(min_k(4, Rational(5, 2)), 4);
  EXPECT_EQ(min_k(5, Rational(9, 4)), oracle::min_k_scan(5, 9, 4));
}

TEST(MinK, AgreesWithScan) {
  for (std::int64_t g = 2; g <= 30; ++g)
    for (std::int64_t q = 1; q <= 6; ++q)
      for (std::int64_t p = 1; p <= 8 * q; ++p) {
        if (std::gcd(p, q) != 1 || p * p <= g * q * q) continue;
        ASSERT_EQ(min_k(g, Rational(p, q)), oracle::min_k_scan(g, p, q)) << g << " " << p << "/" << q;
      }
}

TEST(CandidateTaus, WorkedExample) {
  const FinitenessReport r = candidate_taus(2, Rational(11, 5));
  EXPECT_EQ(r.s, 2);
  EXPECT_EQ(r.k, 1);
  EXPECT_EQ(r.n_max, 2);
  EXPECT_EQ(r.gamma_max, 3);
  EXPECT_EQ(r.candidates, (std::vector<Rational>{3, 4, 6}));
}

TEST(CandidateTaus, EmptyAboveAllCandidates) {
  const FinitenessReport r = candidate_taus(2, Rational(7));
  EXPECT_EQ(r.s, 2);
  EXPECT_EQ(r.k, 1);
  EXPECT_EQ(r.n_max, 2);
  EXPECT_EQ(r.gamma_max, 3);
  EXPECT_TRUE(r.candidates.empty());
}

TEST(CandidateTaus, Preconditions) {
  EXPECT_THROW(candidate_taus(9, Rational(3)), PreconditionError);
  EXPECT_THROW(candidate_taus(1, Rational(3)), PreconditionError);
  EXPECT_THROW(candidate_taus(2, Rational(3), Rational(3)), PreconditionError);
  EXPECT_THROW(candidate_taus(2, Rational(3), Rational(1)), PreconditionError);
  EXPECT_NO_THROW(candidate_taus(2, Rational(3), Rational(5, 2)));
}

TEST(CandidateTaus, AgreesWithNaiveEnumeration) {
  for (std::int64_t g = 2; g <= 12; ++g)
    for (std::int64_t aq = 1; aq <= 4; ++aq)
      for (std::int64_t ap = 1; ap <= 6 * aq; ++ap) {
        if (std::gcd(ap, aq) != 1 || ap * ap <= g * aq * aq) continue;
        const Rational s = simplest_rational_in(Bound::sqrt(Rational(g)), Bound::rational(Rational(ap, aq)));
        if (min_k(g, s) * numerator(s) > 400) continue;
        const FinitenessReport r = candidate_taus(g, Rational(ap, aq));
        const auto naive = oracle::candidates(g, ap, aq, static_cast<std::int64_t>(r.n_max),
                                              static_cast<std::int64_t>(r.gamma_max));
        std::set<Rational> expected;
        for (const auto& [p, q] : naive) expected.insert(Rational(p, q));
        ASSERT_EQ(std::vector<Rational>(expected.begin(), expected.end()), r.candidates);
        EXPECT_EQ(r.n_max, r.k * r.s);
        EXPECT_EQ(r.gamma_max, r.k * (r.s + 1));
      }
}

TEST(CandidateTausProperty, MonotoneInAlpha) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::int64_t> genus(2, 10), num(1, 40), den(1, 5);
  int done = 0;
  while (done < 50) {
    const std::int64_t g = genus(rng);
    Rational a1(num(rng), den(rng)), a2(num(rng), den(rng));
    if (a2 < a1) std::swap(a1, a2);
    if (a1 * a1 <= g || a1 == a2) continue;
    // fix s so both runs use the same divisor
    const Rational s = simplest_rational_in(Bound::sqrt(Rational(g)), Bound::rational(a1));
    if (min_k(g, s) * (numerator(s) + denominator(s)) > 2000) continue;
    const auto r1 = candidate_taus(g, a1, s), r2 = candidate_taus(g, a2, s);
    ++done;
    const std::set<Rational> big(r1.candidates.begin(), r1.candidates.end());
    for (const auto& c : r2.candidates) EXPECT_TRUE(big.count(c));
    for (const auto& c : r1.candidates) EXPECT_GE(c, a1);
  }
}
