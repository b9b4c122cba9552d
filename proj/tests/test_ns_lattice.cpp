#include "nefcone/errors.hpp"
#include "nefcone/ns_lattice.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nefcone;

namespace {

DivClass cls(std::int64_t g, std::int64_t n, std::int64_t gamma) { return {Genus(g), n, gamma}; }

}  // namespace

TEST(Numeric, ParseRational) {
  EXPECT_EQ(parse_rational("16/7"), Rational(16, 7));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_THROW(parse_rational("2.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1e3"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Numeric, FloorCeilAndDecimal) {
  EXPECT_EQ(floor(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil(Rational(-7, 2)), -3);
  EXPECT_EQ(floor(Rational(7, 2)), 3);
  EXPECT_EQ(ceil(Rational(6, 3)), 2);
  EXPECT_EQ(to_decimal(Rational(16, 7)), "2.285714");
  EXPECT_EQ(to_decimal(Rational(2, 3)), "0.666667");
  EXPECT_EQ(to_decimal(Rational(-1, 3)), "-0.333333");
  EXPECT_EQ(to_string(Rational(18, 10)), "9/5");
  EXPECT_EQ(isqrt(Integer(1'000'001)), 1000);
  EXPECT_TRUE(is_perfect_square(Integer(144)));
  EXPECT_FALSE(is_perfect_square(Integer(-4)));
}

TEST(Lattice, PairingGoldenValues) {
  EXPECT_EQ(intersect(cls(4, 3, 1), cls(4, 3, 1)), 5);
  EXPECT_EQ(intersect(cls(4, 5, 2), cls(4, 5, 2)), 9);
  EXPECT_EQ(intersect(cls(7, 1, 0), cls(7, 1, 0)), 1);
  EXPECT_EQ(self_intersection(diagonal(Genus(3))), -8);
  EXPECT_EQ(self_intersection(diagonal(Genus(3))), 4 - 4 * 3);
  // x . delta = 2
  EXPECT_EQ(intersect(x_class(Genus(6)), diagonal(Genus(6))), 2);
}

TEST(Lattice, GenusMismatchThrows) {
  EXPECT_THROW(intersect(cls(4, 1, 0), cls(5, 1, 0)), GenusMismatch);
  EXPECT_THROW((void)(cls(4, 1, 0) + cls(3, 1, 0)), GenusMismatch);
  EXPECT_THROW(Genus(-1), PreconditionError);
}

TEST(Lattice, FromBasis) {
  const QClass c = from_basis(Genus(3), Rational(16), Rational(-6));
  EXPECT_EQ(c.n(), 10);
  EXPECT_EQ(c.gamma(), 6);
  EXPECT_EQ(from_basis(Genus(2), Integer(1), Integer(0)), x_class(Genus(2)));
  const DivClass half = from_basis(Genus(5), Integer(0), Integer(1));
  EXPECT_EQ(half, half_diagonal(Genus(5)));
  EXPECT_EQ(self_intersection(half), 1 - 5);
}

TEST(Lattice, DistinguishedClasses) {
  EXPECT_EQ(canonical_class(Genus(2)), cls(2, 1, 1));
  EXPECT_EQ(canonical_class(Genus(4)), cls(4, 5, 1));
  EXPECT_EQ(x_degree(canonical_class(Genus(5))), 7);
  EXPECT_EQ(canonical_class(Genus(5)).coeff_x(), 8);
  EXPECT_EQ(canonical_class(Genus(5)).coeff_half_delta(), -1);
  // K^2 = -1 on the blown-up abelian surface at g = 2
  EXPECT_EQ(self_intersection(canonical_class(Genus(2))), -1);

  EXPECT_EQ(diagonal_dual(Genus(2)), cls(2, 2, -1));
  EXPECT_EQ(intersect(diagonal_dual(Genus(4)), diagonal(Genus(4))), 0);
  for (std::int64_t n = -5; n <= 5; ++n)
    for (std::int64_t gamma = -5; gamma <= 5; ++gamma)
      EXPECT_EQ(intersect(diagonal_dual(Genus(4)), cls(4, n, gamma)), 4 * (n + gamma));
  EXPECT_THROW(diagonal_dual(Genus(0)), PreconditionError);
}

TEST(Lattice, TauFromClass) {
  EXPECT_EQ(tau_from_class(cls(3, 10, 6)), Rational(9, 5));
  EXPECT_EQ(tau_from_class(cls(4, 2, 1)), 2);
  EXPECT_EQ(tau_from_class(cls(2, 1, 1)), 2);
  EXPECT_THROW(tau_from_class(cls(4, 0, 1)), PreconditionError);
  EXPECT_THROW(tau_from_class(cls(4, 3, 0)), PreconditionError);
  EXPECT_THROW(tau_from_class(cls(4, 3, -1)), PreconditionError);
}

TEST(LatticeProperty, AgreesWithGramMatrix) {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<std::int64_t> coord(-1000, 1000);
  for (std::int64_t g = 0; g <= 10; ++g) {
    for (int i = 0; i < 1000; ++i) {
      const std::int64_t cx1 = coord(rng), cd1 = coord(rng), cx2 = coord(rng), cd2 = coord(rng);
      const DivClass d = from_basis(Genus(g), Integer(cx1), Integer(cd1));
      const DivClass e = from_basis(Genus(g), Integer(cx2), Integer(cd2));
      ASSERT_EQ(intersect(d, e), oracle::gram_pairing(g, cx1, cd1, cx2, cd2)) << "g=" << g;
    }
  }
}

TEST(LatticeProperty, BilinearAndSymmetric) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> coord(-50, 50);
  std::uniform_int_distribution<std::int64_t> genus(0, 12);
  auto rnd_q = [&] { return Rational(coord(rng), 1 + (coord(rng) + 50) % 9); };
  for (int i = 0; i < 10'000; ++i) {
    const Genus g(genus(rng));
    const QClass d(g, rnd_q(), rnd_q()), e(g, rnd_q(), rnd_q()), f(g, rnd_q(), rnd_q());
    const Rational a = rnd_q(), b = rnd_q();
    ASSERT_EQ(intersect(a * d + b * e, f), a * intersect(d, f) + b * intersect(e, f));
    ASSERT_EQ(intersect(d, e), intersect(e, d));
  }
}

TEST(LatticeProperty, CoordinateRoundTrip) {
  const Genus g(3);
  for (std::int64_t n = -1000; n <= 1000; ++n)
    for (std::int64_t gamma = -1000; gamma <= 1000; ++gamma) {
      const DivClass d(g, n, gamma);
      const DivClass back = from_basis(g, d.coeff_x(), d.coeff_half_delta());
      if (back.n() != n || back.gamma() != gamma) FAIL() << n << "," << gamma;
    }
}

TEST(LatticeProperty, AdditionComponentwiseInBothCoordinates) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> coord(-1000, 1000);
  for (int i = 0; i < 1000; ++i) {
    const DivClass d(Genus(4), coord(rng), coord(rng)), e(Genus(4), coord(rng), coord(rng));
    const DivClass s = d + e;
    ASSERT_EQ(s.coeff_x(), d.coeff_x() + e.coeff_x());
    ASSERT_EQ(s.coeff_half_delta(), d.coeff_half_delta() + e.coeff_half_delta());
  }
}

TEST(LatticeProperty, GramDeterminant) {
  // det [[1,1],[1,1-g]] = -g
  for (std::int64_t g = 0; g <= 20; ++g) {
    const Genus G(g);
    const Integer xx = intersect(x_class(G), x_class(G));
    const Integer xd = intersect(x_class(G), half_diagonal(G));
    const Integer dd = intersect(half_diagonal(G), half_diagonal(G));
    EXPECT_EQ(xx * dd - xd * xd, -g);
  }
}
