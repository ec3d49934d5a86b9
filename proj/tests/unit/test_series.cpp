#include <gtest/gtest.h>

#include "generators.hpp"
#include "h10m/curve/curve.hpp"
#include "h10m/series/solvers.hpp"

using namespace h10m;
using namespace h10m::series;

namespace {

Var z() { return algebra::vars::z(); }
Var d() { return algebra::vars::delta(); }

QSeries poly_series(const MPoly& p, int trunc) { return series_from_poly(p, z(), trunc); }

QSeries zero_series(int trunc) { return QSeries::from_coeffs(z(), 0, 0, {}, trunc, true); }

bool vanishes(const QSeries& s) { return s.is_zero(); }

MPoly random_upoly(testgen::PolyGen& g, int deg) {
  std::vector<std::pair<std::vector<MPoly::Exponent>, Rational>> t;
  for (int k = 0; k <= deg; ++k) t.push_back({{static_cast<MPoly::Exponent>(k)}, g.coeff()});
  return MPoly::from_dense_terms({z()}, t);
}

}  // namespace

TEST(Series, ZeroSeriesHasValuationAtTruncation) {
  QSeries s = zero_series(5);
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(s.valuation(), 5);
}

TEST(Series, CoefficientVectorLengthMatchesTruncation) {
  QSeries s = poly_series(MPoly(z()).pow(2) + 1, 7);
  EXPECT_EQ(static_cast<int>(s.coeffs().size()), s.trunc() - s.valuation());
  EXPECT_TRUE(s.exact());
}

TEST(Series, InverseOfOneMinusZ) {
  QSeries s = poly_series(MPoly(1) - MPoly(z()), 6);
  QSeries inv = s.inverse();
  for (int k = 0; k < 6; ++k) EXPECT_EQ(inv.coeff(k), 1);
  EXPECT_TRUE(vanishes((s * inv) - poly_series(MPoly(1), 6)));
}

TEST(ExpandAt, SimplePole) {
  RatFunc f = RatFunc::make(MPoly(1), MPoly(z()) - 1);
  QSeries s = expand_at_q(f, z(), 1, 4);
  EXPECT_EQ(s.valuation(), -1);
  EXPECT_EQ(s.coeff(-1), 1);
  for (int k = 0; k < 4; ++k) EXPECT_EQ(s.coeff(k), 0);
}

TEST(ExpandAt, FTildeAtOne) {
  QSeries s = expand_at_q(RatFunc(curve::f_tilde_poly()), z(), 1, 6);
  EXPECT_EQ(s.valuation(), 2);
  // z(z−1)² = ((z−1) + 1)(z−1)²
  EXPECT_EQ(s.coeff(2), 1);
  EXPECT_EQ(s.coeff(3), 1);
  EXPECT_EQ(s.coeff(4), 0);
  EXPECT_TRUE(s.exact());
}

TEST(ExpandAt, QuotientOfX2ByItsNodalSpecialization) {
  MPoly Z(z()), D(d());
  RatFunc x2 = RatFunc::make((Z.pow(2) - 1).pow(2), curve::f_poly().scaled(4));
  RatFunc x2t = RatFunc::make((Z + 1).pow(2), Z.scaled(4));
  FuncSeries s = expand_at(x2 / x2t, d(), -2, 3);
  RatFunc u = RatFunc::make(Z, (Z - 1).pow(2));
  EXPECT_EQ(s.valuation(), 0);
  EXPECT_EQ(s.coeff(0), RatFunc(1));
  EXPECT_EQ(s.coeff(1), -u);
  EXPECT_EQ(s.coeff(2), u * u);
}

TEST(ExpandAt, DenominatorTimesSeriesRecoversNumerator) {
  testgen::PolyGen g(11);
  for (int trial = 0; trial < 30; ++trial) {
    MPoly num = random_upoly(g, g.uniform(0, 4));
    MPoly den = random_upoly(g, g.uniform(0, 4));
    if (den.is_zero() || num.is_zero()) continue;
    Rational c = g.uniform(-2, 2);
    RatFunc f = RatFunc::make(num, den);
    const int order = 8;
    QSeries s = expand_at_q(f, z(), c, order);
    QSeries ns = expand_at_q(RatFunc(f.num()), z(), c, order + 8);
    QSeries ds = expand_at_q(RatFunc(f.den()), z(), c, order + 8);
    QSeries prod = ds * s;
    EXPECT_TRUE(vanishes(prod - ns)) << f.to_string() << " at " << c.get_str();
  }
}

TEST(SolveDiff1, Examples) {
  QSeries g = solve_diff1(poly_series(MPoly(1), 5));
  EXPECT_EQ(g.coeff(0), 2);
  for (int n = 0; n < 6; ++n) {
    QSeries gn = solve_diff1(poly_series(MPoly(z()).pow(n), 8));
    EXPECT_EQ(gn.coeff(n), Rational(2, 2 * n + 1));
  }
  QSeries g2 = solve_diff1(poly_series(MPoly(z()) + 1, 5));
  EXPECT_EQ(g2.coeff(0), 2);
  EXPECT_EQ(g2.coeff(1), Rational(2, 3));
  EXPECT_EQ(g2.trunc(), 5);
}

TEST(SolveDiff1, ResidualVanishesExactly) {
  testgen::PolyGen g(3);
  for (int trial = 0; trial < 25; ++trial) {
    QSeries b = poly_series(random_upoly(g, g.uniform(0, 10)), 16);
    QSeries r = diff1_residual(b, solve_diff1(b));
    EXPECT_TRUE(vanishes(r));
  }
}

TEST(SolveDiff2, Examples) {
  auto s0 = solve_diff2(zero_series(8));
  EXPECT_TRUE(s0.g.is_zero());
  EXPECT_EQ(s0.gamma, 0);

  // g = 0 leaves 0 = b − γ, so a constant b is its own γ
  auto s1 = solve_diff2(poly_series(MPoly(-5), 8));
  EXPECT_TRUE(s1.g.is_zero());
  EXPECT_EQ(s1.gamma, -5);
  EXPECT_TRUE(vanishes(diff2_residual(poly_series(MPoly(-5), 8), s1.g, s1.gamma)));

  auto s2 = solve_diff2(poly_series(MPoly(z()).scaled(3) - 1, 8));
  EXPECT_EQ(s2.gamma, 0);
  EXPECT_EQ(s2.g.coeff(0), 2);
  for (int k = 1; k < s2.g.trunc(); ++k) EXPECT_EQ(s2.g.coeff(k), 0);
  EXPECT_TRUE(vanishes(diff2_residual(poly_series(MPoly(z()).scaled(3) - 1, 8), s2.g, s2.gamma)));
}

TEST(SolveDiff2, ResidualVanishesToOneLessOrder) {
  testgen::PolyGen g(5);
  for (int trial = 0; trial < 25; ++trial) {
    QSeries b = poly_series(random_upoly(g, g.uniform(0, 9)), 14);
    auto s = solve_diff2(b);
    EXPECT_EQ(s.g.trunc(), 13);
    EXPECT_EQ(s.remainder, 0);
    EXPECT_TRUE(vanishes(diff2_residual(b, s.g, s.gamma)));
  }
}

TEST(Represent, Examples) {
  auto c = represent(poly_series(MPoly(7), 10));
  EXPECT_EQ(c.beta, 7);
  EXPECT_EQ(c.gamma, 0);
  EXPECT_TRUE(c.h.is_zero());

  auto l = represent(poly_series(MPoly(z()) - 1, 10));
  EXPECT_EQ(l.beta, 0);
  EXPECT_EQ(l.gamma, 1);
  EXPECT_TRUE(l.h.is_zero());

  MPoly Z(z());
  auto q = represent(poly_series((Z.pow(2).scaled(3) - Z.scaled(4) + 1).scaled(Rational(1, 2)), 10));
  EXPECT_EQ(q.beta, 0);
  EXPECT_EQ(q.gamma, 0);
  EXPECT_EQ(q.h.coeff(0), 1);
  for (int k = 1; k < q.h.trunc(); ++k) EXPECT_EQ(q.h.coeff(k), 0);
  EXPECT_TRUE(q.exact);
}

TEST(Represent, ResidualExamples) {
  RepTriple one{1, 0, zero_series(8), true, 0};
  EXPECT_TRUE(series_residual(poly_series(MPoly(1), 10), one).is_zero());
  QSeries r = series_residual(poly_series(MPoly(z()) - 1, 10), one);
  EXPECT_EQ(r.coeff(0), -2);
  EXPECT_EQ(r.coeff(1), 1);
  for (int k = 2; k < r.trunc(); ++k) EXPECT_EQ(r.coeff(k), 0);
}

TEST(Represent, RoundtripIsExact) {
  testgen::PolyGen g(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int deg = g.uniform(0, 8);
    Rational beta = g.coeff(), gamma = g.coeff();
    QSeries h = poly_series(random_upoly(g, deg), deg + 8);
    QSeries H = rebuild(beta, gamma, h);
    ASSERT_GE(H.trunc(), deg + 4);
    RepTriple rep = represent(H);
    EXPECT_EQ(rep.beta, beta);
    EXPECT_EQ(rep.gamma, gamma);
    EXPECT_EQ(rep.remainder, 0);
    for (int k = 0; k < rep.h.trunc(); ++k) EXPECT_EQ(rep.h.coeff(k), k <= deg ? h.coeff(k) : Rational(0));
    EXPECT_TRUE(series_residual(H, rep).is_zero());
  }
}

TEST(Represent, ResidualOfRandomPolynomialVanishes) {
  testgen::PolyGen g(23);
  for (int trial = 0; trial < 25; ++trial) {
    QSeries H = poly_series(random_upoly(g, g.uniform(0, 12)), 16);
    RepTriple rep = represent(H);
    EXPECT_EQ(rep.h.trunc(), 14);
    EXPECT_TRUE(series_residual(H, rep).is_zero());
  }
}

TEST(Represent, IsLinear) {
  testgen::PolyGen g(29);
  for (int trial = 0; trial < 20; ++trial) {
    QSeries H1 = poly_series(random_upoly(g, g.uniform(0, 8)), 12);
    QSeries H2 = poly_series(random_upoly(g, g.uniform(0, 8)), 12);
    Rational a = g.coeff(), b = g.coeff();
    RepTriple r = represent(H1.scaled(a) + H2.scaled(b));
    RepTriple r1 = represent(H1), r2 = represent(H2);
    EXPECT_EQ(r.beta, a * r1.beta + b * r2.beta);
    EXPECT_EQ(r.gamma, a * r1.gamma + b * r2.gamma);
    EXPECT_TRUE((r.h - (r1.h.scaled(a) + r2.h.scaled(b))).is_zero());
  }
}

TEST(Represent, RejectsLaurentInput) {
  RatFunc f = RatFunc::make(MPoly(1), MPoly(z()));
  EXPECT_THROW(represent(expand_at_q(f, z(), 0, 4)), DomainError);
}
