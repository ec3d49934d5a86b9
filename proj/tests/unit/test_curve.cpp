#include <gtest/gtest.h>

#include "h10m/curve/curve.hpp"
#include "h10m/curve/endo.hpp"
#include "h10m/errors.hpp"

using namespace h10m::curve;
using h10m::algebra::vars::delta;
using h10m::algebra::vars::z;

namespace {
MPoly Z() { return MPoly(z()); }
RatFunc x2_closed() { return RatFunc::make((Z().pow(2) - 1).pow(2), f_poly().scaled(4)); }
}  // namespace

TEST(Curve, NeutralAndInverse) {
  const Curve& E = Curve::manin_denef();
  CurvePoint g = E.point(RatFunc(Z()), RatFunc(1));
  EXPECT_EQ(E.add(g, E.infinity()), g);
  EXPECT_EQ(E.add(E.infinity(), g), g);
  EXPECT_TRUE(E.add(g, E.negate(g)).is_infinity());
}

TEST(Curve, DoublingGivesX2) {
  const Curve& E = Curve::manin_denef();
  CurvePoint g = E.point(RatFunc(Z()), RatFunc(1));
  CurvePoint d = E.add(g, g);
  EXPECT_EQ(d.x(), x2_closed());
  EXPECT_TRUE(E.residual(d.x(), d.y()).is_zero());
}

TEST(Curve, CaseThreeAddsTwoTorsion) {
  const Curve& E = Curve::manin_denef();
  CurvePoint g = E.point(RatFunc(Z()), RatFunc(1));
  CurvePoint t = E.point(RatFunc(0), RatFunc(0));
  CurvePoint s = E.add(g, t);
  EXPECT_EQ(s.x(), RatFunc(Z()).inverse());
  EXPECT_TRUE(E.residual(s.x(), s.y()).is_zero());
  EXPECT_TRUE(E.add(t, t).is_infinity());
}

TEST(Curve, MixingCurvesIsAnError) {
  CurvePoint g = Curve::manin_denef().point(RatFunc(Z()), RatFunc(1));
  EXPECT_THROW(Curve::nodal_twisted().add(g, g), h10m::DomainError);
}

TEST(Curve, NodalRejectsOneZero) {
  const Curve& N = Curve::nodal();
  CurvePoint bad = N.point(RatFunc(1), RatFunc(0));
  EXPECT_THROW(N.add(bad, N.infinity()), h10m::DomainError);
}

TEST(Endo, SmallMultiples) {
  EndoTable t;
  EXPECT_EQ(t.get(1).x, RatFunc(Z()));
  EXPECT_EQ(t.get(1).y, RatFunc(1));
  EXPECT_EQ(t.get(2).x, x2_closed());
  EXPECT_EQ(t.get(-3).x, t.get(3).x);
  EXPECT_EQ(t.get(-3).y, -t.get(3).y);
  EXPECT_THROW(t.get(0), h10m::DomainError);
}

TEST(Endo, RoutesAgree) {
  EndoTable fast(MultiplyRoute::DivisionPolynomials);
  EndoTable slow(MultiplyRoute::RepeatedAddition);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(fast.get(n).x, slow.get(n).x) << n;
    EXPECT_EQ(fast.get(n).y, slow.get(n).y) << n;
  }
}

TEST(Endo, DegreeGrowth) {
  EndoTable t;
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(t.get(n).x.num().degree(z()), MPoly::Exponent(n * n)) << n;
}

TEST(Endo, OnCurve) {
  EndoTable t;
  const Curve& E = Curve::manin_denef();
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(E.residual(t.get(n).x, t.get(n).y).is_zero()) << n;
}

TEST(Endo, TildeN2) {
  EndoTable t;
  EXPECT_EQ(t.tilde(2).first, RatFunc::make((Z() + 1).pow(2), Z().scaled(4)));
  EXPECT_EQ(t.tilde(1).first, RatFunc(Z()));
}
