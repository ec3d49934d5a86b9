#include <gtest/gtest.h>

#include <random>

#include "h10m/curve/checks.hpp"
#include "h10m/errors.hpp"

using namespace h10m;
using namespace h10m::curve;

namespace {

MPoly Z() { return MPoly(algebra::vars::z()); }

CurvePoint multiple(int n) {
  const Curve& E = Curve::manin_denef();
  if (n == 0) return E.infinity();
  EndoPair p = multiply_point(n);
  return E.point_unchecked(p.x, p.y);
}

}  // namespace

TEST(CheckMD, Examples) {
  EXPECT_TRUE(check_md(RatFunc(Z()), RatFunc(1)).is_zero());
  EndoPair p5 = multiply_point(5);
  EXPECT_TRUE(check_md(p5.x, p5.y).is_zero());
  EXPECT_EQ(check_md(RatFunc(Z()), RatFunc(2)), RatFunc(f_poly().scaled(3)));
}

TEST(CheckMD, EveryEndoPairIsOnTheCurve) {
  for (int n = -10; n <= 10; ++n) {
    if (n == 0) continue;
    EndoPair p = multiply_point(n);
    EXPECT_TRUE(check_md(p.x, p.y).is_zero()) << n;
  }
}

TEST(CheckMD, NegationSymmetry) {
  for (int n = 1; n <= 9; ++n) {
    EXPECT_EQ(multiply_point(-n).x, multiply_point(n).x);
    EXPECT_EQ(multiply_point(-n).y, -multiply_point(n).y);
  }
}

TEST(SpecializeTilde, Examples) {
  auto [x1, y1] = shared_endo_table().tilde(1);
  EXPECT_EQ(x1, RatFunc(Z()));
  EXPECT_EQ(y1, RatFunc(1));
  auto [x2, y2] = shared_endo_table().tilde(2);
  EXPECT_EQ(x2, RatFunc::make((Z() + 1).pow(2), Z().scaled(4)));
  auto [x4, y4] = shared_endo_table().tilde(4);
  EXPECT_TRUE(check_md_tilde(x4, y4).is_zero());
}

TEST(SpecializeTilde, NeverRaisesOnTheRange) {
  for (int n = -16; n <= 16; ++n) {
    if (n == 0) continue;
    EXPECT_NO_THROW(shared_endo_table().tilde(n)) << n;
  }
}

TEST(SpecializeTilde, RaisesWhenDeltaPlusTwoDividesTheDenominator) {
  const MPoly d(algebra::vars::delta());
  EndoPair bad{7, RatFunc::make(Z(), d + 2), RatFunc(1)};
  EXPECT_THROW(specialize_tilde(bad), LemmaViolation);
  EndoPair zero_y{7, RatFunc(Z()), RatFunc(d + 2)};
  EXPECT_THROW(specialize_tilde(zero_y), LemmaViolation);
}

TEST(Wellknown, SmallAndModerateN) {
  for (int n : {1, 2, 7, -3}) EXPECT_TRUE(check_wellknown(n).is_zero()) << n;
}

TEST(Wellknown, DetectsAWrongFactor) {
  EndoPair p = multiply_point(3);
  RatFunc r = p.x.differentiate(algebra::vars::z()) - RatFunc(2) * p.y;
  EXPECT_FALSE(r.is_zero());
}

TEST(ProductFormulas, Examples) {
  EXPECT_TRUE(check_product_formulas(2, 1).all_zero());
  EXPECT_TRUE(check_product_formulas(3, 2).all_zero());
  EXPECT_THROW(check_product_formulas(2, 2), DomainError);
  EXPECT_THROW(check_product_formulas(1, 0), DomainError);
}

TEST(ProductFormulas, DirectRatFuncOracleAgreesAtSmallN) {
  // The library clears denominators; here the residual is built literally.
  for (auto [n, k] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 3}}) {
    RatFunc xn = multiply_point(n).x, xk = multiply_point(k).x;
    RatFunc lhs = multiply_point(n + k).x * multiply_point(n - k).x;
    RatFunc rhs = (xk * xn - RatFunc(1)).pow(2) / (xn - xk).pow(2);
    EXPECT_EQ(lhs, rhs) << n << "," << k;
    RatFunc x2n = multiply_point(2 * n).x;
    RatFunc d(algebra::vars::delta());
    EXPECT_EQ(x2n, (xn - xn.inverse()).pow(2) / (RatFunc(4) * (xn + d + xn.inverse())));
  }
}

TEST(ProductFormulas, WrongPairFails) {
  // A mismatched index pair leaves a nonzero residual.
  EndoTable& t = shared_endo_table();
  RatFunc xn = t.get(3).x, xk = t.get(1).x;
  RatFunc wrong = t.get(5).x * t.get(1).x * (xn - xk).pow(2) - (xk * xn - RatFunc(1)).pow(2);
  EXPECT_FALSE(wrong.is_zero());
}

TEST(Mariac, Examples) {
  for (int n : {1, 3, -2, 5}) EXPECT_TRUE(check_mariac(n).is_zero()) << n;
}

TEST(Quotienttilde, Examples) {
  auto s1 = check_quotienttilde(1, 4);
  EXPECT_EQ(s1.valuation(), 0);
  EXPECT_EQ(s1.coeff(0), RatFunc(1));
  for (int k = 1; k < 4; ++k) EXPECT_TRUE(s1.coeff(k).is_zero());

  auto s2 = check_quotienttilde(2, 4);
  RatFunc u = RatFunc::make(Z(), (Z() - 1).pow(2));
  for (int k = 0; k < 4; ++k) EXPECT_EQ(s2.coeff(k), (-u).pow(k)) << k;

  auto s5 = check_quotienttilde(5, 4);
  EXPECT_EQ(s5.valuation(), 0);
  EXPECT_EQ(s5.coeff(0), RatFunc(1));
}

TEST(GroupLaw, CommutativeAndAssociativeOnSmallMultiples) {
  const Curve& E = Curve::manin_denef();
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick(-3, 3);
  for (int trial = 0; trial < 12; ++trial) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    CurvePoint P = multiple(a), Q = multiple(b), R = multiple(c);
    EXPECT_EQ(E.add(P, Q), E.add(Q, P));
    EXPECT_EQ(E.add(E.add(P, Q), R), E.add(P, E.add(Q, R))) << a << " " << b << " " << c;
  }
}

TEST(GroupLaw, SumOfMultiples) {
  const Curve& E = Curve::manin_denef();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(-8, 8);
  int done = 0;
  while (done < 16) {
    int a = pick(rng), b = pick(rng);
    if (a == 0 || b == 0 || a + b == 0 || std::abs(a + b) > 8) continue;
    ++done;
    EXPECT_EQ(E.add(multiple(a), multiple(b)), multiple(a + b)) << a << " + " << b;
  }
}

TEST(GroupLaw, MutationBreaksDoubling) {
  set_addition_law_mutation(AdditionLawMutation::FlipDoublingDeltaSign);
  const Curve& E = Curve::manin_denef();
  CurvePoint g = multiple(1);
  CurvePoint twice = E.add(g, g);
  set_addition_law_mutation(AdditionLawMutation::None);
  EXPECT_NE(twice, multiple(2));
}
