#include <gtest/gtest.h>

#include "generators.hpp"
#include "h10m/errors.hpp"
#include "h10m/uniform/uniformization.hpp"

using namespace h10m;
using namespace h10m::uniform;

namespace {

Var t() { return algebra::vars::t(); }
MPoly T() { return MPoly(t()); }

}  // namespace

TEST(Parametrization, Values) {
  EXPECT_EQ(wp().evaluate_partial(t(), 0), RatFunc(1));
  EXPECT_EQ(xi().evaluate_partial(t(), -1), RatFunc(0));
  EXPECT_EQ(wp().evaluate_partial(t(), -1), RatFunc(0));
  EXPECT_FALSE(wp().evaluate_partial(t(), 1).has_value());
}

TEST(Parametrization, WpPrimeClosedForm) {
  // d/dt ((1+t)/(1−t))² = 4(1+t)/(1−t)³, by the quotient rule by hand.
  RatFunc expect = RatFunc::make((T() * (T() + 1)).scaled(4), (MPoly(1) - T()).pow(3));
  EXPECT_EQ(wp_prime(), expect);
}

TEST(Parametrization, FunctionalEquations) {
  for (const auto& r : check_functional_equations()) EXPECT_TRUE(r.residual.is_zero()) << r.name;
}

TEST(Parametrization, Oddness) {
  for (const auto& r : check_oddness()) EXPECT_TRUE(r.residual.is_zero()) << r.name;
}

TEST(Parametrization, Injectivity) {
  InjectivityReport r = check_injectivity();
  EXPECT_TRUE(r.wp_difference_factors);
  EXPECT_TRUE(r.reflected_roots_trivial) << r.reflected_branch.to_string();
  EXPECT_TRUE(r.holds());
}

TEST(GroupTransfer, AllBranches) {
  for (const auto& r : check_group_transfer()) EXPECT_TRUE(r.residual.is_zero()) << r.name;
}

TEST(GroupTransfer, MutatedLawFailsDoubling) {
  curve::set_addition_law_mutation(curve::AdditionLawMutation::FlipDoublingDeltaSign);
  auto res = check_group_transfer();
  curve::set_addition_law_mutation(curve::AdditionLawMutation::None);
  EXPECT_FALSE(res[2].residual.is_zero());
}

TEST(GPrime, Examples) {
  EXPECT_EQ(G_prime(1, 0, MPoly()), RatFunc(1));
  EXPECT_EQ(G_prime(0, 1, MPoly()), wp() - RatFunc(1));
}

TEST(GPrime, MatchesCompositionOnRandomTriples) {
  testgen::PolyGen g(31);
  for (int trial = 0; trial < 20; ++trial) {
    MPoly h = g.poly({algebra::vars::z()}, 4, 5);
    EXPECT_TRUE(G_prime_residual(g.coeff(), g.coeff(), h).is_zero()) << h.to_string();
  }
}

TEST(GPrime, DetectsWrongHalf) {
  // Dropping the ½ on f̃_z·h breaks the identity.
  MPoly h(algebra::vars::z());
  RatFunc wrong = G_prime(0, 0, h) - compose_wp(RatFunc(curve::f_tilde_poly() + curve::f_tilde_poly().derivative(algebra::vars::z()) * h));
  EXPECT_FALSE(wrong.is_zero());
}

TEST(UniformizationEndo, SmallOddN) {
  auto r1 = check_uniformization_endo(1);
  EXPECT_EQ(r1.sigma, 1);
  EXPECT_TRUE(r1.x_identity_ok && r1.y_identity_ok);
  for (int n : {3, 5}) {
    auto r = check_uniformization_endo(n);
    EXPECT_TRUE(r.x_identity_ok && r.y_identity_ok) << n;
    EXPECT_TRUE(r.sigma == 1 || r.sigma == -1);
  }
  EXPECT_THROW(check_uniformization_endo(2), DomainError);
}

TEST(Integrality, Witness) {
  EXPECT_EQ(integrality_witness(1), 1);
  EXPECT_EQ(integrality_witness(3), 3);
  EXPECT_EQ(integrality_witness(7), 7);
}
