#pragma once

#include <array>
#include <optional>
#include <string>

#include "h10m/algebra/ratfunc.hpp"
#include "h10m/curve/endo.hpp"
#include "h10m/series/solvers.hpp"

namespace h10m::uniform {

using algebra::MPoly;
using algebra::RatFunc;
using algebra::Rational;
using algebra::Var;

// The nodal parametrization in the coordinate t = e^u, where d/du = t·d/dt.
RatFunc wp(Var t = algebra::vars::t());        // ((1 + t)/(1 − t))²
RatFunc xi(Var t = algebra::vars::t());        // 2(1 + t)/(1 − t)
RatFunc wp_prime(Var t = algebra::vars::t());  // t·d(wp)/dt
// t·d/dt
RatFunc d_du(const RatFunc& f, Var t = algebra::vars::t());
// f(z) with z ↦ ℘̃(t).
RatFunc compose_wp(const RatFunc& f);

struct NamedResidual {
  std::string name;
  RatFunc residual;
};

// (℘̃′)² − f̃∘℘̃, ℘̃″ − ½f̃_z∘℘̃, ξ̃′ − (℘̃ − 1), ℘̃ − ¼ξ̃², ℘̃′ − ½(℘̃ − 1)ξ̃.
std::array<NamedResidual, 5> check_functional_equations();
// ℘̃(1/t) − ℘̃(t), ℘̃′(1/t) + ℘̃′(t), ξ̃(1/t) + ξ̃(t).
std::array<NamedResidual, 3> check_oddness();

// Residuals of the transferred addition law on the untwisted nodal curve:
// generic (x and y in t1, t2), doubling (x and y in t), and the inverse
// branch (1 if P ⊕ (℘̃(1/t), ℘̃′(1/t)) is not ∞, else 0; plus the two
// coordinate identities of the reflected point).
std::array<NamedResidual, 6> check_group_transfer();

// ℘̃(t₁) = ℘̃(t₂) and ℘̃′(t₁) = ℘̃′(t₂) with t₁, t₂ ≠ 0 force t₁ = t₂.
struct InjectivityReport {
  bool wp_difference_factors = false;  // num(℘̃(t₁) − ℘̃(t₂)) = c(t₁ − t₂)(1 − t₁t₂)
  MPoly reflected_branch;              // num(℘̃′(t₁) − ℘̃′(1/t₁)) in t₁
  bool reflected_roots_trivial = false;  // its roots are only 0 and −1
  bool holds() const { return wp_difference_factors && reflected_roots_trivial; }
};
InjectivityReport check_injectivity();

// G′ for G = βu + γξ̃ + ℘̃′·(h∘℘̃), obtained by differentiating in u.
RatFunc G_prime(const Rational& beta, const Rational& gamma, const MPoly& h);
// H_{β,γ,h}(z) = β + γ(z − 1) + f̃·h_z + ½f̃_z·h
MPoly H_poly(const Rational& beta, const Rational& gamma, const MPoly& h);
// G′ − H∘℘̃
RatFunc G_prime_residual(const Rational& beta, const Rational& gamma, const MPoly& h);

struct UniformizationResult {
  int n = 0;
  int sigma = 0;  // e^μ
  bool x_identity_ok = false;
  bool y_identity_ok = false;
};

// Finds σ = ±1 with x̃ₙ∘℘̃ = ℘̃(σtⁿ) and ℘̃′·(ỹₙ∘℘̃) = ℘̃′(σtⁿ). Throws
// LemmaViolation when neither sign works; DomainError for even n.
UniformizationResult check_uniformization_endo(int n, curve::EndoTable& table = curve::shared_endo_table());

// β of the representation of Ãₙ = A at (x̃ₙ, ỹₙ), checked to be an integer
// and to agree with α at the singular point through the α/A relation.
Rational integrality_witness(int n, int trunc = series::kDefaultTrunc,
                             curve::EndoTable& table = curve::shared_endo_table());

}  // namespace h10m::uniform
