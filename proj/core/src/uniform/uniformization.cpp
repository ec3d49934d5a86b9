#include "h10m/uniform/uniformization.hpp"

#include "h10m/curve/checks.hpp"
#include "h10m/errors.hpp"
#include "h10m/places/orders.hpp"

namespace h10m::uniform {

namespace {

Var vz() { return algebra::vars::z(); }
Var vt() { return algebra::vars::t(); }

RatFunc rf(Var v) { return RatFunc(v); }

}  // namespace

RatFunc wp(Var t) {
  RatFunc q = (RatFunc(1) + rf(t)) / (RatFunc(1) - rf(t));
  return q * q;
}

RatFunc xi(Var t) { return RatFunc(2) * (RatFunc(1) + rf(t)) / (RatFunc(1) - rf(t)); }

RatFunc d_du(const RatFunc& f, Var t) { return rf(t) * f.differentiate(t); }

RatFunc wp_prime(Var t) { return d_du(wp(t), t); }

RatFunc compose_wp(const RatFunc& f) { return f.substitute(vz(), wp()); }

std::array<NamedResidual, 5> check_functional_equations() {
  const RatFunc P = wp(), dP = wp_prime(), X = xi();
  const RatFunc ft(curve::f_tilde_poly());
  const RatFunc ftz(curve::f_tilde_poly().derivative(vz()));
  const RatFunc half(Rational(1, 2)), quarter(Rational(1, 4)), one(1);
  return {{
      {"wp'^2 = f~(wp)", dP * dP - compose_wp(ft)},
      {"wp'' = f~_z(wp)/2", d_du(dP) - half * compose_wp(ftz)},
      {"xi' = wp - 1", d_du(X) - (P - one)},
      {"wp = xi^2/4", P - quarter * X * X},
      {"wp' = (wp - 1) xi/2", dP - half * (P - one) * X},
  }};
}

std::array<NamedResidual, 3> check_oddness() {
  const RatFunc inv = rf(vt()).inverse();
  return {{
      {"wp(1/t) = wp(t)", wp().substitute(vt(), inv) - wp()},
      {"wp'(1/t) = -wp'(t)", wp_prime().substitute(vt(), inv) + wp_prime()},
      {"xi(1/t) = -xi(t)", xi().substitute(vt(), inv) + xi()},
  }};
}

std::array<NamedResidual, 6> check_group_transfer() {
  const curve::Curve& E = curve::Curve::nodal();
  const Var t = vt(), t1 = algebra::vars::t1(), t2 = algebra::vars::t2();
  auto at = [&](const RatFunc& g) { return E.point_unchecked(wp().substitute(t, g), wp_prime().substitute(t, g)); };

  curve::CurvePoint P1 = at(rf(t1)), P2 = at(rf(t2));
  curve::CurvePoint sum = E.add(P1, P2);
  curve::CurvePoint expect = at(rf(t1) * rf(t2));

  curve::CurvePoint P = at(rf(t));
  curve::CurvePoint twice = E.add(P, P);
  curve::CurvePoint expect2 = at(rf(t) * rf(t));

  curve::CurvePoint refl = at(rf(t).inverse());
  curve::CurvePoint zero = E.add(P, refl);
  return {{
      {"generic x", sum.x() - expect.x()},
      {"generic y", sum.y() - expect.y()},
      {"doubling x", twice.x() - expect2.x()},
      {"doubling y", twice.y() - expect2.y()},
      {"inverse branch reflected point", (refl.x() - P.x()) * (refl.x() - P.x()) + (refl.y() + P.y()) * (refl.y() + P.y())},
      {"inverse branch sum is infinity", RatFunc(zero.is_infinity() ? 0 : 1)},
  }};
}

InjectivityReport check_injectivity() {
  const Var t = vt(), t1 = algebra::vars::t1(), t2 = algebra::vars::t2();
  InjectivityReport r;
  const MPoly T1(t1), T2(t2);
  RatFunc dwp = wp().substitute(t, rf(t1)) - wp().substitute(t, rf(t2));
  // The numerator is only determined up to a constant by normalization.
  MPoly target = (T1 - T2) * (MPoly(1) - T1 * T2);
  auto q = dwp.num().divide_exact(target);
  r.wp_difference_factors = q && q->is_constant() && !q->is_zero();

  RatFunc branch = wp_prime().substitute(t, rf(t1)) - wp_prime().substitute(t, rf(t1).inverse());
  r.reflected_branch = branch.num();
  // Strip the admissible roots t₁ = 0 and t₁ = −1 (where 1/t₁ = t₁) and
  // require a nonzero constant to remain.
  MPoly rest = r.reflected_branch;
  for (const MPoly& f : {T1, T1 + 1}) {
    for (;;) {
      auto d = rest.divide_exact(f);
      if (!d) break;
      rest = std::move(*d);
    }
  }
  r.reflected_roots_trivial = !r.reflected_branch.is_zero() && rest.is_constant();
  return r;
}

MPoly H_poly(const Rational& beta, const Rational& gamma, const MPoly& h) {
  const MPoly ft = curve::f_tilde_poly();
  const MPoly Z(vz());
  return MPoly(beta) + (Z - 1).scaled(gamma) + ft * h.derivative(vz()) +
         (ft.derivative(vz()) * h).scaled(Rational(1, 2));
}

RatFunc G_prime(const Rational& beta, const Rational& gamma, const MPoly& h) {
  for (const auto& v : h.vars())
    if (!(v == vz())) throw DomainError("h must be a polynomial in z");
  RatFunc rest = RatFunc(gamma) * xi() + wp_prime() * compose_wp(RatFunc(h));
  return RatFunc(beta) + d_du(rest);
}

RatFunc G_prime_residual(const Rational& beta, const Rational& gamma, const MPoly& h) {
  return G_prime(beta, gamma, h) - compose_wp(RatFunc(H_poly(beta, gamma, h)));
}

UniformizationResult check_uniformization_endo(int n, curve::EndoTable& table) {
  if (n % 2 == 0) throw DomainError("the uniformization check covers odd n only");
  auto [xt, yt] = table.tilde(n);
  const RatFunc lhs_x = compose_wp(xt);
  const RatFunc lhs_y = wp_prime() * compose_wp(yt);
  const RatFunc tn = rf(vt()).pow(std::abs(n));
  for (int sigma : {1, -1}) {
    RatFunc arg = RatFunc(sigma) * (n > 0 ? tn : tn.inverse());
    UniformizationResult r{n, sigma, false, false};
    r.x_identity_ok = lhs_x == wp().substitute(vt(), arg);
    if (!r.x_identity_ok) continue;
    r.y_identity_ok = lhs_y == wp_prime().substitute(vt(), arg);
    if (r.y_identity_ok) return r;
  }
  throw LemmaViolation("no sign sigma makes both uniformization identities hold, n=" + std::to_string(n));
}

Rational integrality_witness(int n, int trunc, curve::EndoTable& table) {
  if (n % 2 == 0) throw DomainError("the integrality witness covers odd n only");
  auto [xt, yt] = table.tilde(n);
  RatFunc A = places::compute_A(xt, yt);
  series::QSeries H = series::expand_at_q(A, vz(), 0, trunc);
  series::RepTriple rep = series::represent(H);
  if (!algebra::is_integer(rep.beta))
    throw LemmaViolation("beta = " + rep.beta.get_str() + " is not an integer, n=" + std::to_string(n));
  curve::EndoPair p = table.get(n);
  auto rel = places::check_alphaA_relation(p.x, p.y, false);
  if (rel.verdict != places::Verdict::Pass || rel.ord != places::Order::finite(1) || rel.alpha != rep.beta)
    throw LemmaViolation("beta = " + rep.beta.get_str() + " does not match alpha at the singular point, n=" +
                         std::to_string(n));
  return rep.beta;
}

}  // namespace h10m::uniform
