#include "h10m/curve/checks.hpp"

#include "h10m/errors.hpp"

namespace h10m::curve {

namespace {

MPoly Z() { return MPoly(algebra::vars::z()); }
MPoly Delta() { return MPoly(algebra::vars::delta()); }

// Cubic X³ + dX² + X at X = x.
RatFunc cubic(const RatFunc& x, const RatFunc& d) { return x * (x * x + d * x + RatFunc(1)); }

// a/b − c/d for coprime pairs, reduced only when nonzero.
RatFunc cross_residual(const MPoly& lhs, const MPoly& rhs, const MPoly& den) {
  MPoly r = lhs - rhs;
  if (r.is_zero()) return RatFunc();
  return RatFunc::make(r, den);
}

// Product formula cleared of denominators: with xⱼ = Nⱼ/Dⱼ,
// N₊N₋(NₙD_k − N_kDₙ)² = D₊D₋(N_kNₙ − D_kDₙ)².
RatFunc product_residual(const RatFunc& xp, const RatFunc& xm, const RatFunc& xn, const RatFunc& xk) {
  const MPoly &Np = xp.num(), &Dp = xp.den(), &Nm = xm.num(), &Dm = xm.den();
  const MPoly &Nn = xn.num(), &Dn = xn.den(), &Nk = xk.num(), &Dk = xk.den();
  MPoly lhs = Np * Nm * (Nn * Dk - Nk * Dn).pow(2);
  MPoly rhs = Dp * Dm * (Nk * Nn - Dk * Dn).pow(2);
  return cross_residual(lhs, rhs, Dp * Dm * Dn.pow(2) * Dk.pow(2));
}

// Duplication formula cleared: N₂ₙ·4(Nₙ² + δNₙDₙ + Dₙ²)·NₙDₙ = D₂ₙ(Nₙ² − Dₙ²)².
RatFunc duplication_residual(const RatFunc& x2n, const RatFunc& xn, const MPoly& delta) {
  const MPoly &N2 = x2n.num(), &D2 = x2n.den(), &N = xn.num(), &D = xn.den();
  MPoly lhs = (N2 * (N.pow(2) + delta * N * D + D.pow(2)) * N * D).scaled(4);
  MPoly rhs = D2 * (N.pow(2) - D.pow(2)).pow(2);
  return cross_residual(lhs, rhs, D2 * N.pow(2) * D.pow(2));
}

}  // namespace

RatFunc check_md(const RatFunc& x, const RatFunc& y) {
  return RatFunc(f_poly()) * y * y - cubic(x, RatFunc(Delta()));
}

RatFunc check_md_tilde(const RatFunc& x, const RatFunc& y) {
  return RatFunc(f_tilde_poly()) * y * y - cubic(x, RatFunc(-2));
}

RatFunc check_wellknown(int n, EndoTable& table) {
  EndoPair p = table.get(n);
  return p.x.differentiate(algebra::vars::z()) - RatFunc(n) * p.y;
}

ProductResiduals check_product_formulas(int n, int k, EndoTable& table) {
  if (n < 2 || k < 1 || k >= n) throw DomainError("product formulas need n >= 2 and 1 <= k < n");
  ProductResiduals r;
  r.product = product_residual(table.get(n + k).x, table.get(n - k).x, table.get(n).x, table.get(k).x);
  r.duplication = duplication_residual(table.get(2 * n).x, table.get(n).x, Delta());
  r.product_tilde = product_residual(table.tilde(n + k).first, table.tilde(n - k).first, table.tilde(n).first, table.tilde(k).first);
  r.duplication_tilde = duplication_residual(table.tilde(2 * n).first, table.tilde(n).first, MPoly(-2));
  return r;
}

RatFunc check_mariac(int n, EndoTable& table) {
  const Var z = algebra::vars::z();
  EndoPair p = table.get(n);
  const RatFunc d(Delta());
  const MPoly f = f_poly();
  RatFunc lhs = (RatFunc(f.derivative(z)) * p.y + RatFunc(f.scaled(2)) * p.y.differentiate(z)) * p.y;
  RatFunc rhs = p.x.differentiate(z) * (RatFunc(3) * p.x * p.x + RatFunc(2) * d * p.x + RatFunc(1));
  return lhs - rhs;
}

series::FuncSeries check_quotienttilde(int n, int order, EndoTable& table) {
  if (n < 1) throw DomainError("quotienttilde needs n >= 1");
  EndoPair p = table.get(n);
  RatFunc e = p.x / table.tilde(n).first;
  series::FuncSeries s = series::expand_at(e, algebra::vars::delta(), -2, order);
  if (s.valuation() < 0) throw LemmaViolation("e_n has a pole along delta = -2, n=" + std::to_string(n));
  return s;
}

}  // namespace h10m::curve
