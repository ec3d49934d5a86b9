#include "h10m/curve/endo.hpp"

#include "h10m/errors.hpp"

namespace h10m::curve {

namespace {

// Division polynomials of Y² = X³ + δX² + X at (z, s), s² = f, with the
// factor s stripped from the even ones: ψₖ = Fₖ (k odd), ψₖ = s·Fₖ (k even).
MPoly base_division_poly(int k) {
  MPoly z(algebra::vars::z()), d(algebra::vars::delta());
  switch (k) {
    case -1:
      return MPoly(-1);
    case 0:
      return MPoly();
    case 1:
      return MPoly(1);
    case 2:
      return MPoly(2);
    case 3:
      return z.pow(4).scaled(3) + (d * z.pow(3)).scaled(4) + z.pow(2).scaled(6) - 1;
    case 4:
      return (z.pow(6).scaled(2) + (d * z.pow(5)).scaled(4) + z.pow(4).scaled(10) -
              z.pow(2).scaled(10) - (d * z).scaled(4) - 2)
          .scaled(2);
  }
  throw std::logic_error("no base division polynomial");
}

}  // namespace

MPoly EndoTable::division_poly(int k) {
  {
    std::lock_guard lock(mu_);
    if (auto it = psi_.find(k); it != psi_.end()) return it->second;
  }
  MPoly r;
  if (k <= 4) {
    r = base_division_poly(k);
  } else if (k % 2 == 1) {
    const int m = (k - 1) / 2;
    MPoly f2 = f_poly().pow(2);
    MPoly lhs = division_poly(m + 2) * division_poly(m).pow(3);
    MPoly rhs = division_poly(m - 1) * division_poly(m + 1).pow(3);
    if (m % 2 == 0) lhs = lhs * f2;
    else rhs = rhs * f2;
    r = lhs - rhs;
  } else {
    const int m = k / 2;
    MPoly bracket = division_poly(m + 2) * division_poly(m - 1).pow(2) -
                    division_poly(m - 2) * division_poly(m + 1).pow(2);
    r = (division_poly(m) * bracket).scaled(Rational(1, 2));
  }
  std::lock_guard lock(mu_);
  return psi_.emplace(k, std::move(r)).first->second;
}

EndoPair EndoTable::compute(int n) {
  MPoly z(algebra::vars::z());
  if (n == 1) return {1, RatFunc(z), RatFunc(1)};
  if (route_ == MultiplyRoute::RepeatedAddition) {
    const Curve& E = Curve::manin_denef();
    EndoPair prev = get(n - 1);
    CurvePoint p = E.add(E.point_unchecked(prev.x, prev.y), E.point_unchecked(RatFunc(z), RatFunc(1)));
    if (p.is_infinity()) throw LemmaViolation("n(z,1) is the point at infinity");
    return {n, p.x(), p.y()};
  }
  const MPoly f = f_poly();
  MPoly Fn = division_poly(n), Fm = division_poly(n - 1), Fp = division_poly(n + 1);
  MPoly bracket = division_poly(n + 2) * division_poly(n - 1).pow(2) -
                  division_poly(n - 2) * division_poly(n + 1).pow(2);
  MPoly Fn2 = Fn.pow(2);
  RatFunc x, y;
  if (n % 2 == 1) {
    x = RatFunc::make(z * Fn2 - f * Fm * Fp, Fn2);
    y = RatFunc::make(bracket, (Fn2 * Fn).scaled(4));
  } else {
    x = RatFunc::make(z * f * Fn2 - Fm * Fp, f * Fn2);
    y = RatFunc::make(bracket, (f.pow(2) * Fn2 * Fn).scaled(4));
  }
  return {n, std::move(x), std::move(y)};
}

EndoPair EndoTable::get(int n) {
  if (n == 0) throw DomainError("0·(z,1) is the point at infinity, which has no affine coordinates");
  if (n < 0) {
    EndoPair p = get(-n);
    return {n, p.x, -p.y};
  }
  {
    std::lock_guard lock(mu_);
    if (auto it = pairs_.find(n); it != pairs_.end()) return it->second;
  }
  EndoPair p = compute(n);
  std::lock_guard lock(mu_);
  return pairs_.emplace(n, std::move(p)).first->second;
}

std::pair<RatFunc, RatFunc> specialize_tilde(const EndoPair& p) {
  const Var d = algebra::vars::delta();
  auto x = p.x.evaluate_partial(d, -2);
  auto y = p.y.evaluate_partial(d, -2);
  const std::string tag = "n=" + std::to_string(p.n);
  if (!x) throw LemmaViolation("delta+2 divides the denominator of x_n, " + tag);
  if (!y) throw LemmaViolation("delta+2 divides the denominator of y_n, " + tag);
  if (y->is_zero()) throw LemmaViolation("delta+2 divides the numerator of y_n, " + tag);
  return {*x, *y};
}

std::pair<RatFunc, RatFunc> EndoTable::tilde(int n) {
  if (n < 0) {
    auto [x, y] = tilde(-n);
    return {x, -y};
  }
  {
    std::lock_guard lock(mu_);
    if (auto it = tildes_.find(n); it != tildes_.end()) return it->second;
  }
  auto t = specialize_tilde(get(n));
  std::lock_guard lock(mu_);
  return tildes_.emplace(n, std::move(t)).first->second;
}

EndoTable& shared_endo_table() {
  static EndoTable table;
  return table;
}

EndoPair multiply_point(int n) { return shared_endo_table().get(n); }

}  // namespace h10m::curve
