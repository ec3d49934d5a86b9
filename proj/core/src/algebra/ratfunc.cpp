#include "h10m/algebra/ratfunc.hpp"

#include <ostream>

#include "h10m/errors.hpp"
#include "mpoly_internal.hpp"

namespace h10m::algebra {

RatFunc RatFunc::make(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw ZeroDenominatorError("rational function with zero denominator");
  if (num.is_zero()) return RatFunc();
  if (den.is_constant()) return RatFunc(num.scaled(1 / den.constant_value()), MPoly(1), 0);
  auto [g, n, d] = poly_gcd_cofactors(num, den);
  Rational l = d.grlex_leading_coeff();
  if (l != 1) {
    n = n.scaled(1 / l);
    d = d.scaled(1 / l);
  }
  return RatFunc(std::move(n), std::move(d), 0);
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw DomainError("constant_value of non-constant function " + to_string());
  return num_.constant_value();
}

std::vector<Var> RatFunc::vars() const { return union_vars(num_.vars(), den_.vars()); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, 0); }

// Henrici: with g = gcd(b, d), the sum a/b + c/d can only cancel against g.
RatFunc operator+(const RatFunc& x, const RatFunc& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const MPoly &a = x.num_, &b = x.den_, &c = y.num_, &d = y.den_;
  if (b.is_constant() && d.is_constant()) return RatFunc(a + c);
  if (b == d) return RatFunc::make(a + c, b);
  auto [g, b1, d1] = poly_gcd_cofactors(b, d);
  MPoly num = a * d1 + c * b1;
  if (num.is_zero()) return RatFunc();
  if (g.is_constant()) return RatFunc(std::move(num), b * d1, 0);
  auto [h, num1, g1] = poly_gcd_cofactors(num, g);
  return RatFunc(std::move(num1), b1 * d1 * g1, 0);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
  auto [g1, a1, bd1] = poly_gcd_cofactors(a.num_, b.den_);
  auto [g2, b1, ad1] = poly_gcd_cofactors(b.num_, a.den_);
  // Cofactors of normalized denominators keep leading coefficient 1.
  return RatFunc(a1 * b1, ad1 * bd1, 0);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ZeroDenominatorError("inverse of the zero function");
  Rational l = num_.grlex_leading_coeff();
  return RatFunc(den_.scaled(1 / l), num_.scaled(1 / l), 0);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), 0);
}

RatFunc RatFunc::differentiate(Var v) const {
  MPoly dn = num_.derivative(v);
  if (den_.is_constant()) return RatFunc(dn);
  MPoly dd = den_.derivative(v);
  if (dd.is_zero()) return make(dn, den_);
  // With g = gcd(D, D'), (N/D)' = (N'·D/g − N·D'/g)/(D·D/g), and the only
  // factors that can still cancel are those of D free of v.
  auto [g, d1, dp] = poly_gcd_cofactors(den_, dd);
  MPoly num = dn * d1 - num_ * dp;
  if (num.is_zero()) return RatFunc();
  MPoly den = den_ * d1;
  MPoly content;
  for (const auto& c : den_.coefficients_in(v)) {
    if (c.is_zero()) continue;
    content = poly_gcd(content, c);
    if (content.is_constant()) break;
  }
  if (!content.is_constant()) {
    MPoly h = poly_gcd(num, content);
    if (!h.is_constant()) {
      num = *num.divide_exact(h);
      den = *den.divide_exact(h);
    }
  }
  Rational l = den.grlex_leading_coeff();
  if (l != 1) {
    num = num.scaled(1 / l);
    den = den.scaled(1 / l);
  }
  return RatFunc(std::move(num), std::move(den), 0);
}

namespace {

// sum_i c_i p^i q^(D-i) where c = coefficients in v and D = deg.
MPoly homogenized(const MPoly& f, Var v, const MPoly& p, const MPoly& q, MPoly::Exponent D) {
  auto c = f.coefficients_in(v);
  std::vector<MPoly> qpow{MPoly(1)};
  for (MPoly::Exponent i = 1; i <= D; ++i) qpow.push_back(qpow.back() * q);
  MPoly r = c.back() * qpow[D + 1 - c.size()];
  for (std::size_t i = c.size() - 1; i-- > 0;) r = r * p + c[i] * qpow[D - i];
  return r;
}

}  // namespace

RatFunc RatFunc::substitute(Var v, const RatFunc& g) const {
  if (!num_.has_var(v) && !den_.has_var(v)) return *this;
  if (g.is_polynomial()) {
    MPoly d = den_.substitute(v, g.num_);
    if (d.is_zero()) throw ZeroDenominatorError("substitution makes the denominator vanish");
    return make(num_.substitute(v, g.num_), d);
  }
  const auto Dn = num_.degree(v), Dd = den_.degree(v);
  const auto D = std::max(Dn, Dd);
  MPoly n = homogenized(num_, v, g.num_, g.den_, Dn);
  MPoly d = homogenized(den_, v, g.num_, g.den_, Dd);
  if (d.is_zero()) throw ZeroDenominatorError("substitution makes the denominator vanish");
  if (Dn < D) n = n * g.den_.pow(D - Dn);
  if (Dd < D) d = d * g.den_.pow(D - Dd);
  return make(n, d);
}

std::optional<RatFunc> RatFunc::evaluate_partial(Var v, const Rational& c) const {
  MPoly d = den_.evaluate(v, c);
  // num and den are coprime, so they cannot both vanish along v = c
  if (d.is_zero()) return std::nullopt;
  return make(num_.evaluate(v, c), d);
}

std::string RatFunc::to_string() const {
  if (den_ == MPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

}  // namespace h10m::algebra
