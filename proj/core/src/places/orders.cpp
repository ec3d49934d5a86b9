#include "h10m/places/orders.hpp"

#include <algorithm>
#include <map>

#include "h10m/curve/checks.hpp"
#include "h10m/errors.hpp"

namespace h10m::places {

namespace {

Var vz() { return algebra::vars::z(); }
Var vd() { return algebra::vars::delta(); }

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

// Index of the grlex-leading term.
std::size_t grlex_lead(const MPoly& p) {
  std::size_t best = 0;
  auto deg = [&](std::size_t i) {
    unsigned s = 0;
    for (auto e : p.exponents(i)) s += e;
    return s;
  };
  for (std::size_t i = 1; i < p.num_terms(); ++i) {
    unsigned a = deg(i), b = deg(best);
    if (a > b || (a == b && std::lexicographical_compare(p.exponents(best).begin(), p.exponents(best).end(),
                                                          p.exponents(i).begin(), p.exponents(i).end())))
      best = i;
  }
  return best;
}

MPoly lead_term(const MPoly& p) {
  std::size_t i = grlex_lead(p);
  std::vector<MPoly::Exponent> e(p.exponents(i).begin(), p.exponents(i).end());
  return MPoly::from_dense_terms(p.vars(), {{e, p.coeff(i)}});
}

// Square root in ℚ[vars] by leading-term extraction under grlex.
std::optional<MPoly> poly_sqrt(const MPoly& d) {
  if (d.is_zero()) return MPoly();
  MPoly lt = lead_term(d);
  std::vector<MPoly::Exponent> e(lt.exponents(0).begin(), lt.exponents(0).end());
  for (auto& x : e) {
    if (x % 2) return std::nullopt;
    x /= 2;
  }
  auto c = rational_sqrt(lt.coeff(0));
  if (!c) return std::nullopt;
  MPoly q = MPoly::from_dense_terms(lt.vars(), {{e, *c}});
  const MPoly two_lead = q.scaled(2);
  MPoly r = d - q * q;
  for (std::size_t guard = 0; !r.is_zero(); ++guard) {
    if (guard > d.num_terms() + 2) return std::nullopt;
    auto t = lead_term(r).divide_exact(two_lead);
    if (!t) return std::nullopt;
    q += *t;
    r = d - q * q;
  }
  return q;
}

MPoly content_in(const MPoly& p, Var v) {
  MPoly c;
  for (const auto& k : p.coefficients_in(v)) {
    if (k.is_zero()) continue;
    c = algebra::poly_gcd(c, k);
    if (c.is_constant()) break;
  }
  return c;
}

// Multiplicity of p in f; f ≠ 0.
long multiplicity(MPoly f, const MPoly& p) {
  long k = 0;
  // v − c with a single variable: synthetic division in v.
  if (p.num_vars() == 1 && p.degree(p.vars()[0]) == 1) {
    const Var v = p.vars()[0];
    auto pc = p.coefficients_in(v);
    const Rational c = -pc[0].constant_value() / pc[1].constant_value();
    auto coeffs = f.coefficients_in(v);
    for (;;) {
      if (coeffs.size() <= 1) return k;
      std::vector<MPoly> q(coeffs.size() - 1);
      MPoly carry;
      for (std::size_t i = coeffs.size() - 1; i >= 1; --i) {
        carry = coeffs[i] + carry.scaled(c);
        q[i - 1] = carry;
      }
      MPoly rem = coeffs[0] + carry.scaled(c);
      if (!rem.is_zero()) return k;
      ++k;
      coeffs = std::move(q);
    }
  }
  for (;;) {
    auto q = f.divide_exact(p);
    if (!q) return k;
    f = std::move(*q);
    ++k;
  }
}

}  // namespace

long Order::value() const {
  if (infinite_) throw DomainError("the order of the zero function is infinite");
  return value_;
}

std::optional<bool> is_irreducible(const MPoly& p) {
  if (p.is_constant()) return false;
  // Degree one in some variable: irreducible iff primitive in it.
  for (const auto& v : p.vars())
    if (p.degree(v) == 1) return content_in(p, v).is_constant();
  if (p.total_degree() > 2) return std::nullopt;
  // Total degree two and quadratic in v: a v² + b v + c over ℚ(others).
  const Var v = p.vars()[0];
  if (!content_in(p, v).is_constant()) return false;
  auto k = p.coefficients_in(v);
  k.resize(3);
  MPoly disc = k[1] * k[1] - (k[0] * k[2]).scaled(4);
  return !poly_sqrt(disc).has_value();
}

Place Place::make(const MPoly& p) {
  auto irr = is_irreducible(p);
  if (irr && !*irr) throw DomainError(p.to_string() + " is not irreducible over Q");
  return Place(p, irr.has_value());
}

Place Place::z() { return make(MPoly(vz())); }
Place Place::z_minus_1() { return make(MPoly(vz()) - 1); }
Place Place::delta_plus_2() { return make(MPoly(vd()) + 2); }
Place Place::quadratic() {
  MPoly Z(vz());
  return make(Z.pow(2) + MPoly(vd()) * Z + 1);
}

Order ord_at(const MPoly& f, const Place& p) {
  if (f.is_zero()) return Order::infinity();
  return Order::finite(multiplicity(f, p.poly()));
}

Order ord_at(const RatFunc& f, const Place& p) {
  if (f.is_zero()) return Order::infinity();
  return Order::finite(multiplicity(f.num(), p.poly()) - multiplicity(f.den(), p.poly()));
}

const char* to_string(OrderRule r) {
  switch (r) {
    case OrderRule::Decrement:
      return "decrement";
    case OrderRule::NonDecrease:
      return "non-decrease";
    case OrderRule::NonNegative:
      return "non-negative";
  }
  return "?";
}

OrderReport derivative_order_check(const RatFunc& g, const Place& p) {
  OrderReport r;
  r.place = p.poly();
  r.ord_g = ord_at(g, p);
  r.ord_gz = ord_at(g.differentiate(vz()), p);
  const MPoly pz = p.poly().derivative(vz());
  const bool divides = pz.is_zero() || pz.divide_exact(p.poly()).has_value();
  if (r.ord_g == Order::finite(0)) {
    r.rule = OrderRule::NonNegative;
    r.holds = r.ord_gz >= Order::finite(0);
  } else if (divides) {
    r.rule = OrderRule::NonDecrease;
    r.holds = r.ord_gz >= r.ord_g;
  } else {
    r.rule = OrderRule::Decrement;
    r.holds = r.ord_gz == r.ord_g - 1;
  }
  return r;
}

RatFunc compute_A(const RatFunc& x, const RatFunc& y) {
  if (y.is_zero()) throw ZeroDenominatorError("A needs y != 0");
  return x.differentiate(vz()) / y;
}

RatFunc compute_alpha(const RatFunc& x, const RatFunc& y) {
  if (y.is_zero()) throw ZeroDenominatorError("alpha needs y != 0");
  return (x - RatFunc(1)) / (RatFunc(MPoly(vz()) - 1) * y);
}

namespace {

std::optional<Rational> two_step(const RatFunc& f, Var first, const Rational& a, Var second, const Rational& b) {
  auto s = f.evaluate_partial(first, a);
  if (!s) return std::nullopt;
  auto t = s->evaluate_partial(second, b);
  if (!t) return std::nullopt;
  if (!t->is_constant()) throw DomainError("value at the singular point still depends on " + t->to_string());
  return t->constant_value();
}

}  // namespace

std::optional<Rational> at_singular_point(const RatFunc& f) { return two_step(f, vz(), 1, vd(), -2); }

std::optional<Rational> at_singular_point_reversed(const RatFunc& f) { return two_step(f, vd(), -2, vz(), 1); }

std::optional<Rational> alpha_at_singular(const RatFunc& x, const RatFunc& y) {
  return at_singular_point(compute_alpha(x, y));
}

std::optional<Rational> alpha_at_singular_reversed(const RatFunc& x, const RatFunc& y) {
  return at_singular_point_reversed(compute_alpha(x, y));
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Undefined:
      return "UNDEFINED";
  }
  return "?";
}

AlphaARelation check_alphaA_relation(const RatFunc& x, const RatFunc& y, bool require_solution) {
  if (require_solution && !curve::check_md(x, y).is_zero())
    throw DomainError("the alpha/A relation is only claimed for solutions of the curve equation");
  AlphaARelation r;
  r.alpha = alpha_at_singular(x, y);
  r.ord = ord_at(x - RatFunc(1), Place::z_minus_1());
  r.A = at_singular_point(compute_A(x, y));
  if (!r.alpha) {
    r.detail = "alpha undefined at z=1, delta=-2";
    return r;
  }
  if (r.ord == Order::finite(0) || r.ord.is_infinite()) {
    r.verdict = Verdict::Fail;
    r.detail = "z-1 is neither a zero nor a pole of x-1";
    return r;
  }
  if (!r.A) {
    r.verdict = Verdict::Fail;
    r.detail = "alpha defined but A undefined";
    return r;
  }
  const long k = r.ord.value();
  if (*r.alpha * k != *r.A) {
    r.verdict = Verdict::Fail;
    r.detail = "alpha*ord != A";
    return r;
  }
  if ((k < -2 || k > 1) && (sgn(*r.alpha) != 0 || sgn(*r.A) != 0)) {
    r.verdict = Verdict::Fail;
    r.detail = "both sides must vanish when ord is outside [-2, 1]";
    return r;
  }
  r.verdict = Verdict::Pass;
  return r;
}

}  // namespace h10m::places
