#include "h10m/series/solvers.hpp"

namespace h10m::series {

namespace {

void require_power_series(const QSeries& s, const char* what) {
  if (s.center() != 0) throw DomainError(std::string(what) + ": series must be centered at 0");
  if (s.valuation() < 0) throw DomainError(std::string(what) + ": series must have valuation >= 0");
}

QSeries constant(const QSeries& like, const Rational& c, int trunc) {
  return QSeries::from_coeffs(like.var(), 0, 0, {c}, trunc, true);
}

// P = (z − 1)·Q + r on the coefficients 0..trunc−1; Q has trunc − 1.
std::pair<QSeries, Rational> divide_by_z_minus_1(const QSeries& p) {
  const int n = p.trunc();
  std::vector<Rational> c = p.dense(0);
  if (n <= 0) return {QSeries::from_coeffs(p.var(), 0, 0, {}, 0, p.exact()), 0};
  std::vector<Rational> q(n - 1);
  Rational carry = 0;
  for (int k = n - 1; k >= 1; --k) {
    carry += c[k];
    q[k - 1] = carry;
  }
  Rational r = c[0] + carry;
  return {QSeries::from_coeffs(p.var(), 0, 0, std::move(q), n - 1, p.exact()), r};
}

MPoly ftilde(Var z) {
  MPoly Z(z);
  return Z * (Z - 1).pow(2);
}

}  // namespace

QSeries mul_poly(const QSeries& s, const MPoly& p) {
  const Var v = s.var();
  for (const auto& w : p.vars())
    if (!(w == v)) throw DomainError("mul_poly: polynomial in a foreign variable");
  auto pc = p.coefficients_in(v);
  int vp = 0;
  while (vp < static_cast<int>(pc.size()) && pc[vp].is_zero()) ++vp;
  const int t = s.trunc() + (p.is_zero() ? 0 : vp);
  std::vector<Rational> c(std::max(0, t), Rational(0));
  for (int k = s.valuation(); k < s.trunc(); ++k) {
    const Rational& a = s.coeff(k);
    if (sgn(a) == 0) continue;
    for (int j = 0; j < static_cast<int>(pc.size()); ++j) {
      if (k + j >= t || k + j < 0) continue;
      c[k + j] += a * pc[j].constant_value();
    }
  }
  if (s.valuation() < 0) throw DomainError("mul_poly needs a power series");
  return QSeries::from_coeffs(v, 0, 0, std::move(c), t, s.exact());
}

QSeries solve_diff1(const QSeries& b) {
  require_power_series(b, "solve_diff1");
  std::vector<Rational> g;
  for (int k = 0; k < b.trunc(); ++k) {
    Rational c = b.coeff(k) * 2 / (2 * k + 1);
    g.push_back(c);
  }
  return QSeries::from_coeffs(b.var(), 0, 0, std::move(g), b.trunc(), b.exact());
}

Diff2Solution solve_diff2(const QSeries& b) {
  require_power_series(b, "solve_diff2");
  QSeries h = solve_diff1(b);
  Rational gamma = h.evaluate_truncation(1) / 2;
  auto [g, r] = divide_by_z_minus_1(h - constant(h, 2 * gamma, h.trunc()));
  return {g, gamma, r};
}

RepTriple represent(const QSeries& H) {
  require_power_series(H, "represent");
  Rational beta = H.evaluate_truncation(1);
  auto [b, r1] = divide_by_z_minus_1(H - constant(H, beta, H.trunc()));
  Diff2Solution s = solve_diff2(b);
  return {beta, s.gamma, s.g, H.exact(), r1 + s.remainder};
}

QSeries rebuild(const Rational& beta, const Rational& gamma, const QSeries& h) {
  require_power_series(h, "rebuild");
  const Var z = h.var();
  MPoly ft = ftilde(z);
  QSeries out = mul_poly(h.derivative(), ft) + mul_poly(h, ft.derivative(z)).scaled(Rational(1, 2));
  MPoly lin = MPoly(beta) + (MPoly(z) - 1).scaled(gamma);
  if (!lin.is_zero()) out = out + series_from_poly(lin, z, out.trunc());
  return out;
}

QSeries series_residual(const QSeries& H, const RepTriple& rep) {
  return H - rebuild(rep.beta, rep.gamma, rep.h);
}

QSeries diff1_residual(const QSeries& b, const QSeries& g) {
  const MPoly z(g.var());
  QSeries lhs = mul_poly(g.derivative(), z) + g.scaled(Rational(1, 2));
  return lhs - b;
}

QSeries diff2_residual(const QSeries& b, const QSeries& g, const Rational& gamma) {
  const MPoly z(g.var());
  QSeries lhs = mul_poly(g.derivative(), z * (z - 1)) + mul_poly(g, (z.scaled(3) - 1).scaled(Rational(1, 2)));
  QSeries rhs = b;
  if (sgn(gamma) != 0) rhs = rhs - constant(b, gamma, b.trunc());
  return lhs - rhs;
}

}  // namespace h10m::series
