#include "h10m/series/series.hpp"

namespace h10m::series {

QSeries series_from_poly(const MPoly& p, Var v, int trunc) {
  for (const auto& w : p.vars())
    if (!(w == v)) throw DomainError("series_from_poly needs a polynomial in " + v.name() + " only");
  auto c = p.coefficients_in(v);
  std::vector<Rational> coeffs;
  for (const auto& x : c) coeffs.push_back(x.constant_value());
  const bool exact = static_cast<int>(coeffs.size()) <= trunc;
  return QSeries::from_coeffs(v, 0, 0, std::move(coeffs), trunc, exact);
}

MPoly series_to_poly(const QSeries& s) {
  if (s.center() != 0) throw DomainError("series_to_poly needs a series at 0");
  if (s.valuation() < 0) throw DomainError("series_to_poly needs a power series");
  std::vector<std::pair<std::vector<MPoly::Exponent>, Rational>> terms;
  for (int k = s.valuation(); k < s.trunc(); ++k) {
    Rational c = s.coeff(k);
    if (sgn(c) != 0) terms.push_back({{static_cast<MPoly::Exponent>(k)}, c});
  }
  return MPoly::from_dense_terms({s.var()}, std::move(terms));
}

FuncSeries expand_at(const RatFunc& f, Var v, const Rational& center, int order) {
  MPoly shift = MPoly(v) + MPoly(center);
  MPoly num = center == 0 ? f.num() : f.num().substitute(v, shift);
  MPoly den = center == 0 ? f.den() : f.den().substitute(v, shift);
  auto nc = num.coefficients_in(v);
  auto dc = den.coefficients_in(v);
  auto first_nonzero = [](const std::vector<MPoly>& c) {
    int i = 0;
    while (i < static_cast<int>(c.size()) && c[i].is_zero()) ++i;
    return i;
  };
  if (num.is_zero()) return FuncSeries::from_coeffs(v, center, order, {}, order, true);
  const int vn = first_nonzero(nc), vd = first_nonzero(dc);
  const int val = vn - vd;
  const int count = order - val;
  std::vector<RatFunc> q;
  if (count > 0) {
    q.reserve(count);
    const RatFunc lead = RatFunc(dc[vd]).inverse();
    auto nat = [&](int k) { return k < static_cast<int>(nc.size()) ? RatFunc(nc[k]) : RatFunc(); };
    auto dat = [&](int k) { return k < static_cast<int>(dc.size()) ? RatFunc(dc[k]) : RatFunc(); };
    for (int k = 0; k < count; ++k) {
      RatFunc acc = nat(vn + k);
      for (int j = 1; j <= k && vd + j < static_cast<int>(dc.size()); ++j) {
        if (dc[vd + j].is_zero()) continue;
        acc -= dat(vd + j) * q[k - j];
      }
      q.push_back(acc * lead);
    }
  }
  bool den_monomial = true;
  for (int i = vd + 1; i < static_cast<int>(dc.size()); ++i) den_monomial &= dc[i].is_zero();
  const bool exact = den_monomial && static_cast<int>(nc.size()) - vd <= order;
  return FuncSeries::from_coeffs(v, center, val, std::move(q), order, exact);
}

QSeries expand_at_q(const RatFunc& f, Var v, const Rational& center, int order) {
  FuncSeries s = expand_at(f, v, center, order);
  std::vector<Rational> c;
  for (const auto& x : s.coeffs()) c.push_back(x.constant_value());
  return QSeries::from_coeffs(v, center, s.valuation(), std::move(c), s.trunc(), s.exact());
}

}  // namespace h10m::series
