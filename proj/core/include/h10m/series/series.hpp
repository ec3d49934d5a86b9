#pragma once

#include <algorithm>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "h10m/algebra/ratfunc.hpp"
#include "h10m/errors.hpp"

namespace h10m::series {

using algebra::MPoly;
using algebra::RatFunc;
using algebra::Rational;
using algebra::Var;

inline bool coeff_is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const RatFunc& c) { return c.is_zero(); }
inline std::string coeff_string(const Rational& c) { return c.get_str(); }
inline std::string coeff_string(const RatFunc& c) { return c.to_string(); }

// Truncated Laurent series Σ cₖ (v − center)ᵏ, valuation ≤ k < trunc.
//
// coeffs[0] is the coefficient of (v − center)^valuation and is nonzero
// unless the series vanishes to truncation, in which case valuation equals
// trunc and coeffs is empty. `exact` records that every coefficient at or
// beyond trunc is known to be zero, i.e. the series is a polynomial.
template <class C>
class TruncSeries {
 public:
  TruncSeries() = default;

  static TruncSeries from_coeffs(Var v, Rational center, int start, std::vector<C> coeffs, int trunc,
                                 bool exact = false) {
    if (start + static_cast<int>(coeffs.size()) > trunc) coeffs.resize(std::max(0, trunc - start));
    TruncSeries s;
    s.var_ = v;
    s.center_ = std::move(center);
    s.trunc_ = trunc;
    s.exact_ = exact;
    std::size_t lead = 0;
    while (lead < coeffs.size() && coeff_is_zero(coeffs[lead])) ++lead;
    if (lead == coeffs.size()) {
      s.valuation_ = trunc;
      return s;
    }
    s.valuation_ = start + static_cast<int>(lead);
    s.coeffs_.assign(std::make_move_iterator(coeffs.begin() + lead), std::make_move_iterator(coeffs.end()));
    s.coeffs_.resize(trunc - s.valuation_, C(0));
    return s;
  }

  Var var() const { return var_; }
  const Rational& center() const { return center_; }
  int valuation() const { return valuation_; }
  int trunc() const { return trunc_; }
  bool exact() const { return exact_; }
  const std::vector<C>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  C coeff(int k) const {
    if (k >= trunc_) throw DomainError("coefficient beyond truncation order");
    if (k < valuation_) return C(0);
    return coeffs_[k - valuation_];
  }

  // Coefficients from exponent `from` up to trunc − 1.
  std::vector<C> dense(int from) const {
    std::vector<C> out;
    for (int k = from; k < trunc_; ++k) out.push_back(coeff(k));
    return out;
  }

  TruncSeries truncated(int t) const {
    if (t > trunc_) throw DomainError("cannot raise the truncation order");
    return from_coeffs(var_, center_, valuation_, coeffs_, t, exact_ && last_nonzero() < t);
  }

  TruncSeries operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    a.check_compatible(b);
    int t = std::min(a.trunc_, b.trunc_);
    int v = std::min(a.valuation_, b.valuation_);
    std::vector<C> c;
    for (int k = v; k < t; ++k) c.push_back(a.coeff(k) + b.coeff(k));
    return from_coeffs(a.var_, a.center_, v, std::move(c), t, a.exact_ && b.exact_ && a.trunc_ == b.trunc_);
  }

  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_compatible(b);
    if (a.is_zero() || b.is_zero()) {
      int t = std::min(a.trunc_ + b.valuation_, b.trunc_ + a.valuation_);
      return from_coeffs(a.var_, a.center_, t, {}, t, false);
    }
    int t = std::min(a.trunc_ + b.valuation_, b.trunc_ + a.valuation_);
    int v = a.valuation_ + b.valuation_;
    std::vector<C> c(std::max(0, t - v), C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size() && static_cast<int>(i + j) < t - v; ++j)
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    bool exact = a.exact_ && b.exact_ && a.last_nonzero() + b.last_nonzero() < t;
    return from_coeffs(a.var_, a.center_, v, std::move(c), t, exact);
  }

  TruncSeries scaled(const C& s) const {
    std::vector<C> c = coeffs_;
    for (auto& x : c) x *= s;
    return from_coeffs(var_, center_, valuation_, std::move(c), trunc_, exact_);
  }

  // d/dv; the truncation order drops by one.
  TruncSeries derivative() const {
    std::vector<C> c;
    int start = valuation_ - 1;
    for (int k = valuation_; k < trunc_; ++k) c.push_back(coeff(k) * C(k));
    return from_coeffs(var_, center_, start, std::move(c), trunc_ - 1, exact_);
  }

  // Multiplicative inverse; needs the leading coefficient to be invertible.
  TruncSeries inverse() const {
    if (is_zero()) throw ZeroDenominatorError("inverse of a series vanishing to truncation");
    const int len = trunc_ - valuation_;
    std::vector<C> q(len, C(0));
    const C lead_inv = C(1) / coeffs_[0];
    q[0] = lead_inv;
    for (int k = 1; k < len; ++k) {
      C acc(0);
      for (int j = 1; j <= k; ++j) acc += coeffs_[j] * q[k - j];
      q[k] = -acc * lead_inv;
    }
    return from_coeffs(var_, center_, -valuation_, std::move(q), trunc_ - 2 * valuation_, false);
  }

  // Value of the truncated polynomial at v = x.
  C evaluate_truncation(const Rational& x) const {
    if (valuation_ < 0) throw DomainError("cannot evaluate a Laurent tail");
    const Rational w = x - center_;
    C acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * C(w) + coeffs_[i];
    for (int k = 0; k < valuation_; ++k) acc *= C(w);
    return acc;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.var_ == b.var_ && a.center_ == b.center_ && a.valuation_ == b.valuation_ &&
           a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    std::ostringstream os;
    std::string base = center_ == 0 ? var_.name()
                                    : "(" + var_.name() + (sgn(center_) > 0 ? " - " : " + ") +
                                          Rational(abs(center_)).get_str() + ")";
    bool first = true;
    for (int k = valuation_; k < trunc_; ++k) {
      const C& c = coeffs_[k - valuation_];
      if (coeff_is_zero(c)) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff_string(c) << ")";
      if (k != 0) os << "*" << base << (k == 1 ? "" : "^" + std::to_string(k));
    }
    if (first) os << "0";
    os << " + O(" << base << "^" << trunc_ << ")";
    return os.str();
  }

 private:
  void check_compatible(const TruncSeries& o) const {
    if (!(var_ == o.var_) || center_ != o.center_)
      throw DomainError("series in different expansion variables or centers");
  }
  int last_nonzero() const {
    for (int i = static_cast<int>(coeffs_.size()); i-- > 0;)
      if (!coeff_is_zero(coeffs_[i])) return valuation_ + i;
    return std::numeric_limits<int>::min() / 2;
  }

  Var var_;
  Rational center_ = 0;
  int valuation_ = 0;
  std::vector<C> coeffs_;
  int trunc_ = 0;
  bool exact_ = false;
};

using QSeries = TruncSeries<Rational>;
using FuncSeries = TruncSeries<RatFunc>;

// Power series in v at 0 of a univariate polynomial; exact when
// deg p < trunc.
QSeries series_from_poly(const MPoly& p, Var v, int trunc);
// Polynomial Σ cₖ vᵏ of a series at 0 (valuation ≥ 0).
MPoly series_to_poly(const QSeries& s);

// Laurent expansion of f in (v − center) to truncation `order`. The
// valuation equals the order of f along v = center.
FuncSeries expand_at(const RatFunc& f, Var v, const Rational& center, int order);
// Same, for f depending on v only.
QSeries expand_at_q(const RatFunc& f, Var v, const Rational& center, int order);

}  // namespace h10m::series
