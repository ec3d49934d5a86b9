#pragma once

#include <span>
#include <vector>

#include "h10m/algebra/mpoly.hpp"

namespace h10m::algebra {

using Exponent = MPoly::Exponent;

// Raw access for the arithmetic kernels. Callers of make() guarantee sorted,
// distinct, nonzero terms; only unused variables are dropped.
class MPolyBuilder {
 public:
  static MPoly make(std::vector<Var> vars, std::vector<Exponent> exps,
                    std::vector<Rational> coeffs);
  static const std::vector<Exponent>& exps(const MPoly& p) { return p.exps_; }
  static const std::vector<Rational>& coeffs(const MPoly& p) { return p.coeffs_; }
};

std::vector<Var> union_vars(const std::vector<Var>& a, const std::vector<Var>& b);

// Exponents of p re-expressed against `target`, a sorted superset of p.vars().
// Term order is preserved.
std::vector<Exponent> widen(const MPoly& p, const std::vector<Var>& target);

// Integer polynomial on a fixed variable list, terms in descending lex order.
struct IntPoly {
  std::size_t nvars = 0;
  std::vector<Exponent> exps;
  std::vector<Integer> coeffs;

  std::size_t size() const { return coeffs.size(); }
  std::span<const Exponent> exp(std::size_t i) const {
    return {exps.data() + i * nvars, nvars};
  }
  bool is_zero() const { return coeffs.empty(); }
};

// p = scale * result with integer coefficients. When `primitive` is set the
// result has content 1 (sign kept), otherwise only denominators are cleared.
IntPoly to_intpoly(const MPoly& p, const std::vector<Var>& target, Rational& scale,
                   bool primitive);
MPoly from_intpoly(const IntPoly& p, const std::vector<Var>& vars, const Rational& scale);

IntPoly intpoly_mul(const IntPoly& a, const IntPoly& b);
Integer intpoly_content(const IntPoly& p);

int compare_exp(std::span<const Exponent> a, std::span<const Exponent> b);

}  // namespace h10m::algebra
