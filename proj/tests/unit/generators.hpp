#pragma once

#include <random>

#include "h10m/algebra/mpoly.hpp"
#include "h10m/algebra/ratfunc.hpp"

namespace h10m::testgen {

using algebra::MPoly;
using algebra::RatFunc;
using algebra::Rational;
using algebra::Var;

// Small-coefficient random polynomials in the given variables.
class PolyGen {
 public:
  explicit PolyGen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational coeff() {
    int num = uniform(-9, 9);
    int den = uniform(1, 3);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  MPoly poly(const std::vector<Var>& vars, int max_deg, int max_terms) {
    std::vector<std::pair<std::vector<MPoly::Exponent>, Rational>> terms;
    const int n = uniform(1, max_terms);
    for (int i = 0; i < n; ++i) {
      std::vector<MPoly::Exponent> e(vars.size());
      for (auto& x : e) x = static_cast<MPoly::Exponent>(uniform(0, max_deg));
      terms.emplace_back(e, coeff());
    }
    return MPoly::from_dense_terms(vars, terms);
  }

  MPoly nonzero_poly(const std::vector<Var>& vars, int max_deg, int max_terms) {
    for (;;) {
      MPoly p = poly(vars, max_deg, max_terms);
      if (!p.is_zero()) return p;
    }
  }

  RatFunc ratfunc(const std::vector<Var>& vars, int max_deg, int max_terms) {
    return RatFunc::make(poly(vars, max_deg, max_terms), nonzero_poly(vars, max_deg, max_terms));
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace h10m::testgen
