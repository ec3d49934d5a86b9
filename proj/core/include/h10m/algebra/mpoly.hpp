#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "h10m/algebra/rational.hpp"
#include "h10m/algebra/var.hpp"

namespace h10m::algebra {

// Sparse multivariate polynomial over the rationals.
//
// Canonical form: the variable list is exactly the set of variables that
// occur with a positive exponent, sorted by name; terms are stored in
// descending lexicographic order of their exponent vectors; no stored
// coefficient is zero. The zero polynomial has no terms and no variables.
// Two polynomials are equal iff their representations are identical.
class MPoly {
 public:
  using Exponent = std::uint32_t;

  struct Term {
    std::vector<std::pair<Var, Exponent>> powers;
    Rational coeff;
  };

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT: constants convert implicitly
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT
  explicit MPoly(Var v);

  static MPoly from_terms(const std::vector<Term>& terms);
  // Exponent vectors are given against `vars` (any order, no duplicates).
  static MPoly from_dense_terms(std::vector<Var> vars,
                                std::vector<std::pair<std::vector<Exponent>, Rational>> terms);

  const std::vector<Var>& vars() const { return vars_; }
  std::size_t num_vars() const { return vars_.size(); }
  std::size_t num_terms() const { return coeffs_.size(); }
  std::span<const Exponent> exponents(std::size_t i) const {
    return {exps_.data() + i * vars_.size(), vars_.size()};
  }
  const Rational& coeff(std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  // Value of a constant polynomial (0 for the zero polynomial).
  Rational constant_value() const;
  bool has_var(Var v) const;

  Exponent degree(Var v) const;
  Exponent total_degree() const;
  // Leading coefficient under graded-lex order (total degree first, ties by
  // lex with variables in name order). Zero for the zero polynomial.
  Rational grlex_leading_coeff() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly scaled(const Rational& c) const;
  MPoly pow(unsigned e) const;

  friend bool operator==(const MPoly& a, const MPoly& b) = default;

  MPoly derivative(Var v) const;
  MPoly evaluate(Var v, const Rational& c) const;
  // coefficients_in(v)[i] is the coefficient of v^i (free of v).
  std::vector<MPoly> coefficients_in(Var v) const;
  // Polynomial composition v -> g.
  MPoly substitute(Var v, const MPoly& g) const;
  // Exact quotient, or nullopt when `d` does not divide *this. Throws on d == 0.
  std::optional<MPoly> divide_exact(const MPoly& d) const;
  // Multiplies by the positive rational making all coefficients coprime
  // integers; returns the integer-primitive polynomial and the factor used.
  std::pair<MPoly, Rational> primitive_part() const;

  std::string to_string() const;

 private:
  friend class MPolyBuilder;
  std::vector<Var> vars_;
  std::vector<Exponent> exps_;
  std::vector<Rational> coeffs_;

  void canonicalize();
  void prune_vars();
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

// Greatest common divisor, normalized so its graded-lex leading coefficient
// is 1. gcd(0, b) is b normalized; gcd(0, 0) is 0.
MPoly poly_gcd(const MPoly& a, const MPoly& b);

struct GcdCofactors {
  MPoly gcd;
  MPoly a_over_gcd;
  MPoly b_over_gcd;
};
GcdCofactors poly_gcd_cofactors(const MPoly& a, const MPoly& b);

}  // namespace h10m::algebra
