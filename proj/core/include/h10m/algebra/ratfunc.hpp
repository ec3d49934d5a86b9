#pragma once

#include <optional>
#include <string>

#include "h10m/algebra/mpoly.hpp"

namespace h10m::algebra {

// Reduced quotient of polynomials over the rationals.
//
// Invariants: den != 0, gcd(num, den) = 1, and den has graded-lex leading
// coefficient 1. Zero is 0/1. Equal functions have identical representations.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const MPoly& p) : num_(p), den_(1) {}  // NOLINT
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  explicit RatFunc(Var v) : num_(v), den_(1) {}

  // Throws ZeroDenominatorError when den == 0.
  static RatFunc make(const MPoly& num, const MPoly& den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // Value of a constant function; throws DomainError otherwise.
  Rational constant_value() const;
  std::vector<Var> vars() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  RatFunc inverse() const;
  RatFunc pow(int e) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  RatFunc differentiate(Var v) const;
  // Throws ZeroDenominatorError when the composed denominator vanishes.
  RatFunc substitute(Var v, const RatFunc& g) const;
  // Specializes v = c; nullopt when v = c is a pole.
  std::optional<RatFunc> evaluate_partial(Var v, const Rational& c) const;

  // "num" when den = 1, otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  RatFunc(MPoly num, MPoly den, int) : num_(std::move(num)), den_(std::move(den)) {}
  MPoly num_;
  MPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace h10m::algebra
