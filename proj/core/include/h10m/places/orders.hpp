#pragma once

#include <compare>
#include <optional>
#include <string>

#include "h10m/algebra/ratfunc.hpp"

namespace h10m::places {

using algebra::MPoly;
using algebra::RatFunc;
using algebra::Rational;
using algebra::Var;

// Order of vanishing: an integer, or +∞ for the zero function.
class Order {
 public:
  static Order finite(long v) { return Order(false, v); }
  static Order infinity() { return Order(true, 0); }

  bool is_infinite() const { return infinite_; }
  long value() const;

  Order operator-(long k) const { return infinite_ ? *this : finite(value_ - k); }
  friend bool operator==(const Order&, const Order&) = default;
  friend std::strong_ordering operator<=>(const Order& a, const Order& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  Order(bool inf, long v) : infinite_(inf), value_(v) {}
  bool infinite_;
  long value_;
};

// An irreducible polynomial of ℚ[z, δ, ...]. Irreducibility is decided for
// total degree ≤ 2 and for polynomials of degree one in some variable;
// anything else is taken on the caller's word and flagged.
class Place {
 public:
  // Throws DomainError when the polynomial is constant or provably reducible.
  static Place make(const MPoly& p);
  static Place z();
  static Place z_minus_1();
  static Place delta_plus_2();
  static Place quadratic();  // z² + δz + 1

  const MPoly& poly() const { return p_; }
  bool irreducibility_checked() const { return checked_; }
  std::string to_string() const { return p_.to_string(); }

 private:
  Place(MPoly p, bool checked) : p_(std::move(p)), checked_(checked) {}
  MPoly p_;
  bool checked_;
};

// Irreducible, reducible, or undecided (nullopt) over ℚ.
std::optional<bool> is_irreducible(const MPoly& p);

Order ord_at(const MPoly& f, const Place& p);
Order ord_at(const RatFunc& f, const Place& p);

enum class OrderRule {
  Decrement,    // ord(g) ≠ 0, ρ ∤ ρ_z: ord(g_z) = ord(g) − 1
  NonDecrease,  // ord(g) ≠ 0, ρ | ρ_z: ord(g_z) ≥ ord(g)
  NonNegative,  // ord(g) = 0: ord(g_z) ≥ 0
};

const char* to_string(OrderRule r);

struct OrderReport {
  MPoly place;
  Order ord_g = Order::infinity();
  Order ord_gz = Order::infinity();
  OrderRule rule = OrderRule::Decrement;
  bool holds = false;
};

// Orders of g and ∂g/∂z at p, and which of the three derivative rules
// applies. `holds` false would refute the rule.
OrderReport derivative_order_check(const RatFunc& g, const Place& p);

// A = x_z / y; throws ZeroDenominatorError for y = 0.
RatFunc compute_A(const RatFunc& x, const RatFunc& y);
// α = (x − 1)/((z − 1)y); throws ZeroDenominatorError for y = 0.
RatFunc compute_alpha(const RatFunc& x, const RatFunc& y);

// Evaluates at z = 1 and then δ = −2; nullopt where either step hits a
// pole. DomainError if other variables remain.
std::optional<Rational> at_singular_point(const RatFunc& f);
// Evaluates at δ = −2 first; a diagnostic only, the two orders can differ.
std::optional<Rational> at_singular_point_reversed(const RatFunc& f);

std::optional<Rational> alpha_at_singular(const RatFunc& x, const RatFunc& y);
std::optional<Rational> alpha_at_singular_reversed(const RatFunc& x, const RatFunc& y);

enum class Verdict { Pass, Fail, Undefined };
const char* to_string(Verdict v);

struct AlphaARelation {
  Verdict verdict = Verdict::Undefined;
  Order ord = Order::infinity();  // ord_{z−1}(x − 1)
  std::optional<Rational> alpha;  // α at z = 1, δ = −2
  std::optional<Rational> A;      // A at z = 1, δ = −2
  std::string detail;
};

// α·ord_{z−1}(x − 1) = A at z = 1, δ = −2, for a solution of the
// Manin–Denef equation. With `require_solution` the input is checked to be
// one (DomainError otherwise); callers that already hold a verified pair
// may skip that.
AlphaARelation check_alphaA_relation(const RatFunc& x, const RatFunc& y, bool require_solution = true);

}  // namespace h10m::places
