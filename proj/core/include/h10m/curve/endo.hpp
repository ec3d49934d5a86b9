#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "h10m/curve/curve.hpp"

namespace h10m::curve {

// n·(z, 1) on the Manin–Denef curve: the point (xₙ, √f·yₙ).
struct EndoPair {
  int n = 0;
  RatFunc x;
  RatFunc y;
};

enum class MultiplyRoute {
  DivisionPolynomials,  // closed-form recurrences, fast for large n
  RepeatedAddition,     // literal iterated ⊕ from the generator
};

// Memo table of endomorphism pairs. Safe for concurrent use: fills are
// computed outside the lock and inserted idempotently.
class EndoTable {
 public:
  explicit EndoTable(MultiplyRoute route = MultiplyRoute::DivisionPolynomials) : route_(route) {}

  MultiplyRoute route() const { return route_; }
  // Throws DomainError for n == 0.
  EndoPair get(int n);
  // (x̃ₙ, ỹₙ): the pair at δ = −2. Throws LemmaViolation if δ + 2 divides a
  // denominator of xₙ or yₙ, or the numerator of yₙ.
  std::pair<RatFunc, RatFunc> tilde(int n);

 private:
  EndoPair compute(int n);
  MPoly division_poly(int k);

  MultiplyRoute route_;
  std::mutex mu_;
  std::map<int, EndoPair> pairs_;
  std::map<int, std::pair<RatFunc, RatFunc>> tildes_;
  std::map<int, MPoly> psi_;
};

// Process-wide table using the default route.
EndoTable& shared_endo_table();

EndoPair multiply_point(int n);
std::pair<RatFunc, RatFunc> specialize_tilde(const EndoPair& p);

}  // namespace h10m::curve
