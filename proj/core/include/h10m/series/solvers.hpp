#pragma once

#include "h10m/series/series.hpp"

namespace h10m::series {

// The unique g with z·g' + g/2 = b; gₙ = bₙ/(n + 1/2). b must be a power
// series at 0. The truncation order is preserved.
QSeries solve_diff1(const QSeries& b);

struct Diff2Solution {
  QSeries g;
  Rational gamma;
  // Remainder of the division by (z − 1); zero whenever the dividend
  // vanishes at z = 1 on the truncation.
  Rational remainder;
};

// The unique (g, γ) with z(z − 1)g' + (3z − 1)g/2 = b − γ. Loses one order.
Diff2Solution solve_diff2(const QSeries& b);

struct RepTriple {
  Rational beta;
  Rational gamma;
  QSeries h;
  // True when H was an exact polynomial below its truncation order; β and
  // γ are then the true constants rather than truncation approximations.
  bool exact = false;
  Rational remainder;
};

// H = β + γ(z − 1) + f̃·h' + f̃'·h/2 with f̃ = z(z − 1)². Loses two orders.
RepTriple represent(const QSeries& H);

// β + γ(z − 1) + f̃·h' + f̃'·h/2, to the truncation h allows.
QSeries rebuild(const Rational& beta, const Rational& gamma, const QSeries& h);

// H − rebuild(rep)
QSeries series_residual(const QSeries& H, const RepTriple& rep);

// z·g' + g/2 − b
QSeries diff1_residual(const QSeries& b, const QSeries& g);
// z(z − 1)g' + (3z − 1)g/2 − (b − γ)
QSeries diff2_residual(const QSeries& b, const QSeries& g, const Rational& gamma);

inline constexpr int kDefaultTrunc = 32;

// Multiplies by an exact polynomial in the series variable.
QSeries mul_poly(const QSeries& s, const MPoly& p);

}  // namespace h10m::series
