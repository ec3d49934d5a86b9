#pragma once

#include <string>
#include <vector>

#include "h10m/algebra/mpoly.hpp"

namespace h10m::encoder {

// A system of polynomial equations over the integers, each stored as
// lhs − rhs = 0.
struct DioSystem {
  std::vector<std::string> unknowns;
  std::vector<algebra::MPoly> equations;
};

// Equations separated by ';' or newlines, over integer literals,
// identifiers, + - * ^ (non-negative integer exponents), parentheses and
// '='. An optional statement `vars x, y, ...` declares the unknowns; any
// other identifier is then an error. Without it the unknowns are the
// identifiers in order of first use. z1 and z2 are reserved.
// Throws ParseError with the line and column of the offending token.
DioSystem parse_diophantine(const std::string& text);

// A single polynomial term, as printed by MPoly::to_string. Rational
// coefficients a/b are accepted here.
algebra::MPoly parse_term(const std::string& text);

}  // namespace h10m::encoder
