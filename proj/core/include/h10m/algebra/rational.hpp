#pragma once

#include <gmpxx.h>

#include <string>

namespace h10m::algebra {

// GMP keeps mpq_class canonical: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace h10m::algebra
