#pragma once

#include <optional>
#include <string>

#include "h10m/encoder/diophantine.hpp"
#include "h10m/encoder/formula.hpp"

namespace h10m::encoder {

enum class Dialect {
  Meromorphic,  // fields of meromorphic functions: u ≠ 0 as ∃v uv = 1
  Analytic,     // rings of analytic functions: numerator/denominator pairs
  EntireCm,     // entire functions on ℂ^m: analytic, plus the c² = n⁵ − 1
                // constant test and ≠ through divisibility
};

const char* to_string(Dialect d);
std::optional<Dialect> parse_dialect(const std::string& s);  // meromorphic | analytic | entire-cm

// The disjunction over k = 0..3 of "var − k ∈ S", with
// S = {n constant : ∃a,b,x,y,v. f·b² = a³ + δa² + a, y ≠ 0,
//      (x, y) = 2(a, b) ⊕ (z, 1), 2(x − 1) = (z − 1)yv, eval(v − n)},
// fully expanded for the dialect. var is declared in the output.
Formula encode_integer_predicate(const std::string& var, Dialect d);

// Replaces curve-sum atoms by polynomial atoms: the twisted chord or
// tangent slope as a fresh variable, cleared denominators, and ≠ guards on
// the divisors. A sum with ∞ becomes a substitution when the result
// coordinates are variables.
Formula expand_curve_ops(const Formula& f);

// Meromorphic: u ≠ 0 ↦ ∃w uw = 1. EntireCm: u ≠ 0 ↦ ∃ρ,τ,v₃,v₄
// τv₃ = 1 ∧ u − τ = (z₁ − ρ)v₄ ∧ C(ρ) ∧ C(τ). Analytic: unchanged.
Formula expand_neq(const Formula& f, Dialect d);

// EntireCm: C(u) ↦ ∃c c² = u⁵ − 1. Other dialects: unchanged.
Formula expand_constant_tests(const Formula& f, Dialect d);

// One integer-predicate block per unknown, conjoined with the equations.
// The unknowns are declared first, then each block's variables.
Formula encode_system(const DioSystem& sys, Dialect d);

// The structural promises for a dialect: no EvalPair in meromorphic
// output, no Eval in analytic or entire-cm output, no C and no ≠ in
// entire-cm output, no curve-sum atoms anywhere.
bool satisfies_dialect(const Formula& f, Dialect d);

}  // namespace h10m::encoder
