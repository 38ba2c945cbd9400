#pragma once

#include <string>

#include "eqhirz/algebra/class_fraction.hpp"
#include "eqhirz/basis/s_polynomial.hpp"

namespace eqhirz::cli {

// Text expressions for classes and S-polynomials:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | 'd' | 'y' | 'T' char | 'S' char | '(' expr ')'
//   char   := '[' integer (',' integer)* ']'
//
// T[m] is the monomial T^m, S[w] = T^w - 1, d is delta and y = -1 - d.
// A divisor must be a constant, a monomial or a binomial c (T^a - T^b), or
// a product or power of such factors.  Malformed text throws InputError
// with the offending column.

// Evaluates to a class of the given rank; every character must have that rank.
algebra::ClassFraction parseClass(const std::string& text, std::size_t rank);

// A constant (T-free) class, e.g. "1 - y + y^2".
algebra::CoeffFrac parseCoeff(const std::string& text);

// Evaluates over the alphabet: S[w] must be a letter, T is not allowed and
// divisors must be nonzero rational constants.
basis::SPolynomial parseSPolynomial(const std::string& text, const basis::SVariableSet& vars);

}  // namespace eqhirz::cli
