#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace eqhirz::algebra {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational makeRational(std::int64_t num, std::int64_t den = 1) {
  Rational q{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
  q.canonicalize();
  return q;
}

// Parses "p", "-p" or "p/q"; throws InputError on malformed text or q = 0.
Rational parseRational(const std::string& text);

inline std::string toString(const Rational& q) { return q.get_str(); }

Rational binomial(std::int64_t n, std::int64_t k);

}  // namespace eqhirz::algebra
