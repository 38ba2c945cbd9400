#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eqhirz/basis/s_polynomial.hpp"

namespace eqhirz::basis {

struct PositivityReport {
  std::vector<std::pair<SMonomial, Rational>> terms;  // canonical order
  bool positive = true;                                // no negative coefficient
  // Monomials with a negative coefficient not divisible by another such monomial.
  std::vector<SMonomial> offending;

  std::string verdict() const { return positive ? "POSITIVE" : "NOT-POSITIVE"; }
  std::string str(const SVariableSet& vars) const;
};

PositivityReport positivityReport(const SPolynomial& p);

}  // namespace eqhirz::basis
