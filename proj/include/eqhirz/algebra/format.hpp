#pragma once

#include <string>

#include "eqhirz/algebra/class_fraction.hpp"

namespace eqhirz::algebra {

// Which genus variable coefficients are printed in: d (delta) or y = -1 - d.
enum class CoeffBasis { Delta, Y };

std::string formatCoeff(const CoeffFrac& c, CoeffBasis basis);
std::string formatLaurent(const LaurentPoly& p, CoeffBasis basis);
// "num", "(num)/(1 - T[w])" or "T[m]/((1 - T[w1])^2*(1 - T[w2]))"; the
// numerator is parenthesized unless it is a single plain term.
std::string formatClass(const ClassFraction& c, CoeffBasis basis);

}  // namespace eqhirz::algebra
