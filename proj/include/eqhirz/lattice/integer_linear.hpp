#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eqhirz/algebra/rational.hpp"

namespace eqhirz::lattice {

using algebra::Rational;
using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;  // row-major
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

// Overflow-checked 64-bit arithmetic; throws MathError on overflow.
std::int64_t checkedAdd(std::int64_t a, std::int64_t b);
std::int64_t checkedMul(std::int64_t a, std::int64_t b);
std::int64_t toInt64(const algebra::Integer& z);

std::int64_t gcdOf(const IntVec& v);
// v divided by the gcd of its entries (zero stays zero).
IntVec primitive(const IntVec& v);

// Row Hermite normal form of the Z-span of the rows: nonzero rows only,
// positive pivots, entries above each pivot reduced into [0, pivot).
IntMat hermiteRows(IntMat rows);

// Z-basis of {x in Z^cols : a x = 0}.
IntMat integerKernel(const IntMat& a, std::size_t cols);

std::size_t rankOf(const RatMat& m);
std::size_t rankOf(const IntMat& m);
RatMat toRational(const IntMat& m);
// Inverse of a square nonsingular matrix; throws MathError when singular.
RatMat inverse(RatMat m);
Rational determinant(RatMat m);
// Solves x M = b (x a row vector); nullopt when inconsistent.  M must have
// independent rows.
std::optional<RatVec> solveRow(const RatMat& m, const RatVec& b);
// The integer vector on the ray through a nonzero rational vector.
IntVec clearDenominators(const RatVec& v);

}  // namespace eqhirz::lattice
