#pragma once

#include <string>
#include <vector>

#include "eqhirz/algebra/class_fraction.hpp"

namespace eqhirz::hirz {

using algebra::Character;
using algebra::ClassFraction;
using algebra::CoeffFrac;
using algebra::LaurentPoly;

// An isolated fixed point of a smooth variety, given by its tangent weights.
struct FixedPointData {
  std::vector<Character> tangentWeights;
  std::string label;
};

// (1 + y T^w) / (1 - T^w), the class of a line with weight w.
ClassFraction fullLine(const Character& w);
// (1 + y) T^w / (1 - T^w), the line with the origin removed.
ClassFraction puncturedLine(const Character& w);

// prod_i (1 + y T^{w_i}) / (1 - T^{w_i}); 1 for no weights.
ClassFraction smoothLocalClass(const FixedPointData& p, std::size_t rank);

// Sum of local contributions; must be a constant polynomial in d, which is
// returned.  Throws MathError naming the residual class otherwise.
CoeffFrac chiFromLocal(const std::vector<ClassFraction>& contribs);

// The numerator N with N / prod (1 - T^w) = chiTarget - sum(known), which
// must be a Laurent polynomial; throws MathError otherwise.
LaurentPoly solveSingularContribution(const CoeffFrac& chiTarget, const std::vector<ClassFraction>& known,
                                      const std::vector<Character>& denomWeights);

// Local classes of C^n with the coordinate hyperplanes D_1..D_k, the
// coordinate x_i having weight w_i (S_i = T^{w_i} - 1):
//   Space       prod_i (d + S_i + d S_i)/S_i
//   Complement  d^k prod_{i<=k} (1 + S_i)/S_i * prod_{j>k} (d + S_j + d S_j)/S_j
//   Log         d^k prod_{i<=k} 1/S_i * prod_{j>k} (d + S_j + d S_j)/S_j
//   Divisor     prod_{j>k} (d + S_j + d S_j)/S_j   (the stratum D_1 ∩ ... ∩ D_k)
enum class SncVariant { Space, Complement, Log, Divisor };

ClassFraction sncLocalClass(int n, int k, const std::vector<Character>& weights, SncVariant variant);

struct SncIdentityWitness {
  ClassFraction complement;  // left side
  ClassFraction stratumSum;  // sum over I of d^|I| times the log class of D_I
  bool holds;
};

// Checks that the complement class equals sum over I ⊆ {1..k} of
// d^|I| prod_{j in {1..k} \ I} d/S_j prod_{j>k} (d + S_j + d S_j)/S_j.
SncIdentityWitness sncT1Identity(int n, int k, const std::vector<Character>& weights);

// One factor of a chart term.
struct ChartFactor {
  enum class Kind { FullLine, PuncturedLine, Custom };
  Kind kind;
  Character weight;      // FullLine / PuncturedLine
  ClassFraction custom;  // Custom
};

// sign * multiplicity * product of the factor classes (1 for no factors).
struct ChartTerm {
  int sign = 1;
  std::int64_t multiplicity = 1;
  std::vector<ChartFactor> factors;
};

// Sum of the chart terms: the pushforward of the local classes of a
// resolution, or an inclusion-exclusion over strata.
ClassFraction assemble(const std::vector<ChartTerm>& terms, std::size_t rank);

struct CuspWitness {
  ClassFraction actual;  // y = 0 class through the normalization, 1/(1 - T)
  ClassFraction naive;   // td(C^2) ch(O_X) / eu
  bool differ;
};

// The cusp x^2 = y^(2n+1) with weights (2n+1, 2) on the coordinates.
CuspWitness cuspComparison(int n);

}  // namespace eqhirz::hirz
