#pragma once

#include <utility>
#include <vector>

#include "eqhirz/algebra/class_fraction.hpp"

namespace eqhirz::hirz {

using algebra::ClassFraction;
using algebra::CoeffFrac;

// f(U) = sum_i coeffs[i] U^i, reduced modulo U^modulus.
struct UPoly {
  std::vector<CoeffFrac> coeffs;
  int modulus = 0;

  int degree() const;
};

// f(U) mod U^n with td_y(Y -> P^{n-1}) = h^n f(U) / U^n for a smooth
// hypersurface Y of degree d, U = e^{-h} - 1:
//   f = (-1)^n (1 + y(1+U))^n (1 - (1+U)^d) / ((1 + y) (1 + y(1+U)^d)).
// Requires n >= 1, d >= 0; the result is checked to lie in Q[d][U].
UPoly hypersurfaceF(int n, int d);

// The class h^n (-1)^n (1 + y(1+U))^n / ((1 + y) U^n) of P^{n-1} itself.
UPoly projectiveSpaceF(int n);

// chi_y of the class h^n f(U)/U^n: Res_{h=0} f(U(h)) / U(h)^n.
CoeffFrac chiOfProjectiveClass(const UPoly& f, int n);

enum class ConePart { Open, Closed, Complement };

// Class of the affine cone over Y in C^n under the scalar C* action
// (rank-1 torus, S = T - 1): the cone without the vertex is
// d (chi_y(Y) - f(S)/S^n); the closed cone adds the vertex, 1; the
// complement is ((d + S + d S)/S)^n minus the closed cone.
ClassFraction coneClass(const UPoly& f, int n, const CoeffFrac& chiY, ConePart part);

// (closed class, complement class) of the quadric cone Q_n in C^n through
//   Q_n    = d S (2+S) (d+S+dS)^{n-2} / S^n + (1+d) Q_{n-2}
//   C^n\Q_n = d^2 (1+S)^2 (d+S+dS)^{n-2} / S^n + (1+d) (C^{n-2}\Q_{n-2})
// starting from the double point Q_1 and the two crossing lines Q_2.
std::pair<ClassFraction, ClassFraction> quadricRecursion(int n);

}  // namespace eqhirz::hirz
