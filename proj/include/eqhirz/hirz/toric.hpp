#pragma once

#include "eqhirz/algebra/class_fraction.hpp"
#include "eqhirz/lattice/cone.hpp"

namespace eqhirz::hirz {

// Local class at the fixed point of the affine toric variety of sigma:
// the sum over faces F of the dual cone of (-d)^dim F times the generating
// function of the lattice points in the relative interior of F (the face
// {0} contributing 1).  sigma may be given on either side; a primal cone
// must be full-dimensional for `basis`, a dual cone is used in its own span.
algebra::ClassFraction toricLocalClass(const lattice::Cone& sigma, const lattice::LatticeBasis& basis);

struct ToricY0Witness {
  algebra::ClassFraction atYZero;    // toric class at y = 0
  algebra::ClassFraction closedSum;  // generating function of all points of the dual cone
  bool holds;
};

ToricY0Witness toricY0Check(const lattice::Cone& sigma, const lattice::LatticeBasis& basis);

}  // namespace eqhirz::hirz
