#include "eqhirz/hirz/toric.hpp"

namespace eqhirz::hirz {

using algebra::ClassFraction;
using algebra::CoeffFrac;
using lattice::Cone;
using lattice::ConeSide;
using lattice::LatticeBasis;

namespace {

Cone dualSide(const Cone& sigma, const LatticeBasis& basis) {
  return sigma.side() == ConeSide::Dual ? sigma : lattice::dualCone(sigma, basis);
}

}  // namespace

ClassFraction toricLocalClass(const Cone& sigma, const LatticeBasis& basis) {
  Cone dual = dualSide(sigma, basis);
  LatticeBasis frame = basis.saturatedSpanOf(dual.rays());
  ClassFraction total(basis.ambientRank());
  const CoeffFrac minusDelta = -CoeffFrac::delta();
  for (const auto& face : lattice::faces(dual)) {
    if (face.rays.empty()) {
      total += ClassFraction::one(basis.ambientRank());
      continue;
    }
    std::vector<algebra::Character> rays;
    for (auto i : face.rays) rays.push_back(dual.rays()[i]);
    ClassFraction gf = lattice::interiorGenFunction(Cone(rays, ConeSide::Dual), frame);
    total += gf * minusDelta.pow(face.dim);
  }
  return total;
}

ToricY0Witness toricY0Check(const Cone& sigma, const LatticeBasis& basis) {
  Cone dual = dualSide(sigma, basis);
  ClassFraction atZero = toricLocalClass(dual, basis).substituteY(0);
  ClassFraction closed = lattice::closedGenFunction(dual, basis.saturatedSpanOf(dual.rays()));
  bool holds = atZero == closed;
  return {std::move(atZero), std::move(closed), holds};
}

}  // namespace eqhirz::hirz
