#pragma once

#include <optional>
#include <vector>

#include "eqhirz/algebra/character.hpp"
#include "eqhirz/lattice/integer_linear.hpp"

namespace eqhirz::lattice {

using algebra::Character;

// A sublattice of Z^r given by a Z-basis (rows in Hermite normal form).
class LatticeBasis {
 public:
  static LatticeBasis standard(std::size_t ambientRank);
  // The Z-span of the generators; they need not be independent.
  static LatticeBasis generatedBy(std::size_t ambientRank, const std::vector<Character>& generators);

  std::size_t ambientRank() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<Character>& basis() const { return basis_; }

  bool contains(const Character& m) const { return coordinates(m).has_value(); }
  // Integer coordinates of m in the basis; nullopt when m is not a lattice point.
  std::optional<IntVec> coordinates(const Character& m) const;
  // Rational coordinates of m; nullopt when m is outside the rational span.
  std::optional<RatVec> rationalCoordinates(const Character& m) const;
  Character point(const IntVec& coords) const;

  // The sublattice of points lying in the rational span of vecs (vecs must
  // lie in the rational span of this lattice).
  LatticeBasis saturatedSpanOf(const std::vector<Character>& vecs) const;

  // A primitive integer vector v in the rational span of the basis with
  // <v, point(x)> proportional (positive factor) to f . x for all x.
  Character functionalToAmbient(const IntVec& f) const;
  // (<v, b_1>, ..., <v, b_k>) for an ambient vector v.
  IntVec pullback(const Character& v) const;

  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  LatticeBasis(std::size_t ambient, std::vector<Character> basis);
  std::size_t ambient_;
  std::vector<Character> basis_;
  RatMat rows_;
};

}  // namespace eqhirz::lattice
