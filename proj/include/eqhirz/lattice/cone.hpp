#pragma once

#include <vector>

#include "eqhirz/algebra/class_fraction.hpp"
#include "eqhirz/lattice/lattice_basis.hpp"

namespace eqhirz::lattice {

using algebra::ClassFraction;

// Primal cones live in the cocharacter space (rays are integer direction
// vectors paired with characters by the dot product); dual cones live in
// the character lattice.
enum class ConeSide { Primal, Dual };

class Cone {
 public:
  // Rays must be nonzero and of one rank.  Rays pointing in the same
  // direction are merged; the stored order is the graded order of Character.
  Cone(std::vector<Character> rays, ConeSide side);

  const std::vector<Character>& rays() const { return rays_; }
  ConeSide side() const { return side_; }
  std::size_t ambientDim() const { return rays_.front().rank(); }

 private:
  std::vector<Character> rays_;
  ConeSide side_;
};

// A face given by the indices (into Cone::rays()) of the rays it contains.
struct Face {
  std::vector<std::size_t> rays;
  int dim = 0;
  friend bool operator==(const Face&, const Face&) = default;
};

// The cone expressed in the saturated lattice basis ∩ span(cone).
struct ConeFrame {
  LatticeBasis lattice;
  std::vector<IntVec> rays;          // primitive lattice coordinates, cone ray order
  std::vector<IntVec> facetNormals;  // inward and primitive, acting on lattice coordinates
};

// Throws MathError for cones that are not pointed, whose span has dimension
// above 4, or that do not lie in the span of the basis.
ConeFrame coneFrame(const Cone& c, const LatticeBasis& basis);

// Dual of a pointed cone that is full-dimensional in the space it lives in:
// for a primal cone that space is the span of `basis`, for a dual cone it is
// the cone's own span inside `basis`.
Cone dualCone(const Cone& c, const LatticeBasis& basis);

// All faces including {0} and c, ordered by (dimension, ray indices).
std::vector<Face> faces(const Cone& c);

// Simplicial cone with, per ray, whether points with a zero coefficient on
// that ray (the facet opposite it) belong to the piece.
struct HalfOpenPiece {
  std::vector<Character> rays;
  std::vector<bool> closedFacet;
};

enum class Region { RelativeInterior, Closed };

// Triangulation without new rays (pulling from the first ray, recursively
// over facets not containing it) with facets opened or closed so that the
// pieces partition the requested region.  Facet status is decided by the
// barycentric signs of the point q0 + e q1 + e^2 q2 + ... for infinitesimal
// e, where q0 is the sum of the rays and q1, q2, ... the unit vectors of the
// frame: for the closed cone a facet is kept when q lies strictly on the
// piece's side of it, for the relative interior when q lies strictly on the
// other side.
std::vector<HalfOpenPiece> halfOpenDecomposition(const Cone& c, const LatticeBasis& basis,
                                                 Region region);

bool pieceContains(const HalfOpenPiece& piece, const Character& m);

// Lattice points sum lambda_i w_i with every lambda_i in (0, 1].
std::vector<Character> boxPoints(const std::vector<Character>& rays, const LatticeBasis& basis);
// Lattice points with lambda_i in [0, 1) when facet i is closed, (0, 1] otherwise.
std::vector<Character> boxPoints(const HalfOpenPiece& piece, const LatticeBasis& basis);

// sum of T^m over lattice points m of the relative interior of c.
ClassFraction interiorGenFunction(const Cone& c, const LatticeBasis& basis);
// sum of T^m over all lattice points m of c.
ClassFraction closedGenFunction(const Cone& c, const LatticeBasis& basis);

// Generators of the semigroup c ∩ lattice: primitive rays followed by the
// nonzero points of the closed boxes [0,1)^k of a triangulation, with
// elements that are a sum of two others dropped.
std::vector<Character> semigroupGenerators(const Cone& c, const LatticeBasis& basis);

// An integer vector g with g . w > 0 for every w; throws MathError when the
// vectors do not generate a pointed cone.
Character positiveGrading(const std::vector<Character>& vecs);

}  // namespace eqhirz::lattice
