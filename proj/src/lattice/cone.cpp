#include "eqhirz/lattice/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eqhirz/error.hpp"

namespace eqhirz::lattice {

namespace {

constexpr std::size_t kMaxDim = 4;

std::int64_t dot(const IntVec& a, const IntVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checkedAdd(s, checkedMul(a[i], b[i]));
  return s;
}

Rational dotQ(const RatVec& a, const IntVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(static_cast<long>(b[i]));
  return s;
}

// Normal vector of the hyperplane spanned by k-1 vectors in Q^k (zero when
// they are dependent), via signed maximal minors.
IntVec crossProduct(const std::vector<IntVec>& vecs, std::size_t k) {
  IntVec n(k, 0);
  for (std::size_t j = 0; j < k; ++j) {
    RatMat minor;
    for (const auto& v : vecs) {
      RatVec row;
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) row.emplace_back(static_cast<long>(v[c]));
      minor.push_back(std::move(row));
    }
    Rational det = minor.empty() ? Rational(1) : determinant(std::move(minor));
    n[j] = toInt64(det.get_num()) * ((j % 2 == 0) ? 1 : -1);
  }
  return primitive(n);
}

// Inward primitive facet normals of a cone given by generators in Z^k that
// span Q^k; throws when the cone is not pointed.
std::vector<IntVec> facetNormals(const std::vector<IntVec>& rays, std::size_t k) {
  if (k == 0) return {};
  if (k > kMaxDim)
    throw MathError("cone of dimension " + std::to_string(k) + " exceeds the supported dimension 4");
  if (k == 1) {
    bool pos = false, neg = false;
    for (const auto& r : rays) (r[0] > 0 ? pos : neg) = true;
    if (pos && neg) throw MathError("cone is not pointed");
    return {IntVec{pos ? 1 : -1}};
  }
  std::set<IntVec> normals;
  // Enumerate (k-1)-subsets of the rays.
  if (k - 1 > rays.size()) throw MathError("cone has fewer rays than its dimension requires");
  std::vector<bool> pick(rays.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k - 1), true);
  do {
    std::vector<IntVec> sub;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (pick[i]) sub.push_back(rays[i]);
    IntVec n = crossProduct(sub, k);
    if (gcdOf(n) == 0) continue;
    bool pos = false, neg = false;
    for (const auto& r : rays) {
      std::int64_t s = dot(n, r);
      pos |= s > 0;
      neg |= s < 0;
    }
    if (pos && neg) continue;
    if (!pos && !neg) continue;
    if (neg)
      for (auto& x : n) x = -x;
    normals.insert(n);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::vector<IntVec> out(normals.begin(), normals.end());
  if (rankOf(out) < k) throw MathError("cone is not pointed");
  return out;
}

bool lexPositive(const RatVec& column, const std::vector<IntVec>& perturbation) {
  for (const auto& q : perturbation) {
    Rational s = dotQ(column, q);
    if (s != 0) return s > 0;
  }
  throw MathError("degenerate perturbation in half-open decomposition");
}

// All faces of a pointed full-dimensional cone in its frame, as ray index sets.
std::vector<Face> frameFaces(const ConeFrame& f) {
  const std::size_t n = f.rays.size();
  std::vector<std::vector<std::size_t>> facetSets;
  for (const auto& normal : f.facetNormals) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (dot(normal, f.rays[i]) == 0) s.push_back(i);
    facetSets.push_back(std::move(s));
  }
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  std::set<std::vector<std::size_t>> seen{all};
  std::vector<std::vector<std::size_t>> queue{all};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& g : facetSets) {
      std::vector<std::size_t> h;
      std::set_intersection(queue[q].begin(), queue[q].end(), g.begin(), g.end(), std::back_inserter(h));
      if (seen.insert(h).second) queue.push_back(h);
    }
  }
  std::vector<Face> out;
  for (const auto& s : seen) {
    IntMat m;
    for (auto i : s) m.push_back(f.rays[i]);
    out.push_back(Face{s, static_cast<int>(m.empty() ? 0 : rankOf(m))});
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.rays < b.rays;
  });
  return out;
}

// Pulling triangulation of `face` (ray index set) into simplices.
void triangulate(const std::vector<std::size_t>& face, int dim, const std::vector<Face>& allFaces,
                 std::map<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>>& memo,
                 std::vector<std::vector<std::size_t>>& out) {
  if (auto it = memo.find(face); it != memo.end()) {
    out.insert(out.end(), it->second.begin(), it->second.end());
    return;
  }
  std::vector<std::vector<std::size_t>> result;
  if (static_cast<int>(face.size()) == dim) {
    result.push_back(face);
  } else {
    const std::size_t apex = face.front();
    for (const auto& g : allFaces) {
      if (g.dim != dim - 1) continue;
      if (!std::includes(face.begin(), face.end(), g.rays.begin(), g.rays.end())) continue;
      if (std::binary_search(g.rays.begin(), g.rays.end(), apex)) continue;
      std::vector<std::vector<std::size_t>> sub;
      triangulate(g.rays, g.dim, allFaces, memo, sub);
      for (auto& s : sub) {
        s.push_back(apex);
        std::sort(s.begin(), s.end());
        result.push_back(std::move(s));
      }
    }
  }
  memo[face] = result;
  out.insert(out.end(), result.begin(), result.end());
}

std::vector<std::vector<std::size_t>> triangulation(const ConeFrame& f) {
  auto allFaces = frameFaces(f);
  std::map<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>> memo;
  std::vector<std::vector<std::size_t>> out;
  const Face& top = allFaces.back();
  triangulate(top.rays, top.dim, allFaces, memo, out);
  return out;
}

// Box points in frame coordinates of the simplicial cone with the given
// rows; closed[i] selects [0,1) instead of (0,1] for coordinate i.
std::vector<IntVec> frameBox(const IntMat& rays, const std::vector<bool>& closed) {
  const std::size_t k = rays.size();
  RatMat a = toRational(rays);
  RatMat ainv = inverse(a);
  IntMat h = hermiteRows(rays);
  std::vector<std::int64_t> diag(k);
  for (std::size_t j = 0; j < k; ++j) diag[j] = h[j][j];
  std::vector<IntVec> out;
  IntVec x(k, 0);
  while (true) {
    RatVec lambda(k, Rational(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lambda[i] += Rational(static_cast<long>(x[j])) * ainv[j][i];
    for (std::size_t i = 0; i < k; ++i) {
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), lambda[i].get_num_mpz_t(), lambda[i].get_den_mpz_t());
      lambda[i] -= fl;
      if (!closed[i] && lambda[i] == 0) lambda[i] = 1;
    }
    RatVec p(k, Rational(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) p[j] += lambda[i] * a[i][j];
    IntVec pi;
    for (const auto& v : p) {
      if (v.get_den() != 1) throw std::logic_error("box point is not integral");
      pi.push_back(toInt64(v.get_num()));
    }
    out.push_back(std::move(pi));
    std::size_t j = 0;
    while (j < k && ++x[j] == diag[j]) x[j++] = 0;
    if (j == k) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntVec frameCoords(const LatticeBasis& l, const Character& w) {
  auto c = l.coordinates(w);
  if (!c) throw MathError("vector " + w.str() + " is not a point of the lattice");
  return *c;
}

IntMat frameRows(const LatticeBasis& l, const std::vector<Character>& rays) {
  IntMat m;
  for (const auto& r : rays) m.push_back(frameCoords(l, r));
  if (rankOf(m) != m.size()) throw MathError("rays are linearly dependent");
  return m;
}

ClassFraction pieceGenFunction(const HalfOpenPiece& piece, const LatticeBasis& basis) {
  algebra::LaurentPoly num(basis.ambientRank());
  for (const auto& b : boxPoints(piece, basis)) num.addTerm(b, 1);
  return ClassFraction(std::move(num), piece.rays);
}

}  // namespace

Cone::Cone(std::vector<Character> rays, ConeSide side) : side_(side) {
  if (rays.empty()) throw MathError("a cone needs at least one ray");
  const std::size_t r = rays.front().rank();
  std::sort(rays.begin(), rays.end());
  std::set<IntVec> directions;
  for (const auto& w : rays) {
    algebra::requireRank(w, r);
    if (w.isZero()) throw MathError("zero vector as a cone ray");
    if (directions.insert(primitive(w.coords())).second) rays_.push_back(w);
  }
}

ConeFrame coneFrame(const Cone& c, const LatticeBasis& basis) {
  ConeFrame f{basis.saturatedSpanOf(c.rays()), {}, {}};
  for (const auto& r : c.rays()) {
    auto x = f.lattice.rationalCoordinates(r);
    f.rays.push_back(clearDenominators(*x));
  }
  f.facetNormals = facetNormals(f.rays, f.lattice.rank());
  return f;
}

Cone dualCone(const Cone& c, const LatticeBasis& basis) {
  if (c.side() == ConeSide::Primal) {
    const std::size_t k = basis.rank();
    std::vector<IntVec> functionals;
    for (const auto& v : c.rays()) functionals.push_back(primitive(basis.pullback(v)));
    if (rankOf(functionals) != k)
      throw MathError("primal cone is not full-dimensional for the given lattice");
    std::vector<IntVec> normals = facetNormals(functionals, k);
    std::vector<Character> rays;
    for (const auto& n : normals) rays.push_back(basis.point(n));
    return Cone(std::move(rays), ConeSide::Dual);
  }
  ConeFrame f = coneFrame(c, basis);
  std::vector<Character> rays;
  for (const auto& n : f.facetNormals) rays.push_back(f.lattice.functionalToAmbient(n));
  return Cone(std::move(rays), ConeSide::Primal);
}

std::vector<Face> faces(const Cone& c) {
  return frameFaces(coneFrame(c, LatticeBasis::standard(c.ambientDim())));
}

std::vector<HalfOpenPiece> halfOpenDecomposition(const Cone& c, const LatticeBasis& basis, Region region) {
  ConeFrame f = coneFrame(c, basis);
  const std::size_t k = f.lattice.rank();
  std::vector<IntVec> perturbation;
  IntVec q0(k, 0);
  for (const auto& r : f.rays)
    for (std::size_t j = 0; j < k; ++j) q0[j] = checkedAdd(q0[j], r[j]);
  perturbation.push_back(q0);
  for (std::size_t j = 0; j < k; ++j) {
    IntVec e(k, 0);
    e[j] = 1;
    perturbation.push_back(e);
  }
  std::vector<HalfOpenPiece> pieces;
  for (const auto& simplex : triangulation(f)) {
    IntMat rows;
    for (auto i : simplex) rows.push_back(f.rays[i]);
    RatMat ainv = inverse(toRational(rows));
    HalfOpenPiece piece;
    for (std::size_t i = 0; i < k; ++i) {
      RatVec column;
      for (std::size_t j = 0; j < k; ++j) column.push_back(ainv[j][i]);
      bool positive = lexPositive(column, perturbation);
      piece.rays.push_back(f.lattice.point(rows[i]));
      piece.closedFacet.push_back(region == Region::Closed ? positive : !positive);
    }
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

bool pieceContains(const HalfOpenPiece& piece, const Character& m) {
  IntMat rows;
  for (const auto& r : piece.rays) rows.push_back(r.coords());
  RatVec b;
  for (auto x : m.coords()) b.emplace_back(static_cast<long>(x));
  auto lambda = solveRow(toRational(rows), b);
  if (!lambda) return false;
  for (std::size_t i = 0; i < lambda->size(); ++i) {
    const Rational& l = (*lambda)[i];
    if (l < 0 || (l == 0 && !piece.closedFacet[i])) return false;
  }
  return true;
}

std::vector<Character> boxPoints(const HalfOpenPiece& piece, const LatticeBasis& basis) {
  LatticeBasis l = basis.saturatedSpanOf(piece.rays);
  IntMat rows = frameRows(l, piece.rays);
  std::vector<Character> out;
  for (const auto& x : frameBox(rows, piece.closedFacet)) out.push_back(l.point(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Character> boxPoints(const std::vector<Character>& rays, const LatticeBasis& basis) {
  if (rays.empty()) throw MathError("box of an empty ray set");
  return boxPoints(HalfOpenPiece{rays, std::vector<bool>(rays.size(), false)}, basis);
}

ClassFraction interiorGenFunction(const Cone& c, const LatticeBasis& basis) {
  ClassFraction sum(basis.ambientRank());
  for (const auto& p : halfOpenDecomposition(c, basis, Region::RelativeInterior)) sum += pieceGenFunction(p, basis);
  return sum;
}

ClassFraction closedGenFunction(const Cone& c, const LatticeBasis& basis) {
  ClassFraction sum(basis.ambientRank());
  for (const auto& p : halfOpenDecomposition(c, basis, Region::Closed)) sum += pieceGenFunction(p, basis);
  return sum;
}

std::vector<Character> semigroupGenerators(const Cone& c, const LatticeBasis& basis) {
  ConeFrame f = coneFrame(c, basis);
  std::vector<Character> rays;
  for (const auto& r : f.rays) rays.push_back(f.lattice.point(r));
  std::set<Character> extra;
  for (const auto& simplex : triangulation(f)) {
    IntMat rows;
    for (auto i : simplex) rows.push_back(f.rays[i]);
    for (const auto& x : frameBox(rows, std::vector<bool>(rows.size(), true))) {
      if (gcdOf(x) == 0) continue;
      extra.insert(f.lattice.point(x));
    }
  }
  for (const auto& r : rays) extra.erase(r);
  std::vector<Character> all = rays;
  all.insert(all.end(), extra.begin(), extra.end());
  std::set<Character> members(all.begin(), all.end());
  std::vector<Character> out = rays;
  for (const auto& g : extra) {
    bool decomposable = false;
    for (const auto& h : all) {
      if (h == g) continue;
      if (members.count(g - h)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(g);
  }
  return out;
}

Character positiveGrading(const std::vector<Character>& vecs) {
  if (vecs.empty()) throw MathError("grading of an empty set");
  Cone c(vecs, ConeSide::Dual);
  ConeFrame f = coneFrame(c, LatticeBasis::standard(c.ambientDim()));
  IntVec sum(f.lattice.rank(), 0);
  for (const auto& n : f.facetNormals)
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] = checkedAdd(sum[j], n[j]);
  Character g = f.lattice.functionalToAmbient(sum);
  for (const auto& v : vecs)
    if (g.dot(v) <= 0) throw std::logic_error("grading is not positive on " + v.str());
  return g;
}

}  // namespace eqhirz::lattice
