#include "eqhirz/lattice/lattice_basis.hpp"

#include "eqhirz/error.hpp"

namespace eqhirz::lattice {

LatticeBasis::LatticeBasis(std::size_t ambient, std::vector<Character> basis)
    : ambient_(ambient), basis_(std::move(basis)) {
  IntMat m;
  for (const auto& b : basis_) m.push_back(b.coords());
  rows_ = toRational(m);
}

LatticeBasis LatticeBasis::standard(std::size_t ambientRank) {
  std::vector<Character> b;
  for (std::size_t i = 0; i < ambientRank; ++i) b.push_back(Character::unit(ambientRank, i));
  return LatticeBasis(ambientRank, std::move(b));
}

LatticeBasis LatticeBasis::generatedBy(std::size_t ambientRank, const std::vector<Character>& generators) {
  IntMat m;
  for (const auto& g : generators) {
    algebra::requireRank(g, ambientRank);
    m.push_back(g.coords());
  }
  std::vector<Character> basis;
  for (auto& row : hermiteRows(std::move(m))) basis.emplace_back(std::move(row));
  return LatticeBasis(ambientRank, std::move(basis));
}

std::optional<RatVec> LatticeBasis::rationalCoordinates(const Character& m) const {
  algebra::requireRank(m, ambient_);
  RatVec b;
  for (auto x : m.coords()) b.emplace_back(static_cast<long>(x));
  if (basis_.empty()) {
    if (m.isZero()) return RatVec{};
    return std::nullopt;
  }
  return solveRow(rows_, b);
}

std::optional<IntVec> LatticeBasis::coordinates(const Character& m) const {
  auto x = rationalCoordinates(m);
  if (!x) return std::nullopt;
  IntVec r;
  for (const auto& q : *x) {
    if (q.get_den() != 1) return std::nullopt;
    r.push_back(toInt64(q.get_num()));
  }
  return r;
}

Character LatticeBasis::point(const IntVec& coords) const {
  if (coords.size() != basis_.size()) throw MathError("coordinate vector has the wrong length");
  IntVec p(ambient_, 0);
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) p[j] = checkedAdd(p[j], checkedMul(coords[i], basis_[i][j]));
  return Character(p);
}

LatticeBasis LatticeBasis::saturatedSpanOf(const std::vector<Character>& vecs) const {
  const std::size_t k = rank();
  IntMat c;
  for (const auto& v : vecs) {
    auto x = rationalCoordinates(v);
    if (!x) throw MathError("vector " + v.str() + " is outside the span of the lattice");
    c.push_back(clearDenominators(*x));
  }
  if (c.empty()) return LatticeBasis(ambient_, {});
  IntMat annihilator = integerKernel(c, k);
  IntMat span;
  if (annihilator.empty()) {
    for (std::size_t i = 0; i < k; ++i) {
      IntVec e(k, 0);
      e[i] = 1;
      span.push_back(e);
    }
  } else {
    span = integerKernel(annihilator, k);
  }
  std::vector<Character> basis;
  for (const auto& x : span) basis.push_back(point(x));
  return LatticeBasis(ambient_, std::move(basis));
}

Character LatticeBasis::functionalToAmbient(const IntVec& f) const {
  // v = B^T (B B^T)^{-1} f
  const std::size_t k = rank();
  RatMat gram(k, RatVec(k, Rational(0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t a = 0; a < ambient_; ++a) gram[i][j] += rows_[i][a] * rows_[j][a];
  RatMat gi = inverse(gram);
  RatVec z(k, Rational(0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) z[i] += gi[i][j] * Rational(static_cast<long>(f[j]));
  RatVec v(ambient_, Rational(0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t a = 0; a < ambient_; ++a) v[a] += z[i] * rows_[i][a];
  return Character(clearDenominators(v));
}

IntVec LatticeBasis::pullback(const Character& v) const {
  algebra::requireRank(v, ambient_);
  IntVec r;
  for (const auto& b : basis_) r.push_back(b.dot(v));
  return r;
}

}  // namespace eqhirz::lattice
