#include "eqhirz/algebra/class_fraction.hpp"

#include <algorithm>

#include "eqhirz/error.hpp"

namespace eqhirz::algebra {

namespace {

// Removes one copy of w from the sorted multiset; false if absent.
bool takeOne(std::vector<Character>& set, const Character& w) {
  auto it = std::lower_bound(set.begin(), set.end(), w);
  if (it == set.end() || !(*it == w)) return false;
  set.erase(it);
  return true;
}

LaurentPoly timesAll(LaurentPoly p, const std::vector<Character>& factors) {
  for (const auto& w : factors) p = p.timesBinomial(w);
  return p;
}

void requireSameRank(const ClassFraction& a, const ClassFraction& b) {
  if (a.rank() != b.rank())
    throw MathError("rank mismatch: " + std::to_string(a.rank()) + " vs " +
                    std::to_string(b.rank()));
}

}  // namespace

ClassFraction::ClassFraction(LaurentPoly num, std::vector<Character> den)
    : num_(std::move(num)), den_(std::move(den)) {
  for (const auto& w : den_) {
    requireRank(w, num_.rank());
    if (w.isZero()) throw MathError("zero character as a denominator factor");
  }
  canonicalize();
}

void ClassFraction::canonicalize() {
  if (num_.isZero()) {
    den_.clear();
    return;
  }
  std::sort(den_.begin(), den_.end());
  std::size_t i = 0;
  while (i < den_.size()) {
    if (auto q = num_.divideByBinomial(den_[i])) {
      num_ = std::move(*q);
      den_.erase(den_.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    const Character failed = den_[i];
    while (i < den_.size() && den_[i] == failed) ++i;
  }
}

ClassFraction ClassFraction::constant(std::size_t rank, const CoeffFrac& c) {
  return ClassFraction(LaurentPoly::constant(rank, c));
}

ClassFraction ClassFraction::monomial(const Character& m, const CoeffFrac& c) {
  return ClassFraction(LaurentPoly::monomial(m, c));
}

ClassFraction ClassFraction::geometric(const Character& w) {
  return ClassFraction(LaurentPoly::constant(w.rank(), 1), {w});
}

ClassFraction ClassFraction::sVariable(const Character& w) {
  LaurentPoly p = LaurentPoly::monomial(w);
  p.addTerm(Character::zero(w.rank()), -1);
  return ClassFraction(std::move(p));
}

ClassFraction ClassFraction::sInverse(const Character& w) {
  return ClassFraction(LaurentPoly::constant(w.rank(), -1), {w});
}

ClassFraction ClassFraction::operator-() const {
  ClassFraction r = *this;
  r.num_ = -r.num_;
  return r;
}

ClassFraction& ClassFraction::operator+=(const ClassFraction& o) {
  if (&o == this) return *this *= CoeffFrac(2);
  requireSameRank(*this, o);
  if (o.isZero()) return *this;
  if (isZero()) return *this = o;
  std::vector<Character> onlyThis = den_;
  std::vector<Character> onlyOther;
  std::vector<Character> otherDen;
  LaurentPoly otherNum = o.num_;
  for (const auto& w : o.den_) {
    if (takeOne(onlyThis, w)) {
      otherDen.push_back(w);
    } else if (takeOne(onlyThis, -w)) {
      otherNum = -otherNum.shifted(-w);
      otherDen.push_back(-w);
    } else {
      onlyOther.push_back(w);
      otherDen.push_back(w);
    }
  }
  num_ = timesAll(std::move(num_), onlyOther) + timesAll(std::move(otherNum), onlyThis);
  den_.insert(den_.end(), onlyOther.begin(), onlyOther.end());
  canonicalize();
  return *this;
}

ClassFraction& ClassFraction::operator-=(const ClassFraction& o) { return *this += -o; }

ClassFraction& ClassFraction::operator*=(const ClassFraction& o) {
  if (&o == this) return *this *= ClassFraction(o);
  requireSameRank(*this, o);
  num_ = num_ * o.num_;
  den_.insert(den_.end(), o.den_.begin(), o.den_.end());
  canonicalize();
  return *this;
}

ClassFraction& ClassFraction::operator*=(const CoeffFrac& s) {
  num_ *= s;
  if (num_.isZero()) den_.clear();
  return *this;
}

bool operator==(const ClassFraction& a, const ClassFraction& b) {
  if (a.rank() != b.rank()) return false;
  std::vector<Character> onlyA = a.den_;
  std::vector<Character> onlyB;
  for (const auto& w : b.den_)
    if (!takeOne(onlyA, w)) onlyB.push_back(w);
  return timesAll(a.num_, onlyB) == timesAll(b.num_, onlyA);
}

ClassFraction ClassFraction::pow(int e) const {
  if (e < 0) throw MathError("negative power of a class fraction");
  ClassFraction r = one(rank()), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

ClassFraction ClassFraction::dividedBy(const ClassFraction& d) const {
  requireSameRank(*this, d);
  const auto& terms = d.num_.terms();
  LaurentPoly num = timesAll(num_, d.den_);
  std::vector<Character> den = den_;
  if (terms.size() == 1) {
    const auto& [m, c] = *terms.begin();
    num = num.shifted(-m) * c.inverse();
  } else if (terms.size() == 2) {
    auto it = terms.begin();
    const auto& [a, ca] = *it++;
    const auto& [b, cb] = *it;
    if (!(ca + cb).isZero())
      throw MathError("division by a binomial that is not of the form c*(T^a - T^b)");
    num = num.shifted(-a) * ca.inverse();
    den.push_back(b - a);
  } else {
    throw MathError(d.isZero() ? "division by zero class"
                               : "division by a class with more than two numerator terms");
  }
  return ClassFraction(std::move(num), std::move(den));
}

ClassFraction ClassFraction::substituteDelta(const Rational& value) const {
  return ClassFraction(num_.mapCoeffs([&](const CoeffFrac& c) { return CoeffFrac(c.evalDelta(value)); }),
                       den_);
}

ClassFraction ClassFraction::orientedBy(const Character& grading) const {
  LaurentPoly num = num_;
  std::vector<Character> den;
  for (const auto& w : den_) {
    std::int64_t g = grading.dot(w);
    if (g == 0) throw MathError("grading vanishes on denominator factor " + w.str());
    if (g > 0) {
      den.push_back(w);
    } else {
      num = -num.shifted(-w);
      den.push_back(-w);
    }
  }
  return ClassFraction(std::move(num), std::move(den));
}

LaurentPoly ClassFraction::numeratorOver(const std::vector<Character>& keep) const {
  std::vector<Character> extra = den_;
  for (const auto& w : keep)
    if (!takeOne(extra, w)) throw MathError("factor " + w.str() + " is not in the denominator");
  return timesAll(num_, extra);
}

LaurentPoly truncatedExpansion(const ClassFraction& c, const Character& grading,
                               std::int64_t maxDegree) {
  ClassFraction oriented = c.orientedBy(grading);
  LaurentPoly acc(c.rank());
  for (const auto& [m, coeff] : oriented.num().terms())
    if (grading.dot(m) <= maxDegree) acc.addTerm(m, coeff);
  for (const auto& w : oriented.den()) {
    const std::int64_t step = grading.dot(w);
    LaurentPoly next(c.rank());
    for (const auto& [m, coeff] : acc.terms()) {
      Character e = m;
      for (std::int64_t deg = grading.dot(m); deg <= maxDegree; deg += step) {
        next.addTerm(e, coeff);
        e += w;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace eqhirz::algebra
