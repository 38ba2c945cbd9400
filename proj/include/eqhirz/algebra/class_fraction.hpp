#pragma once

#include <vector>

#include "eqhirz/algebra/laurent_poly.hpp"

namespace eqhirz::algebra {

// numerator / prod_{w in den} (1 - T^w), with den a sorted multiset of
// nonzero characters.  Every factor that divides the numerator exactly is
// cancelled on construction, so the representation is canonical for a
// fixed choice of factor signs.
class ClassFraction {
 public:
  explicit ClassFraction(std::size_t rank = 0) : num_(rank) {}
  explicit ClassFraction(LaurentPoly num, std::vector<Character> den = {});

  static ClassFraction constant(std::size_t rank, const CoeffFrac& c);
  static ClassFraction one(std::size_t rank) { return constant(rank, CoeffFrac(1)); }
  static ClassFraction monomial(const Character& m, const CoeffFrac& c = CoeffFrac(1));
  // 1 / (1 - T^w)
  static ClassFraction geometric(const Character& w);
  // S_w = T^w - 1
  static ClassFraction sVariable(const Character& w);
  // 1 / S_w = -1 / (1 - T^w)
  static ClassFraction sInverse(const Character& w);

  std::size_t rank() const { return num_.rank(); }
  const LaurentPoly& num() const { return num_; }
  const std::vector<Character>& den() const { return den_; }
  bool isZero() const { return num_.isZero(); }
  bool isLaurent() const { return den_.empty(); }
  // A constant c (no T-dependence).
  bool isConstant() const { return den_.empty() && num_.isConstant(); }

  ClassFraction operator-() const;
  ClassFraction& operator+=(const ClassFraction& o);
  ClassFraction& operator-=(const ClassFraction& o);
  ClassFraction& operator*=(const ClassFraction& o);
  ClassFraction& operator*=(const CoeffFrac& s);
  friend ClassFraction operator+(ClassFraction a, const ClassFraction& b) { return a += b; }
  friend ClassFraction operator-(ClassFraction a, const ClassFraction& b) { return a -= b; }
  friend ClassFraction operator*(ClassFraction a, const ClassFraction& b) { return a *= b; }
  friend ClassFraction operator*(ClassFraction a, const CoeffFrac& s) { return a *= s; }
  friend ClassFraction operator*(const CoeffFrac& s, ClassFraction a) { return a *= s; }
  // Decided by cross-multiplication over the non-shared denominator factors.
  friend bool operator==(const ClassFraction& a, const ClassFraction& b);

  ClassFraction pow(int e) const;
  // Exact division by a class whose numerator is c*T^m or c*(T^a - T^b);
  // throws MathError for any other divisor.
  ClassFraction dividedBy(const ClassFraction& d) const;

  // Coefficients evaluated at d = value (resp. y = value); throws MathError
  // naming the coefficient when one of its denominators vanishes there.
  ClassFraction substituteDelta(const Rational& value) const;
  ClassFraction substituteY(const Rational& value) const { return substituteDelta(-1 - value); }

  // Rewrites the denominator so that every factor w satisfies g(w) > 0,
  // using 1/(1 - T^w) = -T^{-w}/(1 - T^{-w}); throws if some g(w) = 0.
  ClassFraction orientedBy(const Character& grading) const;

  // numerator * prod_{w in extra} (1 - T^w) with extra = den minus the
  // factors in keep, or throws when keep is not a sub-multiset of den.
  LaurentPoly numeratorOver(const std::vector<Character>& keep) const;

 private:
  void canonicalize();
  LaurentPoly num_;
  std::vector<Character> den_;
};

// Power-series expansion along a grading g with g(w) != 0 on every
// denominator factor: all terms T^m with g(m) <= maxDegree.
LaurentPoly truncatedExpansion(const ClassFraction& c, const Character& grading,
                               std::int64_t maxDegree);

}  // namespace eqhirz::algebra
