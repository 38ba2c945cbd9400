#pragma once

#include <string>
#include <string_view>

#include "eqhirz/algebra/delta_poly.hpp"

namespace eqhirz::algebra {

// Element of Q(d): reduced fraction num/den with monic den.  The internal
// variable is d (delta); the genus variable y = -1 - d is a presentation alias.
class CoeffFrac {
 public:
  CoeffFrac() : den_(1) {}
  CoeffFrac(const Rational& c) : num_(c), den_(1) {}  // NOLINT(implicit)
  CoeffFrac(int c) : CoeffFrac(Rational(c)) {}        // NOLINT(implicit)
  CoeffFrac(DeltaPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT(implicit)
  CoeffFrac(DeltaPoly num, DeltaPoly den);

  static CoeffFrac delta() { return CoeffFrac(DeltaPoly::x()); }
  static CoeffFrac y() { return CoeffFrac(DeltaPoly(std::vector<Rational>{-1, -1})); }

  const DeltaPoly& num() const { return num_; }
  const DeltaPoly& den() const { return den_; }
  bool isZero() const { return num_.isZero(); }
  bool isOne() const { return num_.isOne() && den_.isOne(); }
  bool isPolynomial() const { return den_.isOne(); }
  bool isConstant() const { return den_.isOne() && num_.isConstant(); }

  // Value at d = value; throws MathError when the denominator vanishes there.
  Rational evalDelta(const Rational& value) const;
  // Value at y = value, i.e. d = -1 - value.
  Rational evalY(const Rational& value) const { return evalDelta(-1 - value); }
  // Re-expresses the coefficient in y: the returned fraction, read as a
  // function of y, equals this one read as a function of d.  Involutive.
  CoeffFrac swapDeltaY() const;

  CoeffFrac inverse() const;
  CoeffFrac pow(int e) const;
  CoeffFrac operator-() const;
  CoeffFrac& operator+=(const CoeffFrac& o);
  CoeffFrac& operator-=(const CoeffFrac& o);
  CoeffFrac& operator*=(const CoeffFrac& o);
  CoeffFrac& operator/=(const CoeffFrac& o) { return *this *= o.inverse(); }
  friend CoeffFrac operator+(CoeffFrac a, const CoeffFrac& b) { return a += b; }
  friend CoeffFrac operator-(CoeffFrac a, const CoeffFrac& b) { return a -= b; }
  friend CoeffFrac operator*(CoeffFrac a, const CoeffFrac& b) { return a *= b; }
  friend CoeffFrac operator/(CoeffFrac a, const CoeffFrac& b) { return a /= b; }
  friend bool operator==(const CoeffFrac& a, const CoeffFrac& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // "num" or "(num)/(den)" in the named variable.
  std::string str(std::string_view var) const;

 private:
  void normalize();
  DeltaPoly num_;
  DeltaPoly den_;
};

inline CoeffFrac inv(const CoeffFrac& c) { return c.inverse(); }
inline Rational inv(const Rational& c) { return 1 / c; }

}  // namespace eqhirz::algebra
