#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eqhirz/algebra/rational.hpp"

namespace eqhirz::algebra {

// Dense univariate polynomial over Q; coefficient i multiplies x^i.
// The zero polynomial has no coefficients and degree -1.
class DeltaPoly {
 public:
  DeltaPoly() = default;
  DeltaPoly(const Rational& c);  // NOLINT(implicit)
  DeltaPoly(int c) : DeltaPoly(Rational(c)) {}  // NOLINT(implicit)
  explicit DeltaPoly(std::vector<Rational> coeffs);

  static DeltaPoly monomial(const Rational& c, int degree);
  static DeltaPoly x() { return monomial(1, 1); }

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool isZero() const { return c_.empty(); }
  bool isConstant() const { return c_.size() <= 1; }
  bool isOne() const { return c_.size() == 1 && c_[0] == 1; }
  Rational operator[](int i) const;
  const Rational& lead() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  // p(x) -> p(a + b x)
  DeltaPoly compose(const Rational& a, const Rational& b) const;
  DeltaPoly monic() const;

  DeltaPoly operator-() const;
  DeltaPoly& operator+=(const DeltaPoly& o);
  DeltaPoly& operator-=(const DeltaPoly& o);
  DeltaPoly& operator*=(const DeltaPoly& o);
  DeltaPoly& operator*=(const Rational& s);

  friend DeltaPoly operator+(DeltaPoly a, const DeltaPoly& b) { return a += b; }
  friend DeltaPoly operator-(DeltaPoly a, const DeltaPoly& b) { return a -= b; }
  friend DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b);
  friend bool operator==(const DeltaPoly& a, const DeltaPoly& b) { return a.c_ == b.c_; }

  // Euclidean division; throws MathError when b is zero.
  static std::pair<DeltaPoly, DeltaPoly> divmod(const DeltaPoly& a, const DeltaPoly& b);
  // Monic gcd (zero when both inputs are zero).
  static DeltaPoly gcd(DeltaPoly a, DeltaPoly b);

  // Descending-degree rendering such as "3*d^2 - d + 1/2".
  std::string str(std::string_view var) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace eqhirz::algebra
