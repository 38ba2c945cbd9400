#pragma once

#include <algorithm>
#include <string>
#include <type_traits>
#include <vector>

#include "eqhirz/algebra/class_fraction.hpp"
#include "eqhirz/error.hpp"

namespace eqhirz::algebra {

inline bool isZeroValue(const Rational& c) { return c == 0; }
inline bool isZeroValue(const CoeffFrac& c) { return c.isZero(); }
inline bool isZeroValue(const ClassFraction& c) { return c.isZero(); }
inline ClassFraction inv(const ClassFraction& c) { return ClassFraction::one(c.rank()).dividedBy(c); }

template <class C>
C scaleBy(const C& c, const Rational& r) {
  if constexpr (std::is_same_v<C, Rational>) {
    return c * r;
  } else {
    return c * CoeffFrac(r);
  }
}

// Truncated Laurent series sum_{i >= low} c_i x^i, known exactly for all
// degrees below order.  Coefficients outside [low, order) are not stored.
template <class C>
class SeriesTrunc {
 public:
  SeriesTrunc(std::string var, int low, std::vector<C> coeffs, int order, C zero)
      : var_(std::move(var)), low_(low), order_(order), zero_(std::move(zero)), c_(std::move(coeffs)) {
    if (order_ < low_) order_ = low_;
    c_.resize(static_cast<std::size_t>(order_ - low_), zero_);
  }

  static SeriesTrunc constant(std::string var, const C& c, int order, const C& zero) {
    return SeriesTrunc(std::move(var), 0, {c}, order, zero);
  }

  const std::string& var() const { return var_; }
  int low() const { return low_; }
  int order() const { return order_; }
  const C& zero() const { return zero_; }

  // Coefficient of x^degree; throws MathError when degree is not below order.
  C coeff(int degree) const {
    if (degree >= order_)
      throw MathError("insufficient truncation: coefficient of " + var_ + "^" +
                      std::to_string(degree) + " requested but series is exact only below degree " +
                      std::to_string(order_));
    if (degree < low_) return zero_;
    return c_[static_cast<std::size_t>(degree - low_)];
  }

  SeriesTrunc operator-() const {
    SeriesTrunc r = *this;
    for (auto& x : r.c_) x = scaleBy(x, Rational(-1));
    return r;
  }

  friend SeriesTrunc operator+(const SeriesTrunc& a, const SeriesTrunc& b) {
    int low = std::min(a.low_, b.low_), order = std::min(a.order_, b.order_);
    std::vector<C> c;
    for (int d = low; d < order; ++d) c.push_back(a.at(d) + b.at(d));
    return SeriesTrunc(a.var_, low, std::move(c), order, a.zero_);
  }
  friend SeriesTrunc operator-(const SeriesTrunc& a, const SeriesTrunc& b) { return a + (-b); }

  friend SeriesTrunc operator*(const SeriesTrunc& a, const SeriesTrunc& b) {
    int low = a.low_ + b.low_;
    int order = std::min(a.order_ + b.low_, b.order_ + a.low_);
    std::vector<C> c;
    for (int d = low; d < order; ++d) {
      C acc = a.zero_;
      for (int i = a.low_; i <= d - b.low_; ++i) {
        const C& x = a.at(i);
        if (isZeroValue(x)) continue;
        const C& y = b.at(d - i);
        if (isZeroValue(y)) continue;
        acc = acc + x * y;
      }
      c.push_back(std::move(acc));
    }
    return SeriesTrunc(a.var_, low, std::move(c), order, a.zero_);
  }

  SeriesTrunc scaled(const C& s) const {
    SeriesTrunc r = *this;
    for (auto& x : r.c_) x = x * s;
    return r;
  }

  // Multiplication by x^k.
  SeriesTrunc shifted(int k) const {
    SeriesTrunc r = *this;
    r.low_ += k;
    r.order_ += k;
    return r;
  }

  // Multiplicative inverse; the lowest nonzero coefficient must be a unit.
  SeriesTrunc inverse() const {
    int lead = low_;
    while (lead < order_ && isZeroValue(at(lead))) ++lead;
    if (lead >= order_) throw MathError("inverse of a series that vanishes to its truncation order");
    const int rel = order_ - lead;  // relative precision
    C invLead = inv(at(lead));
    std::vector<C> g;  // this / (lead coeff * x^lead) = 1 + ...
    for (int i = 0; i < rel; ++i) g.push_back(at(lead + i) * invLead);
    std::vector<C> h(static_cast<std::size_t>(rel), zero_);
    h[0] = g[0] * inv(g[0]);
    for (int i = 1; i < rel; ++i) {
      C acc = zero_;
      for (int j = 1; j <= i; ++j) {
        if (isZeroValue(g[static_cast<std::size_t>(j)])) continue;
        acc = acc + g[static_cast<std::size_t>(j)] * h[static_cast<std::size_t>(i - j)];
      }
      h[static_cast<std::size_t>(i)] = scaleBy(acc, Rational(-1));
    }
    for (auto& x : h) x = x * invLead;
    return SeriesTrunc(var_, -lead, std::move(h), rel - lead, zero_);
  }

  SeriesTrunc pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    SeriesTrunc r = constant(var_, one(), std::max(order_ - low_, 0), zero_);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

 private:
  const C& at(int degree) const {
    if (degree < low_ || degree >= order_) return zero_;
    return c_[static_cast<std::size_t>(degree - low_)];
  }
  C one() const {
    if constexpr (std::is_same_v<C, ClassFraction>) {
      return ClassFraction::one(zero_.rank());
    } else {
      return C(1);
    }
  }

  std::string var_;
  int low_;
  int order_;
  C zero_;
  std::vector<C> c_;
};

// U(h) = e^{-h} - 1, exact below degree `order` in h.
SeriesTrunc<Rational> uOfH(int order);

// Res_{h=0} U(h)^j using the substitution U(h) exact below degree
// substitutionOrder in h; throws MathError when that order is too small for
// the h^{-1} coefficient to be determined (it must be at least 1 - j).
Rational residueOfUPower(int j, int substitutionOrder);

// Res_{h=0} f(U(h)) for a truncated Laurent series f in U.  f must be known
// through U^{-1}; each pole term U^j is resolved with a substitution of
// order 1 - j unless a smaller substitutionOrder is forced.
template <class C>
C residue(const SeriesTrunc<C>& f, int substitutionOrder = 0) {
  if (f.order() < 0)
    throw MathError("insufficient truncation: series in " + f.var() +
                    " is not known through degree -1");
  C acc = f.zero();
  for (int j = f.low(); j < 0; ++j) {
    C c = f.coeff(j);
    if (isZeroValue(c)) continue;
    int sub = substitutionOrder > 0 ? substitutionOrder : 1 - j;
    acc = acc + scaleBy(c, residueOfUPower(j, sub));
  }
  return acc;
}

}  // namespace eqhirz::algebra
