#include "eqhirz/algebra/coeff_frac.hpp"

#include "eqhirz/error.hpp"

namespace eqhirz::algebra {

CoeffFrac::CoeffFrac(DeltaPoly num, DeltaPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.isZero()) throw MathError("zero denominator in coefficient fraction");
  normalize();
}

void CoeffFrac::normalize() {
  if (num_.isZero()) {
    den_ = DeltaPoly(1);
    return;
  }
  if (den_.isConstant()) {
    if (!den_.isOne()) {
      num_ *= 1 / den_.lead();
      den_ = DeltaPoly(1);
    }
    return;
  }
  DeltaPoly g = DeltaPoly::gcd(num_, den_);
  if (!g.isOne()) {
    num_ = DeltaPoly::divmod(num_, g).first;
    den_ = DeltaPoly::divmod(den_, g).first;
  }
  Rational lead = den_.lead();
  if (lead != 1) {
    num_ *= 1 / lead;
    den_ *= 1 / lead;
  }
}

Rational CoeffFrac::evalDelta(const Rational& value) const {
  Rational d = den_.eval(value);
  if (d == 0)
    throw MathError("coefficient " + str("d") + " has a pole at d = " + value.get_str());
  return num_.eval(value) / d;
}

CoeffFrac CoeffFrac::swapDeltaY() const {
  return CoeffFrac(num_.compose(-1, -1), den_.compose(-1, -1));
}

CoeffFrac CoeffFrac::inverse() const {
  if (num_.isZero()) throw MathError("inverse of zero coefficient");
  return CoeffFrac(den_, num_);
}

CoeffFrac CoeffFrac::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  CoeffFrac r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

CoeffFrac CoeffFrac::operator-() const {
  CoeffFrac r = *this;
  r.num_ = -r.num_;
  return r;
}

CoeffFrac& CoeffFrac::operator+=(const CoeffFrac& o) {
  if (o.isZero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.isOne()) normalize();
    else if (num_.isZero()) den_ = DeltaPoly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

CoeffFrac& CoeffFrac::operator-=(const CoeffFrac& o) { return *this += -o; }

CoeffFrac& CoeffFrac::operator*=(const CoeffFrac& o) {
  if (den_.isOne() && o.den_.isOne()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

std::string CoeffFrac::str(std::string_view var) const {
  if (den_.isOne()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace eqhirz::algebra
