#include "eqhirz/algebra/delta_poly.hpp"

#include <algorithm>

#include "eqhirz/error.hpp"

namespace eqhirz::algebra {

DeltaPoly::DeltaPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

DeltaPoly::DeltaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

DeltaPoly DeltaPoly::monomial(const Rational& c, int degree) {
  DeltaPoly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.c_.back() = c;
  return p;
}

void DeltaPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational DeltaPoly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rational DeltaPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

DeltaPoly DeltaPoly::compose(const Rational& a, const Rational& b) const {
  DeltaPoly lin(std::vector<Rational>{a, b});
  DeltaPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * lin;
    acc += DeltaPoly(*it);
  }
  return acc;
}

DeltaPoly DeltaPoly::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  DeltaPoly r = *this;
  Rational inv = 1 / c_.back();
  for (auto& x : r.c_) x *= inv;
  return r;
}

DeltaPoly DeltaPoly::operator-() const {
  DeltaPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

DeltaPoly& DeltaPoly::operator+=(const DeltaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

DeltaPoly& DeltaPoly::operator-=(const DeltaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b) {
  if (a.isZero() || b.isZero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return DeltaPoly(std::move(r));
}

DeltaPoly& DeltaPoly::operator*=(const DeltaPoly& o) { return *this = *this * o; }

DeltaPoly& DeltaPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

std::pair<DeltaPoly, DeltaPoly> DeltaPoly::divmod(const DeltaPoly& a, const DeltaPoly& b) {
  if (b.isZero()) throw MathError("division by the zero polynomial");
  DeltaPoly q, r = a;
  if (a.degree() < b.degree()) return {q, r};
  q.c_.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
  Rational invLead = 1 / b.lead();
  while (!r.isZero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rational f = r.lead() * invLead;
    q.c_[static_cast<std::size_t>(shift)] = f;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[j + static_cast<std::size_t>(shift)] -= f * b.c_[j];
    r.trim();
  }
  q.trim();
  return {q, r};
}

DeltaPoly DeltaPoly::gcd(DeltaPoly a, DeltaPoly b) {
  while (!b.isZero()) {
    DeltaPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string DeltaPoly::str(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace eqhirz::algebra
