#include "eqhirz/hirz/projective_cone.hpp"

#include "eqhirz/algebra/format.hpp"
#include "eqhirz/algebra/series.hpp"
#include "eqhirz/error.hpp"
#include "eqhirz/hirz/local_classes.hpp"

namespace eqhirz::hirz {

using algebra::Character;
using algebra::SeriesTrunc;
using USeries = SeriesTrunc<CoeffFrac>;

namespace {

USeries constantU(const CoeffFrac& c, int n) { return USeries::constant("U", c, n, CoeffFrac()); }

// a + b U, exact below U^n
USeries linearU(const CoeffFrac& a, const CoeffFrac& b, int n) {
  return USeries("U", 0, {a, b}, n, CoeffFrac());
}

UPoly toUPoly(const USeries& s, int n, bool requirePolynomial) {
  UPoly f;
  f.modulus = n;
  for (int i = 0; i < n; ++i) {
    CoeffFrac c = s.coeff(i);
    if (requirePolynomial && !c.isPolynomial())
      throw MathError("hypersurface class: coefficient of U^" + std::to_string(i) +
                      " is not polynomial in d: " + algebra::formatCoeff(c, algebra::CoeffBasis::Delta));
    f.coeffs.push_back(std::move(c));
  }
  while (!f.coeffs.empty() && f.coeffs.back().isZero()) f.coeffs.pop_back();
  return f;
}

// (-1)^n (1 + y(1+U))^n / (1 + y) mod U^n
USeries projectiveNumerator(int n) {
  const CoeffFrac y = CoeffFrac::y();
  USeries s = linearU(CoeffFrac(1) + y, y, n).pow(n) * constantU(algebra::inv(CoeffFrac(1) + y), n);
  return n % 2 == 0 ? s : -s;
}

void requireN(int n) {
  if (n < 1) throw MathError("projective class: need n >= 1");
}

}  // namespace

int UPoly::degree() const { return static_cast<int>(coeffs.size()) - 1; }

UPoly hypersurfaceF(int n, int d) {
  requireN(n);
  if (d < 0) throw MathError("hypersurface class: need d >= 0");
  const CoeffFrac y = CoeffFrac::y();
  USeries onePlusUd = linearU(1, 1, n).pow(d);
  USeries top = constantU(1, n) - onePlusUd;
  USeries bottom = constantU(1, n) + onePlusUd * constantU(y, n);
  USeries f = projectiveNumerator(n) * top * bottom.inverse();
  return toUPoly(f, n, true);
}

UPoly projectiveSpaceF(int n) {
  requireN(n);
  return toUPoly(projectiveNumerator(n), n, true);
}

CoeffFrac chiOfProjectiveClass(const UPoly& f, int n) {
  requireN(n);
  if (f.degree() >= n) throw MathError("projective class: f must have degree below n");
  if (f.coeffs.empty()) return CoeffFrac();
  USeries s("U", 0, f.coeffs, n, CoeffFrac());
  return algebra::residue(s.shifted(-n));
}

ClassFraction coneClass(const UPoly& f, int n, const CoeffFrac& chiY, ConePart part) {
  requireN(n);
  if (f.degree() >= n)
    throw MathError("cone class: f has degree " + std::to_string(f.degree()) + " but must be below n = " +
                    std::to_string(n));
  const Character t({1});
  const CoeffFrac delta = CoeffFrac::delta();
  ClassFraction fOverSn(1);
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coeffs[static_cast<std::size_t>(i)].isZero()) continue;
    ClassFraction term = i >= n ? ClassFraction::sVariable(t).pow(i - n) : ClassFraction::sInverse(t).pow(n - i);
    fOverSn += term * f.coeffs[static_cast<std::size_t>(i)];
  }
  ClassFraction open = (ClassFraction::constant(1, chiY) - fOverSn) * delta;
  if (part == ConePart::Open) return open;
  ClassFraction closed = open + ClassFraction::one(1);
  if (part == ConePart::Closed) return closed;
  return sncLocalClass(n, 0, std::vector<Character>(static_cast<std::size_t>(n), t), SncVariant::Space) - closed;
}

std::pair<ClassFraction, ClassFraction> quadricRecursion(int n) {
  requireN(n);
  const Character t({1});
  const CoeffFrac delta = CoeffFrac::delta();
  auto space = [&](int m) {
    return sncLocalClass(m, 0, std::vector<Character>(static_cast<std::size_t>(m), t), SncVariant::Space);
  };
  if (n == 1) return {ClassFraction::one(1), space(1) - ClassFraction::one(1)};
  if (n == 2) {
    ClassFraction comp = sncLocalClass(2, 2, {t, t}, SncVariant::Complement);
    return {space(2) - comp, comp};
  }
  auto [q, comp] = quadricRecursion(n - 2);
  const ClassFraction S = ClassFraction::sVariable(t);
  const ClassFraction one = ClassFraction::one(1);
  ClassFraction line = (ClassFraction::constant(1, delta) + S + S * delta).pow(n - 2);
  ClassFraction invSn = ClassFraction::sInverse(t).pow(n);
  CoeffFrac onePlusDelta = CoeffFrac(1) + delta;
  ClassFraction qn = S * (ClassFraction::constant(1, 2) + S) * line * invSn * delta + q * onePlusDelta;
  ClassFraction cn = (one + S).pow(2) * line * invSn * delta.pow(2) + comp * onePlusDelta;
  return {qn, cn};
}

}  // namespace eqhirz::hirz
