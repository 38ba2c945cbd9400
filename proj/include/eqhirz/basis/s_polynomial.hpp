#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqhirz/algebra/class_fraction.hpp"

namespace eqhirz::basis {

using algebra::Character;
using algebra::ClassFraction;
using algebra::CoeffFrac;
using algebra::Rational;

// The alphabet S_{w_1}, ..., S_{w_N} with S_w = T^w - 1.  Weights are
// nonzero, distinct and of one rank.  Variables flagged as denominators are
// the ones a caller expects to see in denominators; rewriting accepts any
// alphabet letter there.
class SVariableSet {
 public:
  SVariableSet() = default;
  explicit SVariableSet(std::vector<Character> weights, std::vector<bool> denominator = {});

  std::size_t size() const { return weights_.size(); }
  std::size_t rank() const { return weights_.empty() ? 0 : weights_.front().rank(); }
  const std::vector<Character>& weights() const { return weights_; }
  const Character& weight(std::size_t i) const { return weights_[i]; }
  bool isDenominator(std::size_t i) const { return denominator_[i]; }
  std::optional<std::size_t> indexOf(const Character& w) const;
  // "S[1,0]"
  std::string name(std::size_t i) const;

 private:
  std::vector<Character> weights_;
  std::vector<bool> denominator_;
};

// S_1^{e_1} ... S_N^{e_N} d^k
struct SMonomial {
  std::vector<int> s;
  int delta = 0;

  int sDegree() const;
  bool divides(const SMonomial& o) const;
  // Canonical order: total S-degree, then larger exponent of the earlier
  // variable first, then d-degree.
  friend bool operator<(const SMonomial& a, const SMonomial& b);
  friend bool operator==(const SMonomial& a, const SMonomial& b) = default;
};

class SPolynomial {
 public:
  using Terms = std::map<SMonomial, Rational>;

  explicit SPolynomial(std::size_t nvars = 0) : n_(nvars) {}
  static SPolynomial constant(std::size_t nvars, const Rational& c);
  static SPolynomial variable(std::size_t nvars, std::size_t i);
  static SPolynomial delta(std::size_t nvars);
  // c(d) as a polynomial in d; throws MathError when c has a d-denominator.
  static SPolynomial fromCoeff(std::size_t nvars, const CoeffFrac& c);

  std::size_t numVars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  Rational coeff(const SMonomial& m) const;
  void addTerm(const SMonomial& m, const Rational& c);

  SPolynomial operator-() const;
  SPolynomial& operator+=(const SPolynomial& o);
  SPolynomial& operator-=(const SPolynomial& o);
  SPolynomial& operator*=(const Rational& s);
  friend SPolynomial operator+(SPolynomial a, const SPolynomial& b) { return a += b; }
  friend SPolynomial operator-(SPolynomial a, const SPolynomial& b) { return a -= b; }
  friend SPolynomial operator*(const SPolynomial& a, const SPolynomial& b);
  friend SPolynomial operator*(SPolynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const SPolynomial& a, const SPolynomial& b) = default;
  SPolynomial pow(int e) const;

  // The same polynomial over an alphabet listed in another order:
  // perm[i] is the new index of variable i.
  SPolynomial permuted(const std::vector<std::size_t>& perm) const;

  // Substitutes S_w = T^w - 1.
  algebra::LaurentPoly toLaurent(const SVariableSet& vars) const;
  ClassFraction toClass(const SVariableSet& vars) const { return ClassFraction(toLaurent(vars)); }
  // "-1 + 2*S[0,1] + S[1,0]^2*d", lowest terms first
  std::string str(const SVariableSet& vars) const;

 private:
  std::size_t n_;
  Terms terms_;
};

std::string formatSMonomial(const SMonomial& m, const SVariableSet& vars);

}  // namespace eqhirz::basis
