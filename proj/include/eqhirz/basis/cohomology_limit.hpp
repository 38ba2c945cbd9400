#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqhirz/algebra/class_fraction.hpp"
#include "eqhirz/algebra/format.hpp"

namespace eqhirz::basis {

using algebra::Character;
using algebra::ClassFraction;
using algebra::CoeffFrac;

// Polynomial in t_1..t_r with Q(d) coefficients, exponents as Characters
// (so terms print in graded order), truncated above total degree maxDegree.
class TSeries {
 public:
  TSeries(std::size_t rank, int maxDegree) : rank_(rank), maxDegree_(maxDegree) {}

  std::size_t rank() const { return rank_; }
  int maxDegree() const { return maxDegree_; }
  const std::map<Character, CoeffFrac>& terms() const { return terms_; }
  CoeffFrac coeff(const Character& e) const;
  void addTerm(const Character& e, const CoeffFrac& c);

  friend TSeries operator+(const TSeries& a, const TSeries& b);
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  TSeries scaled(const CoeffFrac& c) const;
  TSeries truncated(int maxDegree) const;
  // Exact quotient by the linear form w.t; std::nullopt when some
  // homogeneous component is not divisible.  The result is exact through
  // maxDegree - 1.
  std::optional<TSeries> dividedByLinear(const Character& w) const;
  friend bool operator==(const TSeries&, const TSeries&) = default;

  // "t1 - 1/2*t1^2 + t1*t2"
  std::string str(algebra::CoeffBasis basis = algebra::CoeffBasis::Delta) const;

 private:
  std::size_t rank_;
  int maxDegree_;
  std::map<Character, CoeffFrac> terms_;
};

// exp(-w.t) through total degree maxDegree.
TSeries expMinus(const Character& w, int maxDegree);

struct CohomologyExpansion {
  TSeries numerator;             // exact through total degree order + poles.size()
  std::vector<Character> poles;  // linear forms w.t left in the denominator
  bool regular() const { return poles.empty(); }
  std::string str(algebra::CoeffBasis basis = algebra::CoeffBasis::Delta) const;
};

// Substitutes T^w = exp(-w.t) and expands through total degree `order`.
// A denominator 1 - T^w contributes the pole 1/(w.t) times a power series;
// poles that the numerator cancels are divided out.  An uncancelled pole
// throws MathError unless allowPoles, in which case it is reported in the
// result.
CohomologyExpansion cohomologyLimit(const ClassFraction& c, int order, bool allowPoles = false);

}  // namespace eqhirz::basis
