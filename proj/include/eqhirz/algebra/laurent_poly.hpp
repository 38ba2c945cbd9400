#pragma once

#include <map>
#include <optional>
#include <string>

#include "eqhirz/algebra/character.hpp"
#include "eqhirz/algebra/coeff_frac.hpp"

namespace eqhirz::algebra {

// Finite sum of c_m T^m over characters m of a fixed rank, c_m in Q(d).
class LaurentPoly {
 public:
  using Terms = std::map<Character, CoeffFrac>;

  explicit LaurentPoly(std::size_t rank = 0) : rank_(rank) {}
  static LaurentPoly constant(std::size_t rank, const CoeffFrac& c);
  static LaurentPoly monomial(const Character& m, const CoeffFrac& c = CoeffFrac(1));

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  CoeffFrac coeff(const Character& m) const;
  // True when the only exponent present is the zero character (or p = 0).
  bool isConstant() const;

  void addTerm(const Character& m, const CoeffFrac& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const CoeffFrac& s);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const CoeffFrac& s) { return a *= s; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  // Multiplies by T^m.
  LaurentPoly shifted(const Character& m) const;
  // Multiplies by (1 - T^w).
  LaurentPoly timesBinomial(const Character& w) const;
  // Exact quotient by (1 - T^w), or nullopt when (1 - T^w) does not divide.
  std::optional<LaurentPoly> divideByBinomial(const Character& w) const;

  template <class F>
  LaurentPoly mapCoeffs(F&& f) const {
    LaurentPoly r(rank_);
    for (const auto& [m, c] : terms_) r.addTerm(m, f(c));
    return r;
  }

 private:
  std::size_t rank_;
  Terms terms_;
};

}  // namespace eqhirz::algebra
