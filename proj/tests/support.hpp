#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "eqhirz/algebra/class_fraction.hpp"
#include "eqhirz/algebra/series.hpp"

namespace testsupport {

using namespace eqhirz::algebra;

inline CoeffFrac d() { return CoeffFrac::delta(); }
inline CoeffFrac y() { return CoeffFrac::y(); }

inline ClassFraction T(const Character& m) { return ClassFraction::monomial(m); }
inline ClassFraction S(const Character& w) { return ClassFraction::sVariable(w); }
inline ClassFraction invS(const Character& w) { return ClassFraction::sInverse(w); }
inline ClassFraction cst(std::size_t rank, const CoeffFrac& c) { return ClassFraction::constant(rank, c); }

// (1 + y T^w) / (1 - T^w)
inline ClassFraction fullLine(const Character& w) {
  return (cst(w.rank(), 1) + T(w) * y()) * ClassFraction::geometric(w);
}

inline SeriesTrunc<ClassFraction> polyInU(const std::vector<ClassFraction>& coeffs, int order) {
  return SeriesTrunc<ClassFraction>("U", 0, coeffs, order, ClassFraction(coeffs.front().rank()));
}

class RandomClasses {
 public:
  explicit RandomClasses(std::uint32_t seed, std::size_t rank = 2) : gen_(seed), rank_(rank) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  Character character(int lo, int hi) {
    std::vector<std::int64_t> c(rank_);
    for (auto& x : c) x = uniform(lo, hi);
    return Character(c);
  }

  CoeffFrac coeff() {
    DeltaPoly p(std::vector<Rational>{uniform(-3, 3), uniform(-2, 2)});
    if (p.isZero()) p = DeltaPoly(1);
    if (uniform(0, 4) == 0) return CoeffFrac(p, DeltaPoly(std::vector<Rational>{uniform(1, 3), 1}));
    return CoeffFrac(p);
  }

  LaurentPoly laurent(int terms) {
    LaurentPoly p(rank_);
    for (int i = 0; i < terms; ++i) p.addTerm(character(-2, 2), coeff());
    return p;
  }

  ClassFraction fraction() {
    static const std::vector<std::vector<std::int64_t>> pool = {{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {2, -1}};
    std::vector<Character> den;
    int k = uniform(0, 2);
    for (int i = 0; i < k; ++i) {
      const auto& w = pool[static_cast<std::size_t>(uniform(0, static_cast<int>(pool.size()) - 1))];
      std::vector<std::int64_t> full(rank_, 0);
      full[0] = w[0];
      full[1] = w[1];
      den.emplace_back(full);
    }
    return ClassFraction(laurent(uniform(1, 3)), den);
  }

  DeltaPoly poly(int degree) {
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i) c.push_back(makeRational(uniform(-5, 5), uniform(1, 3)));
    return DeltaPoly(c);
  }

 private:
  std::mt19937 gen_;
  std::size_t rank_;
};

}  // namespace testsupport
