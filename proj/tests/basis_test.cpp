#include <doctest.h>

#include <numeric>

#include "cone_catalog.hpp"
#include "eqhirz/basis/cohomology_limit.hpp"
#include "eqhirz/basis/positivity.hpp"
#include "eqhirz/basis/rewrite.hpp"
#include "eqhirz/error.hpp"
#include "eqhirz/hirz/local_classes.hpp"
#include "eqhirz/hirz/toric.hpp"
#include "support.hpp"

using namespace testsupport;
namespace bs = eqhirz::basis;
namespace hz = eqhirz::hirz;
using bs::SMonomial;
using bs::SPolynomial;
using bs::SVariableSet;

namespace {

const Character t1{1, 0}, t2{0, 1};

struct Poly {
  std::size_t n;
  SPolynomial s(std::size_t i) const { return SPolynomial::variable(n, i); }
  SPolynomial c(long v) const { return SPolynomial::constant(n, Rational(v)); }
  SPolynomial d() const { return SPolynomial::delta(n); }
};

bool simplicial(const CatalogCone& c) {
  return c.cone().rays().size() == c.lattice().saturatedSpanOf(c.cone().rays()).rank();
}

}  // namespace

TEST_CASE("S-polynomials substitute S_w = T^w - 1") {
  SVariableSet vars({t1, t2, Character{1, 1}});
  Poly P{3};
  CHECK((P.s(0) + P.c(1)).toClass(vars) == T(t1));
  CHECK(((P.s(0) + P.c(1)) * (P.s(1) + P.c(1))).toClass(vars) == T(Character{1, 1}));
  CHECK(P.s(2).pow(3).toClass(vars) == S(Character{1, 1}).pow(3));
  CHECK((P.d() * P.s(1)).toClass(vars) == S(t2) * d());
  CHECK(P.c(0).isZero());
  CHECK(vars.name(2) == "S[1,1]");
  CHECK((P.s(0) * P.s(0) * P.d() + P.s(1) * P.c(2) - P.c(1)).str(vars) == "-1 + 2*S[0,1] + S[1,0]^2*d");
  CHECK_THROWS_AS(SPolynomial::fromCoeff(3, CoeffFrac(1) / (d() + CoeffFrac(1))), eqhirz::MathError);
  CHECK(SPolynomial::fromCoeff(3, y()) == -P.c(1) - P.d());
  CHECK_THROWS_AS(SVariableSet({t1, t1}), eqhirz::MathError);
  CHECK_THROWS_AS(SVariableSet({t1, Character{0, 0}}), eqhirz::MathError);
}

TEST_CASE("canonical order of S-monomials") {
  SMonomial a{{1, 0}, 0}, b{{0, 1}, 0}, c{{0, 0}, 3}, e{{2, 0}, 0}, f{{1, 0}, 1};
  CHECK(c < a);
  CHECK(a < b);
  CHECK(a < f);
  CHECK(b < e);
  CHECK(a.divides(e));
  CHECK(!b.divides(f));
}

TEST_CASE("rewriting in S-variables is exact") {
  SVariableSet vars({t1, t2, Character{1, 1}, Character{-1, 1}});
  RandomClasses rnd(7);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    LaurentPoly num(2);
    for (int k = rnd.uniform(1, 4); k > 0; --k)
      num.addTerm(Character{rnd.uniform(-2, 2), rnd.uniform(2, 4)}, CoeffFrac(rnd.poly(rnd.uniform(0, 2))));
    std::vector<Character> den;
    for (int k = rnd.uniform(0, 2); k > 0; --k) den.push_back(rnd.uniform(0, 1) ? t1 : Character{1, 1});
    ClassFraction c(num, den);
    CAPTURE(formatClass(c, CoeffBasis::Delta));
    bs::RewriteResult r = bs::rewriteInS(c, vars);
    CHECK(r.exact);
    CHECK(r.form.toClass(vars) == c);
    ++checked;
  }
  CHECK(checked == 60);
}

TEST_CASE("representations take the first monomial in the canonical order") {
  SVariableSet vars({Character{2, 0}, Character{0, 2}, Character{1, 1}});
  bs::RepresentationSearch reps(vars);
  CHECK(*reps.find(Character{2, 2}) == std::vector<int>{1, 1, 0});
  CHECK(*reps.find(Character{3, 1}) == std::vector<int>{1, 0, 1});
  CHECK(!reps.find(Character{1, 0}));
  CHECK_THROWS_WITH_AS(reps.monomial(Character{1, 0}), doctest::Contains("[1,0]"), eqhirz::MathError);
  bs::RepresentationSearch later(vars, {2, 0, 1});
  CHECK(*later.find(Character{2, 2}) == std::vector<int>{0, 0, 2});
}

TEST_CASE("constructive toric expansion: A_{n-1} display") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    CatalogCone c = aCone(n);
    SVariableSet vars({Character{n, 0}, Character{0, n}, Character{1, 1}});
    Poly P{3};
    SPolynomial sum(3);
    for (int i = 1; i <= n; ++i) sum += (P.c(1) + P.s(2)).pow(i);
    SPolynomial display = P.s(0) * P.s(1) + ((P.c(1) + P.s(0)) * P.s(1) + (P.c(1) + P.s(1)) * P.s(0)) * P.d() +
                          sum * P.d().pow(2);
    bs::SFraction x = bs::toricSExpansion(c.cone(), c.lattice(), vars);
    CHECK(x.monomialDen == std::vector<int>{1, 1, 0});
    CHECK(x.extraDen.empty());
    CHECK(x.numerator == display);
    CHECK(x.toClass(vars) == hz::toricLocalClass(c.cone(), c.lattice()));
    CHECK(bs::positivityReport(x.numerator).positive);
  }
  SVariableSet vars({Character{2, 0}, Character{0, 2}, Character{1, 1}});
  CatalogCone a1 = aCone(2);
  CHECK(bs::toricSExpansion(a1.cone(), a1.lattice(), vars).str(vars) ==
        "(2*d^2 + S[2,0]*d + S[0,2]*d + 3*S[1,1]*d^2 + S[2,0]*S[0,2] + 2*S[2,0]*S[0,2]*d + S[1,1]^2*d^2)/"
        "(S[2,0]*S[0,2])");
}

TEST_CASE("constructive toric expansion is exact and nonnegative on simplicial cones") {
  int simplicialCount = 0;
  for (const auto& c : catalog()) {
    CAPTURE(c.name);
    if (!simplicial(c)) continue;
    ++simplicialCount;
    SVariableSet vars(eqhirz::lattice::semigroupGenerators(c.cone(), c.lattice()));
    bs::SFraction x = bs::toricSExpansion(c.cone(), c.lattice(), vars);
    CHECK(x.toClass(vars) == hz::toricLocalClass(c.cone(), c.lattice()));
    bs::PositivityReport r = bs::positivityReport(x.numerator);
    CHECK(r.verdict() == "POSITIVE");
    CHECK(r.offending.empty());
  }
  CHECK(simplicialCount >= 7);
}

TEST_CASE("pentagon suspension: the rewritten class has negative coefficients") {
  CatalogCone c = catalog().back();
  REQUIRE(c.name == "pentagon");
  SVariableSet vars(eqhirz::lattice::semigroupGenerators(c.cone(), c.lattice()));
  ClassFraction cls = hz::toricLocalClass(c.cone(), c.lattice());
  bs::RewriteResult r = bs::rewriteInS(cls, vars);
  CHECK(r.exact);
  bs::PositivityReport rep = bs::positivityReport(r.form.numerator);
  CHECK(rep.verdict() == "NOT-POSITIVE");
  REQUIRE(!rep.offending.empty());
  for (const auto& m : rep.offending) CHECK(r.form.numerator.coeff(m) < 0);
  for (const auto& a : rep.offending)
    for (const auto& b : rep.offending)
      if (!(a == b)) CHECK(!a.divides(b));
}

TEST_CASE("positivity: Lagrangian Grassmannian, flag variety, Grassmannian") {
  SUBCASE("LG(2)") {
    std::vector<Character> w = {Character{2, 0}, Character{0, 2}, Character{1, 1}};
    CatalogCone a1 = aCone(2);
    ClassFraction cell = hz::sncLocalClass(3, 0, w, hz::SncVariant::Space) - hz::toricLocalClass(a1.cone(), a1.lattice());
    SVariableSet vars(w);
    bs::RewriteResult r = bs::rewriteInS(cell, vars);
    CHECK(r.exact);
    CHECK(bs::positivityReport(r.form.numerator).verdict() == "POSITIVE");
    Poly P{3};
    SPolynomial s1 = P.s(0), s2 = P.s(1), s3 = P.s(2), one = P.c(1);
    SPolynomial num = P.d() * (s3 + one) * s1 * s2 + P.d().pow(2) * (s3 + one) * (s3 * s3 + s1 * s2 + s3) +
                      P.d().pow(3) * (s3 + one).pow(3);
    ClassFraction display = num.toClass(vars) * invS(w[0]) * invS(w[1]) * invS(w[2]);
    CHECK(r.form.toClass(vars) == display);
  }
  SUBCASE("Fl(3)") {
    const Character w12{-1, 1, 0}, w23{0, -1, 1}, w13{-1, 0, 1};
    auto full = [](const Character& w) {
      return hz::ChartFactor{hz::ChartFactor::Kind::FullLine, w, ClassFraction(3)};
    };
    ClassFraction x = hz::assemble({{1, 1, {full(w12), full(w23), full(w13)}},
                                    {-1, 2, {full(w12), full(w23)}},
                                    {1, 1, {full(w12)}},
                                    {1, 1, {full(w23)}},
                                    {-1, 1, {}}},
                                   3);
    SVariableSet vars({w12, w23, w13});
    bs::RewriteResult r = bs::rewriteInS(x, vars);
    CHECK(r.exact);
    bs::PositivityReport rep = bs::positivityReport(r.form.numerator);
    CHECK(rep.verdict() == "POSITIVE");
    Poly P{3};
    CHECK(r.form.monomialDen == std::vector<int>{1, 1, 1});
    CHECK(r.form.numerator == P.d() * (P.c(1) + P.s(0)) * (P.c(1) + P.s(1)) *
                                  (P.s(0) * P.s(1) + P.d() * P.s(0) * P.s(1) + P.d().pow(2) * (P.c(1) + P.s(0)) * (P.c(1) + P.s(1))));
  }
  SUBCASE("Gr3(C6)") {
    Poly P{1};
    SPolynomial s = P.s(0), one = P.c(1), dd = P.d();
    SPolynomial inner = P.c(6) * s.pow(6) + P.c(9) * dd * s.pow(5) * (P.c(2) + P.c(3) * s) +
                        P.c(5) * dd.pow(2) * s.pow(4) * (P.c(6) + P.c(15) * s + P.c(10) * s.pow(2)) +
                        dd.pow(3) * s.pow(3) * (P.c(30) + P.c(105) * s + P.c(123) * s.pow(2) + P.c(49) * s.pow(3)) +
                        P.c(9) * dd.pow(4) * s.pow(2) * (one + s).pow(3) * (P.c(2) + P.c(3) * s) +
                        dd.pow(5) * s * (one + s).pow(3) * (P.c(6) + P.c(15) * s + P.c(8) * s.pow(2)) +
                        dd.pow(6) * (one + s).pow(6);
    SPolynomial num = (dd + one).pow(3) * (s + one).pow(3) * inner;
    bs::PositivityReport rep = bs::positivityReport(num);
    CHECK(rep.verdict() == "POSITIVE");
    // d = 0 leaves 6 (1+S)^3 S^6, so the class restricted to d = 0 is 6 T^3 / S^3.
    SVariableSet vars({Character{1}});
    ClassFraction cls = num.toClass(vars) * invS(Character{1}).pow(9);
    CHECK(cls.substituteDelta(0) == T(Character{3}) * cst(1, 6) * invS(Character{1}).pow(3));
  }
}

TEST_CASE("Whitney umbrella in S-variables") {
  hz::ChartTerm resolved{1, 1, {{hz::ChartFactor::Kind::PuncturedLine, t1, ClassFraction(2)},
                            {hz::ChartFactor::Kind::FullLine, t2, ClassFraction(2)}}};
  hz::ChartTerm axis{1, 1, {{hz::ChartFactor::Kind::FullLine, Character{0, 2}, ClassFraction(2)}}};
  ClassFraction x = hz::assemble({resolved, axis}, 2);
  SVariableSet vars({t1, t2});
  bs::RewriteResult r = bs::rewriteInS(x, vars);
  CHECK(r.exact);
  Poly P{2};
  REQUIRE(r.form.extraDen.size() == 1);
  CHECK(r.form.extraDen[0] == P.s(1) * P.s(1) + P.c(2) * P.s(1));
  CHECK(r.form.monomialDen == std::vector<int>{1, 0});
  SPolynomial s1 = P.s(0), s2 = P.s(1);
  SPolynomial display = s1 * s2 * (P.c(2) + s2) +
                        (s1 + P.c(2) * s2 + P.c(4) * s1 * s2 + s2 * s2 + P.c(2) * s1 * s2 * s2) * P.d() +
                        (P.c(1) + s1) * (P.c(1) + s2) * (P.c(2) + s2) * P.d().pow(2);
  CHECK(r.form.numerator == display);
  CHECK(bs::positivityReport(r.form.numerator).positive);
  CHECK(r.form.str(vars).find(")/(S[1,0]*(2*S[0,1] + S[0,1]^2))") != std::string::npos);
}

TEST_CASE("positivity reports do not depend on the alphabet order") {
  CatalogCone c = aCone(3);
  SVariableSet vars({Character{3, 0}, Character{0, 3}, Character{1, 1}});
  SPolynomial p = bs::toricSExpansion(c.cone(), c.lattice(), vars).numerator;
  Poly P{3};
  SPolynomial q = p - P.c(5) * P.s(0) * P.s(2).pow(2) * P.d();
  std::vector<std::size_t> perm = {2, 0, 1};
  for (const auto& poly : {p, q}) {
    bs::PositivityReport a = bs::positivityReport(poly), b = bs::positivityReport(poly.permuted(perm));
    CHECK(a.positive == b.positive);
    CHECK(a.terms.size() == b.terms.size());
    CHECK(a.offending.size() == b.offending.size());
  }
  CHECK(!bs::positivityReport(q).positive);
  CHECK(bs::positivityReport(q).offending.size() == 1);
}

TEST_CASE("cohomology limit") {
  bs::CohomologyExpansion e = bs::cohomologyLimit(cst(1, 1) - T(Character{1}), 3);
  CHECK(e.regular());
  CHECK(e.numerator.truncated(3).str() == "t1 - 1/2*t1^2 + 1/6*t1^3");

  // (1 - T^w) / (1 - T^w) = 1 and the smooth point 1 + y T / (1 - T) has a pole
  CHECK(bs::cohomologyLimit(ClassFraction::one(2), 2).numerator.truncated(2).str() == "1");
  CHECK_THROWS_WITH_AS(bs::cohomologyLimit(fullLine(t1), 2), doctest::Contains("pole"), eqhirz::MathError);

  // the Todd series t/(1 - e^{-t}) over the pole t
  bs::CohomologyExpansion td = bs::cohomologyLimit(ClassFraction::geometric(t1), 2, true);
  CHECK(td.poles == std::vector<Character>{t1});
  CHECK(td.numerator.truncated(2).str() == "1 + 1/2*t1 + 1/12*t1^2");
  CHECK(bs::cohomologyLimit(fullLine(t1).substituteDelta(0), 3).numerator.truncated(3).str() == "1");

  CatalogCone a1 = aCone(2);
  ClassFraction toric0 = hz::toricLocalClass(a1.cone(), a1.lattice()).substituteY(0);
  bs::CohomologyExpansion ex = bs::cohomologyLimit(toric0, 1, true);
  CHECK(ex.poles.size() == 2);
  // (1 + T^{(1,1)}) td(2 t1) td(2 t2) over (2 t1)(2 t2)
  CHECK(ex.poles == std::vector<Character>{Character{2, 0}, Character{0, 2}});
  CHECK(ex.numerator.truncated(1).str() == "2 + t1 + t2");
}
