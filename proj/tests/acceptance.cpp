// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.
// Usage: acceptance [corpus-dir]

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "cone_catalog.hpp"
#include "eqhirz/algebra/format.hpp"
#include "eqhirz/basis/positivity.hpp"
#include "eqhirz/basis/rewrite.hpp"
#include "eqhirz/error.hpp"
#include "eqhirz/hirz/local_classes.hpp"
#include "eqhirz/hirz/projective_cone.hpp"
#include "eqhirz/hirz/toric.hpp"
#include "support.hpp"

using namespace testsupport;
namespace bs = eqhirz::basis;
namespace hz = eqhirz::hirz;
namespace fs = std::filesystem;

namespace {

constexpr double kTimeLimitSeconds = 10.0;

// Collects the first few failed expectations of one criterion.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  int count() const { return count_; }
  bool ok() const { return failed_ == 0 && count_ > 0; }
  std::string detail() const {
    std::string out;
    for (const auto& f : failures_) out += "      " + f + "\n";
    if (failed_ > static_cast<int>(failures_.size()))
      out += "      ... " + std::to_string(failed_ - static_cast<int>(failures_.size())) + " more\n";
    if (count_ == 0) out += "      no checks ran\n";
    return out;
  }

 private:
  int count_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

ClassFraction one(std::size_t rank) { return ClassFraction::one(rank); }

CoeffFrac yPoly(std::vector<Rational> coeffs) {
  CoeffFrac r, p(1);
  for (const auto& c : coeffs) {
    r += p * CoeffFrac(c);
    p *= y();
  }
  return r;
}

ClassFraction spaceFactor(const Character& w) { return (cst(w.rank(), d()) + S(w) + S(w) * d()) * invS(w); }

std::string str(const ClassFraction& c) { return formatClass(c, CoeffBasis::Y); }

const Character t{1}, t1{1, 0}, t2{0, 1};

void projectiveLine(Checks& c) {
  std::vector<ClassFraction> pts = {hz::smoothLocalClass({{t}, "0"}, 1), hz::smoothLocalClass({{-t}, "inf"}, 1)};
  CoeffFrac chi = hz::chiFromLocal(pts);
  c.expect(chi == yPoly({1, -1}), "chi = " + formatCoeff(chi, CoeffBasis::Y));
  // each contribution by hand: (1 + y T^w) / (1 - T^w)
  c.expect(pts[0] == (one(1) + T(t) * y()) * ClassFraction::geometric(t), "local class at 0");
}

void quadricCone(Checks& c) {
  std::vector<ClassFraction> known = {hz::smoothLocalClass({{Character{-2, 0}, Character{-1, 1}}, ""}, 2),
                                      hz::smoothLocalClass({{Character{0, -2}, Character{1, -1}}, ""}, 2)};
  std::vector<Character> den = {Character{2, 0}, Character{0, 2}, Character{1, 1}};
  LaurentPoly n = hz::solveSingularContribution(yPoly({1, -1, 1}), known, den);
  ClassFraction printed = (one(2) - T(Character{2, 2})) +
                          (T(t1) + T(t2)).pow(2) * (one(2) - T(Character{1, 1})) * y() +
                          T(Character{1, 1}) * (one(2) - T(Character{2, 2})) * y().pow(2);
  c.expect(ClassFraction(n) == printed, "numerator " + formatLaurent(n, CoeffBasis::Y));
  c.expect(ClassFraction(n).substituteY(0) == one(2) - T(Character{2, 2}), "y = 0 numerator");
}

void sncCatalogue(Checks& c) {
  RandomClasses rnd(3);
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) {
      std::vector<Character> ws;
      while (static_cast<int>(ws.size()) < n) {
        Character w = rnd.character(-3, 3);
        if (!w.isZero() && std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(w);
      }
      ClassFraction space = one(2), comp = one(2), log = one(2), div = one(2);
      for (int i = 0; i < n; ++i) {
        const Character& w = ws[static_cast<std::size_t>(i)];
        space *= spaceFactor(w);
        if (i < k) {
          comp *= (one(2) + S(w)) * invS(w) * d();
          log *= invS(w) * d();
        } else {
          comp *= spaceFactor(w);
          log *= spaceFactor(w);
          div *= spaceFactor(w);
        }
      }
      std::string at = " n=" + std::to_string(n) + " k=" + std::to_string(k);
      c.expect(hz::sncLocalClass(n, k, ws, hz::SncVariant::Space) == space, "space" + at);
      c.expect(hz::sncLocalClass(n, k, ws, hz::SncVariant::Complement) == comp, "complement" + at);
      c.expect(hz::sncLocalClass(n, k, ws, hz::SncVariant::Log) == log, "log" + at);
      c.expect(hz::sncLocalClass(n, k, ws, hz::SncVariant::Divisor) == div, "divisor" + at);
      c.expect(hz::sncT1Identity(n, k, ws).holds, "t1 identity" + at);
    }
}

void whitneyUmbrella(Checks& c) {
  using hz::ChartFactor;
  hz::ChartTerm resolved{1, 1, {{ChartFactor::Kind::PuncturedLine, t1, ClassFraction(2)},
                                {ChartFactor::Kind::FullLine, t2, ClassFraction(2)}}};
  hz::ChartTerm axis{1, 1, {{ChartFactor::Kind::FullLine, Character{0, 2}, ClassFraction(2)}}};
  ClassFraction x = hz::assemble({resolved, axis}, 2);
  ClassFraction num = one(2) + T(Character{1, 1}) +
                      (T(t1) + T(Character{1, 1}) * cst(2, 2) + T(Character{0, 2})) * y() +
                      (T(Character{1, 1}) + T(Character{1, 2})) * y().pow(2);
  c.expect(x == num * ClassFraction::geometric(t1) * ClassFraction::geometric(Character{0, 2}), "class " + str(x));

  bs::SVariableSet vars({t1, t2});
  bs::RewriteResult r = bs::rewriteInS(x, vars);
  c.expect(r.exact, "S-form is exact");
  c.expect(bs::positivityReport(r.form.numerator).positive, "S-form numerator " + r.form.numerator.str(vars));
  // printed S-form: numerator over S1 (S2^2 + 2 S2)
  ClassFraction s1 = S(t1), s2 = S(t2), c2 = cst(2, 2);
  ClassFraction sNum = s1 * s2 * (c2 + s2) +
                       (s1 + s2 * c2 + s1 * s2 * cst(2, 4) + s2 * s2 + s1 * s2 * s2 * c2) * d() +
                       (one(2) + s1) * (one(2) + s2) * (c2 + s2) * d().pow(2);
  c.expect(r.form.numerator.toClass(vars) == sNum, "S-form numerator matches the display");
}

void residues(Checks& c) {
  for (int n = 1; n <= 6; ++n) {
    c.expect(residueOfUPower(-n, n + 1) == (n % 2 == 0 ? 1 : -1), "Res 1/U^" + std::to_string(n));
    for (int k = 1; k <= 8; ++k) {
      std::vector<Rational> coeffs;
      for (int i = 0; i <= k; ++i) coeffs.push_back(binomial(k, i));
      SeriesTrunc<Rational> f = SeriesTrunc<Rational>("U", 0, coeffs, k + n + 1, Rational(0)).shifted(-n);
      c.expect(residue(f) == -binomial(k - 1, n - 1), "Res (1+U)^k/U^n, n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  // Res (1+U)^(k+1) / (U^n (S - U)) = -(1+S)^k / S^n with S = T - 1 on an auxiliary character
  ClassFraction Sv = S(t);
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k < n; ++k) {
      std::vector<ClassFraction> num;
      for (int i = 0; i <= k + 1; ++i) num.push_back(cst(1, binomial(k + 1, i)));
      auto series = (polyInU(num, n + 1) * polyInU({Sv, cst(1, -1)}, n + 1).inverse()).shifted(-n);
      ClassFraction expect = -(Sv + cst(1, 1)).pow(k);
      for (int i = 0; i < n; ++i) expect = expect * invS(t);
      c.expect(residue(series) == expect, "auxiliary-character sum n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
}

void projectiveCones(Checks& c) {
  hz::UPoly f = hz::hypersurfaceF(3, 3);
  CoeffFrac chi = hz::chiOfProjectiveClass(f, 3);
  ClassFraction s = S(t);
  ClassFraction closed = (cst(1, d().pow(2) * CoeffFrac(3)) + s * d().pow(2) * CoeffFrac(3) + s * s) * invS(t).pow(2);
  ClassFraction comp = (one(1) + s) *
                       (cst(1, d().pow(2)) + s * d().pow(2) * CoeffFrac(2) + s * s * CoeffFrac(3) +
                        s * s * d() * CoeffFrac(3) + s * s * d().pow(2)) *
                       invS(t).pow(3) * d();
  c.expect(hz::coneClass(f, 3, chi, hz::ConePart::Closed) == closed, "elliptic cone");
  c.expect(hz::coneClass(f, 3, chi, hz::ConePart::Complement) == comp, "elliptic cone complement");

  for (int n = 1; n <= 5; ++n)
    for (int dd = 1; dd <= n; ++dd) {
      hz::UPoly g = hz::hypersurfaceF(n, dd);
      ClassFraction x = hz::coneClass(g, n, hz::chiOfProjectiveClass(g, n), hz::ConePart::Closed);
      c.expect(x.substituteY(0) == (one(1) - T(Character{dd})) * ClassFraction::geometric(t).pow(n),
               "td ch(O_X) at d=" + std::to_string(dd) + " n=" + std::to_string(n));
    }
  hz::UPoly quartic = hz::hypersurfaceF(3, 4);
  ClassFraction x = hz::coneClass(quartic, 3, hz::chiOfProjectiveClass(quartic, 3), hz::ConePart::Closed);
  c.expect(!(x.substituteY(0) == (one(1) - T(Character{4})) * ClassFraction::geometric(t).pow(3)),
           "d=4 n=3 must differ from td ch(O_X)");

  for (int n = 3; n <= 6; ++n) {
    auto [q, qc] = hz::quadricRecursion(n);
    hz::UPoly g = hz::hypersurfaceF(n, 2);
    CoeffFrac chiQ = hz::chiOfProjectiveClass(g, n);
    c.expect(q == hz::coneClass(g, n, chiQ, hz::ConePart::Closed), "quadric recursion n=" + std::to_string(n));
    c.expect(qc == hz::coneClass(g, n, chiQ, hz::ConePart::Complement),
             "quadric recursion complement n=" + std::to_string(n));
  }
}

void toricDisplays(Checks& c) {
  for (int n = 2; n <= 5; ++n) {
    CatalogCone a = aCone(n);
    const Character wn1{n, 0}, wn2{0, n}, w12{1, 1};
    ClassFraction sum(2);
    for (int i = 1; i <= n; ++i) sum += (one(2) + S(w12)).pow(i);
    ClassFraction expect = one(2) + ((one(2) + S(wn1)) * invS(wn1) + (one(2) + S(wn2)) * invS(wn2)) * d() +
                           invS(wn1) * invS(wn2) * sum * d().pow(2);
    c.expect(hz::toricLocalClass(a.cone(), a.lattice()) == expect, "A" + std::to_string(n - 1) + " display");
  }
  {
    CatalogCone g = g24Cone();
    const Character w13{-1, 0, 1, 0}, w14{-1, 0, 0, 1}, w23{0, -1, 1, 0}, w24{0, -1, 0, 1};
    auto r = [&](const Character& w) { return (one(4) + S(w)) * invS(w); };
    ClassFraction expect = one(4) + (r(w13) + r(w14) + r(w23) + r(w24)) * d() +
                           (r(w13) * r(w14) + r(w13) * r(w23) + r(w14) * r(w24) + r(w23) * r(w24)) * d().pow(2) +
                           (one(4) + S(w13)) * (one(4) + S(w24)) * (S(w13) + S(w24) + S(w13) * S(w24)) * invS(w13) *
                               invS(w14) * invS(w23) * invS(w24) * d().pow(3);
    c.expect(hz::toricLocalClass(g.cone(), g.lattice()) == expect, "g24 display");
  }
  for (const auto& cc : catalog()) {
    ClassFraction cls = hz::toricLocalClass(cc.cone(), cc.lattice());
    c.expect(cls.substituteDelta(0) == one(cc.rank), cc.name + ": d = 0 gives 1");
    auto w = hz::toricY0Check(cc.cone(), cc.lattice());
    c.expect(w.holds, cc.name + ": y = 0 equals the closed dual-cone sum");
    c.expect(cc.maxDegree >= 8, cc.name + ": brute-force degree >= 8");

    struct Target {
      std::string what;
      ClassFraction gf;
      bool interior;
    };
    std::vector<Target> targets = {
        {"interior", eqhirz::lattice::interiorGenFunction(cc.cone(), cc.lattice()), true},
        {"closed", eqhirz::lattice::closedGenFunction(cc.cone(), cc.lattice()), false},
        {"y = 0 class", w.atYZero, false},
    };
    for (const auto& tg : targets) {
      LaurentPoly e = truncatedExpansion(tg.gf, cc.grading, cc.maxDegree);
      std::size_t brute = 0;
      bool ok = true;
      forEachPoint(cc, [&](const Character& m) {
        if (!(tg.interior ? cc.inInterior(m) : cc.inClosed(m))) return;
        ++brute;
        ok = ok && e.coeff(m) == CoeffFrac(1);
      });
      c.expect(ok && e.size() == brute && brute > 0, cc.name + ": " + tg.what + " against brute force");
    }
  }
}

bool simplicial(const CatalogCone& c) {
  return c.cone().rays().size() == c.lattice().saturatedSpanOf(c.cone().rays()).rank();
}

void positivity(Checks& c) {
  int simplicialCount = 0;
  for (const auto& cc : catalog()) {
    if (!simplicial(cc)) continue;
    ++simplicialCount;
    bs::SVariableSet vars(eqhirz::lattice::semigroupGenerators(cc.cone(), cc.lattice()));
    bs::SFraction x = bs::toricSExpansion(cc.cone(), cc.lattice(), vars);
    c.expect(x.toClass(vars) == hz::toricLocalClass(cc.cone(), cc.lattice()), cc.name + ": expansion is exact");
    c.expect(bs::positivityReport(x.numerator).verdict() == "POSITIVE", cc.name + ": constructive expansion positive");
  }
  c.expect(simplicialCount >= 7, "at least seven simplicial test cones");

  CatalogCone p = catalog().back();
  c.expect(p.name == "pentagon", "pentagon suspension is in the catalog");
  bs::SVariableSet pv(eqhirz::lattice::semigroupGenerators(p.cone(), p.lattice()));
  bs::RewriteResult pr = bs::rewriteInS(hz::toricLocalClass(p.cone(), p.lattice()), pv);
  c.expect(pr.exact, "pentagon rewrite is exact");
  c.expect(bs::positivityReport(pr.form.numerator).verdict() == "NOT-POSITIVE", "pentagon reported NOT-POSITIVE");

  {
    std::vector<Character> w = {Character{2, 0}, Character{0, 2}, Character{1, 1}};
    CatalogCone a1 = aCone(2);
    ClassFraction cell =
        hz::sncLocalClass(3, 0, w, hz::SncVariant::Space) - hz::toricLocalClass(a1.cone(), a1.lattice());
    bs::RewriteResult r = bs::rewriteInS(cell, bs::SVariableSet(w));
    c.expect(r.exact && bs::positivityReport(r.form.numerator).verdict() == "POSITIVE", "LG(2) POSITIVE");
  }
  {
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
    bs::RewriteResult r = bs::rewriteInS(x, bs::SVariableSet({w12, w23, w13}));
    c.expect(r.exact && bs::positivityReport(r.form.numerator).verdict() == "POSITIVE", "Fl(3) POSITIVE");
  }
  {
    auto s = bs::SPolynomial::variable(1, 0), dd = bs::SPolynomial::delta(1);
    auto k = [](long v) { return bs::SPolynomial::constant(1, Rational(v)); };
    auto inner = k(6) * s.pow(6) + k(9) * dd * s.pow(5) * (k(2) + k(3) * s) +
                 k(5) * dd.pow(2) * s.pow(4) * (k(6) + k(15) * s + k(10) * s.pow(2)) +
                 dd.pow(3) * s.pow(3) * (k(30) + k(105) * s + k(123) * s.pow(2) + k(49) * s.pow(3)) +
                 k(9) * dd.pow(4) * s.pow(2) * (k(1) + s).pow(3) * (k(2) + k(3) * s) +
                 dd.pow(5) * s * (k(1) + s).pow(3) * (k(6) + k(15) * s + k(8) * s.pow(2)) + dd.pow(6) * (k(1) + s).pow(6);
    auto num = (dd + k(1)).pow(3) * (s + k(1)).pow(3) * inner;
    c.expect(bs::positivityReport(num).verdict() == "POSITIVE", "Gr3(C6) printed polynomial POSITIVE");
  }
}

void cusp(Checks& c) {
  hz::CuspWitness w = hz::cuspComparison(1);
  c.expect(w.differ, "classes reported different");
  c.expect(!(w.actual == w.naive), "classes differ");
  c.expect(w.actual == ClassFraction::geometric(t), "actual class " + str(w.actual));
  c.expect(w.naive == (one(1) - T(Character{6})) * ClassFraction::geometric(Character{3}) *
                          ClassFraction::geometric(Character{2}),
           "td ch(O_X) " + str(w.naive));
}

std::vector<Character> characters(const nlohmann::json& j) {
  std::vector<Character> out;
  for (const auto& v : j) out.emplace_back(v.get<std::vector<std::int64_t>>());
  return out;
}

void rigidity(Checks& c, const fs::path& corpus) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(corpus)) {
    std::string name = e.path().filename().string();
    if (name.rfind("fan_", 0) == 0 && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  c.expect(files.size() >= 5, "at least five fan datasets in " + corpus.string());
  for (const auto& path : files) {
    std::ifstream in(path);
    nlohmann::json job = nlohmann::json::parse(in);
    std::string name = path.stem().string();
    auto rank = job.at("rank").get<std::size_t>();
    LatticeBasis lattice = job["fan"].contains("lattice")
                               ? LatticeBasis::generatedBy(rank, characters(job["fan"]["lattice"]))
                               : LatticeBasis::standard(rank);
    std::vector<ClassFraction> local;
    for (const auto& cone : job["fan"]["cones"])
      local.push_back(hz::toricLocalClass(Cone(characters(cone), ConeSide::Primal), lattice));
    c.expect(job.contains("orbits"), name + ": orbit counts given");
    CoeffFrac orbitPoly, power(1);
    for (const auto& b : job["orbits"]) {
      orbitPoly += power * CoeffFrac(Rational(b.get<long>()));
      power *= d();
    }
    try {
      CoeffFrac chi = hz::chiFromLocal(local);
      c.expect(chi == orbitPoly, name + ": sum " + formatCoeff(chi, CoeffBasis::Y) + " vs orbit polynomial " +
                                     formatCoeff(orbitPoly, CoeffBasis::Y));
    } catch (const eqhirz::MathError& e) {
      c.expect(false, name + ": " + e.what());
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  fs::path corpus = argc > 1 ? fs::path(argv[1]) : fs::path("corpus");
  struct Criterion {
    std::string title;
    std::function<void(Checks&)> run;
  };
  std::vector<Criterion> criteria = {
      {"P^1 localization gives 1 - y", projectiveLine},
      {"quadric cone in P3: singular numerator and its y = 0 value", quadricCone},
      {"snc catalogue and t1 identity, 1 <= k <= n <= 4", sncCatalogue},
      {"Whitney umbrella class and nonnegative S-form", whitneyUmbrella},
      {"residues of powers of U and the auxiliary-character sum", residues},
      {"projective cones: elliptic pair, td ch(O_X) for d <= n, quadric recursion", projectiveCones},
      {"toric displays, y = 0 and d = 0 checks, brute-force oracles", toricDisplays},
      {"positivity verdicts", positivity},
      {"cusp comparison differs", cusp},
      {"rigidity over the corpus fans", [&](Checks& c) { rigidity(c, corpus); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checks checks;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(checks);
    } catch (const std::exception& e) {
      checks.expect(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= kTimeLimitSeconds) checks.expect(false, "time limit exceeded");
    bool ok = checks.ok();
    failed += !ok;
    std::printf("%s  %2zu  %-78s %4d checks  %6.2f s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].title.c_str(),
                checks.count(), seconds);
    if (!ok) std::fputs(checks.detail().c_str(), stdout);
  }
  std::printf("%zu of %zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
