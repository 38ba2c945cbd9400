#include "eqhirz/basis/rewrite.hpp"

#include <algorithm>
#include <set>

#include "eqhirz/error.hpp"

namespace eqhirz::basis {

using algebra::LaurentPoly;
using lattice::Cone;
using lattice::ConeSide;
using lattice::LatticeBasis;

namespace {

std::size_t letterIndex(const SVariableSet& vars, const Character& w) {
  auto i = vars.indexOf(w);
  if (!i) throw MathError("ray " + w.str() + " is not in the alphabet");
  return *i;
}

SPolynomial timesLetters(SPolynomial p, const SVariableSet& vars, const std::vector<int>& exps) {
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i]) p = p * SPolynomial::variable(vars.size(), i).pow(exps[i]);
  return p;
}

}  // namespace

ClassFraction SFraction::toClass(const SVariableSet& vars) const {
  // S_w = -(1 - T^w)
  std::vector<Character> den = extraWeights;
  for (std::size_t i = 0; i < monomialDen.size(); ++i)
    for (int k = 0; k < monomialDen[i]; ++k) den.push_back(vars.weight(i));
  algebra::LaurentPoly num = numerator.toLaurent(vars);
  if (den.size() % 2) num = -num;
  return ClassFraction(std::move(num), std::move(den));
}

std::string SFraction::str(const SVariableSet& vars) const {
  std::vector<std::string> factors;
  for (std::size_t i = 0; i < monomialDen.size(); ++i) {
    if (monomialDen[i] == 0) continue;
    std::string f = vars.name(i);
    if (monomialDen[i] > 1) f += "^" + std::to_string(monomialDen[i]);
    factors.push_back(f);
  }
  for (const auto& e : extraDen) factors.push_back("(" + e.str(vars) + ")");
  if (factors.empty()) return numerator.str(vars);
  std::string den;
  for (const auto& f : factors) den += (den.empty() ? "" : "*") + f;
  return "(" + numerator.str(vars) + ")/(" + den + ")";
}

RepresentationSearch::RepresentationSearch(const SVariableSet& vars, std::vector<std::size_t> searchOrder)
    : vars_(vars), order_(std::move(searchOrder)), grading_(lattice::positiveGrading(vars.weights())) {
  if (order_.empty())
    for (std::size_t i = 0; i < vars.size(); ++i) order_.push_back(i);
  if (order_.size() != vars.size()) throw MathError("representation search order has the wrong length");
  for (const auto& w : vars.weights()) letterDegree_.push_back(grading_.dot(w));
}

std::optional<std::vector<int>> RepresentationSearch::find(const Character& m) {
  algebra::requireRank(m, vars_.rank());
  auto byPosition = search(0, m);
  if (!byPosition) return std::nullopt;
  std::vector<int> c(vars_.size(), 0);
  for (std::size_t pos = 0; pos < order_.size(); ++pos) c[order_[pos]] = (*byPosition)[pos];
  return c;
}

std::optional<std::vector<int>> RepresentationSearch::search(std::size_t pos, const Character& m) {
  if (m.isZero()) return std::vector<int>(vars_.size() - pos, 0);
  if (pos == vars_.size()) return std::nullopt;
  const std::int64_t deg = grading_.dot(m);
  if (deg <= 0) return std::nullopt;
  auto key = std::make_pair(pos, m);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  std::optional<std::vector<int>> found;
  const std::size_t i = order_[pos];
  const Character& w = vars_.weight(i);
  for (std::int64_t c = deg / letterDegree_[i]; c >= 0; --c) {
    Character rest = m;
    for (std::int64_t k = 0; k < c; ++k) rest -= w;
    if (auto tail = search(pos + 1, rest)) {
      found = std::vector<int>{static_cast<int>(c)};
      found->insert(found->end(), tail->begin(), tail->end());
      break;
    }
  }
  memo_.emplace(key, found);
  return found;
}

SPolynomial RepresentationSearch::monomial(const Character& m) {
  auto c = find(m);
  if (!c)
    throw MathError("exponent " + m.str() + " is not a nonnegative combination of the alphabet");
  const std::size_t n = vars_.size();
  SPolynomial p = SPolynomial::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    if ((*c)[i]) p = p * (SPolynomial::constant(n, 1) + SPolynomial::variable(n, i)).pow((*c)[i]);
  return p;
}

RewriteResult rewriteInS(const ClassFraction& c, const SVariableSet& vars) {
  if (vars.size() == 0) throw MathError("rewrite: empty alphabet");
  algebra::requireRank(Character::zero(c.rank()), vars.rank());
  const std::size_t n = vars.size();
  RepresentationSearch reps(vars);

  LaurentPoly num = c.num();
  SFraction form{SPolynomial(n), std::vector<int>(n, 0), {}, {}};
  Rational sign = 1;
  for (const auto& w0 : c.den()) {
    Character w = w0;
    bool flip = false;
    if (vars.indexOf(w)) {
    } else if (vars.indexOf(-w)) {
      flip = true;
    } else if (reps.find(w)) {
    } else if (reps.find(-w)) {
      flip = true;
    } else {
      throw MathError("denominator weight " + w.str() + " is not representable over the alphabet");
    }
    if (flip) {
      // 1/(1 - T^w) = -T^{-w}/(1 - T^{-w})
      num = -num.shifted(-w);
      w = -w;
    }
    // 1 - T^w = -S_w
    sign = -sign;
    if (auto i = vars.indexOf(w))
      ++form.monomialDen[*i];
    else
    {
      form.extraDen.push_back(reps.monomial(w) - SPolynomial::constant(n, 1));
      form.extraWeights.push_back(w);
    }
  }
  for (const auto& [m, coeff] : num.terms()) form.numerator += reps.monomial(m) * SPolynomial::fromCoeff(n, coeff);
  form.numerator *= sign;
  bool exact = form.toClass(vars) == c;
  return {std::move(form), exact};
}

SFraction toricSExpansion(const Cone& sigma, const LatticeBasis& basis, const SVariableSet& vars) {
  Cone dual = sigma.side() == ConeSide::Dual ? sigma : lattice::dualCone(sigma, basis);
  LatticeBasis frame = basis.saturatedSpanOf(dual.rays());
  const std::size_t n = vars.size();
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(dual.rays().begin(), dual.rays().end(), vars.weight(i)) == dual.rays().end()) order.push_back(i);
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(dual.rays().begin(), dual.rays().end(), vars.weight(i)) != dual.rays().end()) order.push_back(i);
  RepresentationSearch reps(vars, order);

  struct Term {
    SPolynomial num;
    std::set<std::size_t> den;
  };
  std::vector<Term> terms;
  std::set<std::size_t> allDen;
  for (const auto& face : lattice::faces(dual)) {
    if (face.rays.empty()) {
      terms.push_back({SPolynomial::constant(n, 1), {}});
      continue;
    }
    std::vector<Character> rays;
    for (auto i : face.rays) rays.push_back(dual.rays()[i]);
    Cone faceCone(rays, ConeSide::Dual);
    for (const auto& piece : lattice::halfOpenDecomposition(faceCone, frame, lattice::Region::RelativeInterior)) {
      Term t{SPolynomial(n), {}};
      for (const auto& m : lattice::boxPoints(piece, frame)) t.num += reps.monomial(m);
      t.num = t.num * SPolynomial::delta(n).pow(face.dim);
      for (const auto& w : piece.rays) {
        std::size_t i = letterIndex(vars, w);
        t.den.insert(i);
        allDen.insert(i);
      }
      terms.push_back(std::move(t));
    }
  }
  SFraction out{SPolynomial(n), std::vector<int>(n, 0), {}, {}};
  for (auto i : allDen) out.monomialDen[i] = 1;
  for (const auto& t : terms) {
    std::vector<int> missing(n, 0);
    for (auto i : allDen)
      if (!t.den.count(i)) missing[i] = 1;
    out.numerator += timesLetters(t.num, vars, missing);
  }
  return out;
}

}  // namespace eqhirz::basis
