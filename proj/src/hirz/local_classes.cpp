#include "eqhirz/hirz/local_classes.hpp"

#include "eqhirz/algebra/format.hpp"
#include "eqhirz/error.hpp"

namespace eqhirz::hirz {

namespace {

void requireNonzero(const Character& w) {
  if (w.isZero()) throw MathError("zero weight at a fixed point");
}

ClassFraction logLine(const Character& w) {
  // d / S_w = (1 + y) / (1 - T^w)
  requireNonzero(w);
  return ClassFraction::geometric(w) * (-CoeffFrac::delta());
}

void checkSncInput(int n, int k, const std::vector<Character>& weights) {
  if (n < 0 || k < 0 || k > n) throw MathError("snc: need 0 <= k <= n");
  if (static_cast<int>(weights.size()) != n) throw MathError("snc: expected n weights");
  if (n == 0) throw MathError("snc: need n >= 1 to fix the torus rank");
  for (const auto& w : weights) requireNonzero(w);
}

}  // namespace

ClassFraction fullLine(const Character& w) {
  requireNonzero(w);
  LaurentPoly num = LaurentPoly::constant(w.rank(), 1);
  num.addTerm(w, CoeffFrac::y());
  return ClassFraction(std::move(num), {w});
}

ClassFraction puncturedLine(const Character& w) {
  requireNonzero(w);
  return ClassFraction(LaurentPoly::monomial(w, -CoeffFrac::delta()), {w});
}

ClassFraction smoothLocalClass(const FixedPointData& p, std::size_t rank) {
  ClassFraction c = ClassFraction::one(rank);
  for (const auto& w : p.tangentWeights) {
    algebra::requireRank(w, rank);
    c *= fullLine(w);
  }
  return c;
}

CoeffFrac chiFromLocal(const std::vector<ClassFraction>& contribs) {
  if (contribs.empty()) return CoeffFrac();
  ClassFraction sum(contribs.front().rank());
  for (const auto& c : contribs) sum += c;
  if (!sum.isConstant())
    throw MathError("sum of local contributions is not T-free: " +
                    algebra::formatClass(sum, algebra::CoeffBasis::Y));
  CoeffFrac chi = sum.isZero() ? CoeffFrac() : sum.num().terms().begin()->second;
  if (!chi.isPolynomial())
    throw MathError("sum of local contributions is not polynomial in y: " +
                    algebra::formatCoeff(chi, algebra::CoeffBasis::Y));
  return chi;
}

LaurentPoly solveSingularContribution(const CoeffFrac& chiTarget, const std::vector<ClassFraction>& known,
                                      const std::vector<Character>& denomWeights) {
  std::size_t rank = !known.empty() ? known.front().rank() : !denomWeights.empty() ? denomWeights.front().rank() : 0;
  if (rank == 0) throw MathError("solve: cannot determine the torus rank");
  ClassFraction rest = ClassFraction::constant(rank, chiTarget);
  for (const auto& c : known) rest -= c;
  LaurentPoly den = LaurentPoly::constant(rank, 1);
  for (const auto& w : denomWeights) {
    requireNonzero(w);
    den = den.timesBinomial(w);
  }
  ClassFraction n = rest * ClassFraction(den);
  if (!n.isLaurent())
    throw MathError("solve: the singular contribution does not clear over the given denominator; residual " +
                    algebra::formatClass(n, algebra::CoeffBasis::Y));
  return n.num();
}

ClassFraction sncLocalClass(int n, int k, const std::vector<Character>& weights, SncVariant variant) {
  checkSncInput(n, k, weights);
  ClassFraction c = ClassFraction::one(weights.front().rank());
  for (int i = 0; i < n; ++i) {
    const Character& w = weights[static_cast<std::size_t>(i)];
    if (i >= k) {
      c *= fullLine(w);
      continue;
    }
    switch (variant) {
      case SncVariant::Space:
        c *= fullLine(w);
        break;
      case SncVariant::Complement:
        c *= puncturedLine(w);
        break;
      case SncVariant::Log:
        c *= logLine(w);
        break;
      case SncVariant::Divisor:
        break;
    }
  }
  return c;
}

SncIdentityWitness sncT1Identity(int n, int k, const std::vector<Character>& weights) {
  checkSncInput(n, k, weights);
  const std::size_t rank = weights.front().rank();
  ClassFraction tail = ClassFraction::one(rank);
  for (int j = k; j < n; ++j) tail *= fullLine(weights[static_cast<std::size_t>(j)]);
  ClassFraction sum(rank);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    ClassFraction term = tail;
    for (int j = 0; j < k; ++j) {
      if (mask & (1u << j))
        term *= CoeffFrac::delta();
      else
        term *= logLine(weights[static_cast<std::size_t>(j)]);
    }
    sum += term;
  }
  ClassFraction complement = sncLocalClass(n, k, weights, SncVariant::Complement);
  bool holds = complement == sum;
  return {std::move(complement), std::move(sum), holds};
}

ClassFraction assemble(const std::vector<ChartTerm>& terms, std::size_t rank) {
  ClassFraction total(rank);
  for (const auto& t : terms) {
    if (t.sign != 1 && t.sign != -1) throw MathError("chart term sign must be +1 or -1");
    ClassFraction p = ClassFraction::one(rank);
    for (const auto& f : t.factors) {
      switch (f.kind) {
        case ChartFactor::Kind::FullLine:
          algebra::requireRank(f.weight, rank);
          p *= fullLine(f.weight);
          break;
        case ChartFactor::Kind::PuncturedLine:
          algebra::requireRank(f.weight, rank);
          p *= puncturedLine(f.weight);
          break;
        case ChartFactor::Kind::Custom:
          p *= f.custom;
          break;
      }
    }
    total += p * CoeffFrac(algebra::makeRational(t.sign * t.multiplicity));
  }
  return total;
}

CuspWitness cuspComparison(int n) {
  if (n < 1) throw MathError("cusp: need n >= 1");
  const Character t{1};
  const std::int64_t a = 2 * n + 1;
  ChartTerm normalization{1, 1, {ChartFactor{ChartFactor::Kind::FullLine, t, ClassFraction(1)}}};
  ClassFraction actual = assemble({normalization}, 1).substituteY(0);
  LaurentPoly ch = LaurentPoly::constant(1, 1).timesBinomial(Character{2 * a});
  ClassFraction naive(ch, {Character{a}, Character{2}});
  bool differ = !(actual == naive);
  return {std::move(actual), std::move(naive), differ};
}

}  // namespace eqhirz::hirz
