#include "eqhirz/algebra/series.hpp"

namespace eqhirz::algebra {

SeriesTrunc<Rational> uOfH(int order) {
  std::vector<Rational> c;
  Rational term = 1;  // (-1)^k / k!
  for (int k = 0; k < order; ++k) {
    if (k > 0) term *= makeRational(-1, k);
    c.push_back(k == 0 ? Rational(0) : term);
  }
  return SeriesTrunc<Rational>("h", 0, std::move(c), order, Rational(0));
}

Rational residueOfUPower(int j, int substitutionOrder) {
  if (j >= 0) return 0;
  SeriesTrunc<Rational> u = uOfH(substitutionOrder);
  SeriesTrunc<Rational> f = u.pow(j);
  return f.coeff(-1);
}

}  // namespace eqhirz::algebra
