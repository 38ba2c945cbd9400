#include "eqhirz/basis/positivity.hpp"

namespace eqhirz::basis {

PositivityReport positivityReport(const SPolynomial& p) {
  PositivityReport r;
  std::vector<SMonomial> negative;
  for (const auto& [m, c] : p.terms()) {
    r.terms.emplace_back(m, c);
    if (c < 0) negative.push_back(m);
  }
  r.positive = negative.empty();
  for (const auto& m : negative) {
    bool minimal = true;
    for (const auto& o : negative)
      if (!(o == m) && o.divides(m)) minimal = false;
    if (minimal) r.offending.push_back(m);
  }
  return r;
}

std::string PositivityReport::str(const SVariableSet& vars) const {
  std::string out = "verdict: " + verdict() + "\n";
  out += "terms: " + std::to_string(terms.size()) + "\n";
  for (const auto& [m, c] : terms) out += "  " + algebra::toString(c) + " * " + formatSMonomial(m, vars) + "\n";
  if (!positive) {
    out += "offending:";
    for (const auto& m : offending) out += " " + formatSMonomial(m, vars);
    out += "\n";
  }
  return out;
}

}  // namespace eqhirz::basis
