#include "eqhirz/algebra/format.hpp"

#include <utility>

namespace eqhirz::algebra {

namespace {

CoeffFrac inBasis(const CoeffFrac& c, CoeffBasis basis) {
  return basis == CoeffBasis::Delta ? c : c.swapDeltaY();
}

const char* varName(CoeffBasis basis) { return basis == CoeffBasis::Delta ? "d" : "y"; }

// Splits a coefficient already expressed in the printing variable into a
// sign and a body; single-term polynomials print without parentheses.
std::pair<bool, std::string> signedBody(const CoeffFrac& c, const char* var, bool withMonomial) {
  const DeltaPoly& n = c.num();
  int nonzero = 0;
  for (const auto& x : n.coeffs()) nonzero += x != 0;
  if (c.isPolynomial() && nonzero == 1) {
    bool negative = n.lead() < 0;
    std::string body = (negative ? -n : n).str(var);
    if (withMonomial) body = body == "1" ? "" : body + "*";
    return {negative, body};
  }
  std::string body = "(" + c.str(var) + ")";
  if (withMonomial) body += "*";
  return {false, body};
}

}  // namespace

std::string formatCoeff(const CoeffFrac& c, CoeffBasis basis) {
  return inBasis(c, basis).str(varName(basis));
}

std::string formatLaurent(const LaurentPoly& p, CoeffBasis basis) {
  if (p.isZero()) return "0";
  if (p.isConstant()) return formatCoeff(p.terms().begin()->second, basis);
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool hasMonomial = !m.isZero();
    auto [negative, body] = signedBody(inBasis(c, basis), varName(basis), hasMonomial);
    if (hasMonomial) body += "T" + m.str();
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
    first = false;
  }
  return out;
}

std::string formatClass(const ClassFraction& c, CoeffBasis basis) {
  std::string num = formatLaurent(c.num(), basis);
  if (c.den().empty()) return num;
  std::string den;
  const auto& ws = c.den();
  std::size_t groups = 0;
  for (std::size_t i = 0; i < ws.size();) {
    std::size_t j = i;
    while (j < ws.size() && ws[j] == ws[i]) ++j;
    if (!den.empty()) den += "*";
    den += "(1 - T" + ws[i].str() + ")";
    if (j - i > 1) den += "^" + std::to_string(j - i);
    ++groups;
    i = j;
  }
  if (groups > 1 || ws.size() > 1) den = "(" + den + ")";
  if (num.find(' ') != std::string::npos) num = "(" + num + ")";
  return num + "/" + den;
}

}  // namespace eqhirz::algebra
