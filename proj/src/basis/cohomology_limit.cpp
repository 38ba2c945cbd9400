#include "eqhirz/basis/cohomology_limit.hpp"

#include "eqhirz/error.hpp"

namespace eqhirz::basis {

using algebra::Rational;

namespace {

int totalDegree(const Character& e) { return static_cast<int>(e.degree()); }

TSeries linearForm(const Character& w, int maxDegree) {
  TSeries s(w.rank(), maxDegree);
  for (std::size_t i = 0; i < w.rank(); ++i) s.addTerm(Character::unit(w.rank(), i), Rational(w[i]));
  return s;
}

TSeries one(std::size_t rank, int maxDegree) {
  TSeries s(rank, maxDegree);
  s.addTerm(Character::zero(rank), 1);
  return s;
}

// sum_k a_k (w.t)^k
TSeries substituteLinear(const std::vector<Rational>& a, const Character& w, int maxDegree) {
  TSeries out(w.rank(), maxDegree);
  TSeries power = one(w.rank(), maxDegree);
  const TSeries l = linearForm(w, maxDegree);
  for (std::size_t k = 0; k < a.size() && static_cast<int>(k) <= maxDegree; ++k) {
    if (a[k] != 0) out = out + power.scaled(CoeffFrac(a[k]));
    power = power * l;
  }
  return out;
}

// coefficients of x / (1 - e^{-x}) through x^n
std::vector<Rational> toddSeries(int n) {
  std::vector<Rational> u;  // (1 - e^{-x})/x = sum (-1)^k x^k/(k+1)!
  Rational fact = 1;
  for (int k = 0; k <= n; ++k) {
    fact *= k + 1;
    u.push_back(Rational(k % 2 ? -1 : 1) / fact);
  }
  std::vector<Rational> inv(static_cast<std::size_t>(n) + 1);
  inv[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) acc += u[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
    inv[static_cast<std::size_t>(k)] = -acc;
  }
  return inv;
}

std::string monomialName(const Character& e) {
  std::string out;
  for (std::size_t i = 0; i < e.rank(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "t" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

CoeffFrac TSeries::coeff(const Character& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CoeffFrac() : it->second;
}

void TSeries::addTerm(const Character& e, const CoeffFrac& c) {
  algebra::requireRank(e, rank_);
  if (c.isZero() || totalDegree(e) > maxDegree_) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

TSeries operator+(const TSeries& a, const TSeries& b) {
  TSeries r(a.rank_, std::min(a.maxDegree_, b.maxDegree_));
  for (const auto& [e, c] : a.terms_) r.addTerm(e, c);
  for (const auto& [e, c] : b.terms_) r.addTerm(e, c);
  return r;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  TSeries r(a.rank_, std::min(a.maxDegree_, b.maxDegree_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Character e = ea + eb;
      if (totalDegree(e) <= r.maxDegree_) r.addTerm(e, ca * cb);
    }
  return r;
}

TSeries TSeries::scaled(const CoeffFrac& c) const {
  TSeries r(rank_, maxDegree_);
  for (const auto& [e, x] : terms_) r.addTerm(e, x * c);
  return r;
}

TSeries TSeries::truncated(int maxDegree) const {
  TSeries r(rank_, std::min(maxDegree, maxDegree_));
  for (const auto& [e, c] : terms_) r.addTerm(e, c);
  return r;
}

std::optional<TSeries> TSeries::dividedByLinear(const Character& w) const {
  algebra::requireRank(w, rank_);
  std::size_t j = 0;
  while (j < rank_ && w[j] == 0) ++j;
  if (j == rank_) throw MathError("division by the zero linear form");
  std::map<Character, CoeffFrac> rest = terms_;
  TSeries q(rank_, maxDegree_ - 1);
  const CoeffFrac lead(Rational(w[j]));
  while (true) {
    auto top = rest.end();
    for (auto it = rest.begin(); it != rest.end(); ++it)
      if (it->first[j] > 0 && (top == rest.end() || it->first[j] > top->first[j])) top = it;
    if (top == rest.end()) break;
    Character e = top->first;
    e = e - Character::unit(rank_, j);
    CoeffFrac c = top->second / lead;
    q.terms_[e] += c;
    if (q.terms_[e].isZero()) q.terms_.erase(e);
    for (std::size_t i = 0; i < rank_; ++i) {
      if (w[i] == 0) continue;
      Character f = e + Character::unit(rank_, i);
      CoeffFrac& slot = rest[f];
      slot -= c * CoeffFrac(Rational(w[i]));
      if (slot.isZero()) rest.erase(f);
    }
  }
  if (!rest.empty()) return std::nullopt;
  return q;
}

std::string TSeries::str(algebra::CoeffBasis basis) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c0] : terms_) {
    CoeffFrac c = basis == algebra::CoeffBasis::Delta ? c0 : c0.swapDeltaY();
    const char* var = basis == algebra::CoeffBasis::Delta ? "d" : "y";
    std::string mono = monomialName(e);
    int nonzero = 0;
    for (const auto& x : c.num().coeffs()) nonzero += x != 0;
    bool negative = false;
    std::string body;
    if (c.isPolynomial() && nonzero == 1) {
      negative = c.num().lead() < 0;
      body = (negative ? -c.num() : c.num()).str(var);
      if (!mono.empty()) body = body == "1" ? mono : body + "*" + mono;
    } else {
      body = "(" + c.str(var) + ")";
      if (!mono.empty()) body += "*" + mono;
    }
    if (out.empty())
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

TSeries expMinus(const Character& w, int maxDegree) {
  std::vector<Rational> a;
  Rational fact = 1;
  for (int k = 0; k <= maxDegree; ++k) {
    if (k > 0) fact *= k;
    a.push_back(Rational(k % 2 ? -1 : 1) / fact);
  }
  return substituteLinear(a, w, maxDegree);
}

std::string CohomologyExpansion::str(algebra::CoeffBasis basis) const {
  if (poles.empty()) return numerator.str(basis);
  std::string den;
  for (const auto& w : poles) {
    if (!den.empty()) den += "*";
    std::string form;
    for (std::size_t i = 0; i < w.rank(); ++i) {
      if (w[i] == 0) continue;
      std::string coef = w[i] == 1 ? "" : w[i] == -1 ? "-" : std::to_string(w[i]) + "*";
      std::string term = coef + "t" + std::to_string(i + 1);
      if (form.empty())
        form = term;
      else
        form += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
    }
    den += "(" + form + ")";
  }
  return "(" + numerator.str(basis) + ")/(" + den + ")";
}

CohomologyExpansion cohomologyLimit(const ClassFraction& c, int order, bool allowPoles) {
  if (order < 0) throw MathError("cohomology limit: truncation order must be nonnegative");
  const std::size_t rank = c.rank();
  const int top = order + static_cast<int>(c.den().size());
  TSeries num(rank, top);
  for (const auto& [m, coeff] : c.num().terms()) num = num + expMinus(m, top).scaled(coeff);
  const std::vector<Rational> todd = toddSeries(top);
  for (const auto& w : c.den()) num = num * substituteLinear(todd, w, top);
  std::vector<Character> poles;
  for (const auto& w : c.den()) {
    if (auto q = num.dividedByLinear(w)) {
      num = *q;
    } else if (allowPoles) {
      poles.push_back(w);
    } else {
      throw MathError("pole at t = 0 not cancelled along " + w.str());
    }
  }
  return {num.truncated(order + static_cast<int>(poles.size())), std::move(poles)};
}

}  // namespace eqhirz::basis
