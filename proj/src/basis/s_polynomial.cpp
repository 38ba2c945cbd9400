#include "eqhirz/basis/s_polynomial.hpp"

#include <algorithm>

#include "eqhirz/error.hpp"

namespace eqhirz::basis {

SVariableSet::SVariableSet(std::vector<Character> weights, std::vector<bool> denominator)
    : weights_(std::move(weights)), denominator_(std::move(denominator)) {
  if (denominator_.empty()) denominator_.assign(weights_.size(), false);
  if (denominator_.size() != weights_.size())
    throw InputError("alphabet: denominator flags do not match the number of variables");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i].isZero()) throw MathError("alphabet: zero character");
    algebra::requireRank(weights_[i], weights_.front().rank());
    for (std::size_t j = 0; j < i; ++j)
      if (weights_[j] == weights_[i]) throw MathError("alphabet: repeated character " + weights_[i].str());
  }
}

std::optional<std::size_t> SVariableSet::indexOf(const Character& w) const {
  auto it = std::find(weights_.begin(), weights_.end(), w);
  if (it == weights_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - weights_.begin());
}

std::string SVariableSet::name(std::size_t i) const { return "S" + weights_[i].str(); }

int SMonomial::sDegree() const {
  int d = 0;
  for (int e : s) d += e;
  return d;
}

bool SMonomial::divides(const SMonomial& o) const {
  if (delta > o.delta) return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] > o.s[i]) return false;
  return true;
}

bool operator<(const SMonomial& a, const SMonomial& b) {
  int da = a.sDegree(), db = b.sDegree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.s.size() && i < b.s.size(); ++i)
    if (a.s[i] != b.s[i]) return a.s[i] > b.s[i];
  return a.delta < b.delta;
}

SPolynomial SPolynomial::constant(std::size_t nvars, const Rational& c) {
  SPolynomial p(nvars);
  p.addTerm(SMonomial{std::vector<int>(nvars, 0), 0}, c);
  return p;
}

SPolynomial SPolynomial::variable(std::size_t nvars, std::size_t i) {
  SPolynomial p(nvars);
  SMonomial m{std::vector<int>(nvars, 0), 0};
  m.s[i] = 1;
  p.addTerm(m, 1);
  return p;
}

SPolynomial SPolynomial::delta(std::size_t nvars) {
  SPolynomial p(nvars);
  p.addTerm(SMonomial{std::vector<int>(nvars, 0), 1}, 1);
  return p;
}

SPolynomial SPolynomial::fromCoeff(std::size_t nvars, const CoeffFrac& c) {
  if (!c.isPolynomial())
    throw MathError("coefficient " + c.str("d") + " is not a polynomial in d");
  SPolynomial p(nvars);
  const auto& cs = c.num().coeffs();
  for (std::size_t k = 0; k < cs.size(); ++k)
    p.addTerm(SMonomial{std::vector<int>(nvars, 0), static_cast<int>(k)}, cs[k]);
  return p;
}

Rational SPolynomial::coeff(const SMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SPolynomial::addTerm(const SMonomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.s.size() != n_) throw MathError("S-monomial has the wrong number of variables");
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SPolynomial SPolynomial::operator-() const {
  SPolynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SPolynomial& SPolynomial::operator+=(const SPolynomial& o) {
  if (o.n_ != n_) throw MathError("S-polynomials over different alphabets");
  for (const auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

SPolynomial& SPolynomial::operator-=(const SPolynomial& o) { return *this += -o; }

SPolynomial& SPolynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

SPolynomial operator*(const SPolynomial& a, const SPolynomial& b) {
  if (a.n_ != b.n_) throw MathError("S-polynomials over different alphabets");
  SPolynomial r(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      SMonomial m{ma.s, ma.delta + mb.delta};
      for (std::size_t i = 0; i < m.s.size(); ++i) m.s[i] += mb.s[i];
      r.addTerm(m, ca * cb);
    }
  return r;
}

SPolynomial SPolynomial::pow(int e) const {
  if (e < 0) throw MathError("negative power of an S-polynomial");
  SPolynomial r = constant(n_, 1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

SPolynomial SPolynomial::permuted(const std::vector<std::size_t>& perm) const {
  SPolynomial r(n_);
  for (const auto& [m, c] : terms_) {
    SMonomial p{std::vector<int>(n_, 0), m.delta};
    for (std::size_t i = 0; i < n_; ++i) p.s[perm[i]] = m.s[i];
    r.addTerm(p, c);
  }
  return r;
}

algebra::LaurentPoly SPolynomial::toLaurent(const SVariableSet& vars) const {
  using algebra::LaurentPoly;
  if (vars.size() != n_) throw MathError("alphabet size does not match the S-polynomial");
  const std::size_t rank = vars.rank();
  if (rank == 0) throw MathError("cannot evaluate an S-polynomial over an empty alphabet");
  // powers[i][e] = (T^{w_i} - 1)^e
  std::vector<std::vector<LaurentPoly>> powers(n_);
  auto power = [&](std::size_t i, int e) -> const LaurentPoly& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(LaurentPoly::constant(rank, 1));
    while (static_cast<int>(p.size()) <= e) p.push_back(-p.back().timesBinomial(vars.weight(i)));
    return p[static_cast<std::size_t>(e)];
  };
  LaurentPoly total(rank);
  for (const auto& [m, c] : terms_) {
    LaurentPoly term = LaurentPoly::constant(rank, CoeffFrac::delta().pow(m.delta) * CoeffFrac(c));
    for (std::size_t i = 0; i < n_; ++i)
      if (m.s[i]) term = term * power(i, m.s[i]);
    total += term;
  }
  return total;
}

std::string formatSMonomial(const SMonomial& m, const SVariableSet& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.s.size(); ++i) {
    if (m.s[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.name(i);
    if (m.s[i] > 1) out += "^" + std::to_string(m.s[i]);
  }
  if (m.delta > 0) {
    if (!out.empty()) out += "*";
    out += "d";
    if (m.delta > 1) out += "^" + std::to_string(m.delta);
  }
  return out.empty() ? "1" : out;
}

std::string SPolynomial::str(const SVariableSet& vars) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    bool negative = c < 0;
    Rational a = negative ? Rational(-c) : c;
    std::string mono = formatSMonomial(m, vars);
    std::string body;
    if (mono == "1")
      body = algebra::toString(a);
    else
      body = a == 1 ? mono : algebra::toString(a) + "*" + mono;
    if (out.empty())
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace eqhirz::basis
