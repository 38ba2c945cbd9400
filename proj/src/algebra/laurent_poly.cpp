#include "eqhirz/algebra/laurent_poly.hpp"

#include "eqhirz/error.hpp"

namespace eqhirz::algebra {

namespace {

void requireSameRank(std::size_t a, std::size_t b) {
  if (a != b)
    throw MathError("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

std::int64_t floorMod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t rank, const CoeffFrac& c) {
  LaurentPoly p(rank);
  p.addTerm(Character::zero(rank), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Character& m, const CoeffFrac& c) {
  LaurentPoly p(m.rank());
  p.addTerm(m, c);
  return p;
}

CoeffFrac LaurentPoly::coeff(const Character& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CoeffFrac() : it->second;
}

bool LaurentPoly::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.isZero());
}

void LaurentPoly::addTerm(const Character& m, const CoeffFrac& c) {
  requireRank(m, rank_);
  if (c.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  requireSameRank(rank_, o.rank_);
  for (const auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  requireSameRank(rank_, o.rank_);
  for (const auto& [m, c] : o.terms_) addTerm(m, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const CoeffFrac& s) {
  if (s.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  requireSameRank(a.rank_, b.rank_);
  LaurentPoly r(a.rank_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.addTerm(ma + mb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::shifted(const Character& m) const {
  requireRank(m, rank_);
  LaurentPoly r(rank_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + m, c);
  return r;
}

LaurentPoly LaurentPoly::timesBinomial(const Character& w) const {
  return *this - shifted(w);
}

std::optional<LaurentPoly> LaurentPoly::divideByBinomial(const Character& w) const {
  requireRank(w, rank_);
  if (w.isZero()) throw MathError("division by 1 - T^0");
  std::size_t pivot = 0;
  while (w[pivot] == 0) ++pivot;
  const std::int64_t wp = w[pivot];
  const std::int64_t modulus = wp < 0 ? -wp : wp;

  // Terms lying on one line m0 + Z w are grouped; (1 - T^w) divides exactly
  // when each line's coefficient sum vanishes, and the quotient on a line is
  // the sequence of partial sums.
  std::map<Character, std::map<std::int64_t, CoeffFrac>> chains;
  for (const auto& [m, c] : terms_) {
    std::int64_t rep = floorMod(m[pivot], modulus);
    std::int64_t k = (m[pivot] - rep) / wp;
    chains[m - w * k].emplace(k, c);
  }
  LaurentPoly q(rank_);
  for (const auto& [base, chain] : chains) {
    std::int64_t kmin = chain.begin()->first, kmax = chain.rbegin()->first;
    CoeffFrac acc;
    auto it = chain.begin();
    for (std::int64_t k = kmin; k < kmax; ++k) {
      if (it != chain.end() && it->first == k) {
        acc += it->second;
        ++it;
      }
      if (!acc.isZero()) q.terms_.emplace(base + w * k, acc);
    }
    acc += chain.rbegin()->second;
    if (!acc.isZero()) return std::nullopt;
  }
  return q;
}

}  // namespace eqhirz::algebra
