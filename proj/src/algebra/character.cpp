#include "eqhirz/algebra/character.hpp"

#include "eqhirz/error.hpp"

namespace eqhirz::algebra {

Character Character::unit(std::size_t rank, std::size_t i) {
  Character c = zero(rank);
  c.c_[i] = 1;
  return c;
}

std::int64_t Character::degree() const {
  std::int64_t d = 0;
  for (auto x : c_) d += x;
  return d;
}

bool Character::isZero() const {
  for (auto x : c_)
    if (x != 0) return false;
  return true;
}

std::int64_t Character::dot(const Character& o) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) s += c_[i] * o.c_[i];
  return s;
}

Character Character::operator-() const {
  Character r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Character Character::operator*(std::int64_t k) const {
  Character r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

Character& Character::operator+=(const Character& o) {
  if (o.c_.size() != c_.size()) throw MathError("rank mismatch: " + str() + " vs " + o.str());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Character& Character::operator-=(const Character& o) {
  if (o.c_.size() != c_.size()) throw MathError("rank mismatch: " + str() + " vs " + o.str());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

std::strong_ordering operator<=>(const Character& a, const Character& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
  if (auto d = a.degree() <=> b.degree(); d != 0) return d;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return b.c_[i] <=> a.c_[i];
  return std::strong_ordering::equal;
}

std::string Character::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + "]";
}

void requireRank(const Character& c, std::size_t rank) {
  if (c.rank() != rank)
    throw MathError("rank mismatch: character " + c.str() + " in a rank-" + std::to_string(rank) +
                    " computation");
}

}  // namespace eqhirz::algebra
