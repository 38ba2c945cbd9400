#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace eqhirz::algebra {

// Integer vector in the character lattice Z^r; also the exponent of T^w.
//
// Ordering is graded: lower total degree first; within a degree the vector
// with the larger first differing coordinate comes first, so T1 precedes T2.
class Character {
 public:
  Character() = default;
  explicit Character(std::vector<std::int64_t> coords) : c_(std::move(coords)) {}
  Character(std::initializer_list<std::int64_t> coords) : c_(coords) {}

  static Character zero(std::size_t rank) { return Character(std::vector<std::int64_t>(rank, 0)); }
  static Character unit(std::size_t rank, std::size_t i);

  std::size_t rank() const { return c_.size(); }
  const std::vector<std::int64_t>& coords() const { return c_; }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  std::int64_t degree() const;
  bool isZero() const;
  std::int64_t dot(const Character& o) const;

  Character operator-() const;
  Character operator*(std::int64_t k) const;
  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }

  friend bool operator==(const Character& a, const Character& b) { return a.c_ == b.c_; }
  friend std::strong_ordering operator<=>(const Character& a, const Character& b);

  // "[1,0,-2]"
  std::string str() const;

 private:
  std::vector<std::int64_t> c_;
};

// Throws MathError unless every character has the given rank.
void requireRank(const Character& c, std::size_t rank);

}  // namespace eqhirz::algebra
