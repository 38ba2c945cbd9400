#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "eqhirz/basis/s_polynomial.hpp"
#include "eqhirz/lattice/cone.hpp"

namespace eqhirz::basis {

// numerator / (prod_i S_i^{monomialDen[i]} * prod extraDen), where each
// extra factor is S_w = prod (1 + S_i)^{c_i} - 1 expanded for the weight
// w = extraWeights[j] outside the alphabet.
struct SFraction {
  SPolynomial numerator;
  std::vector<int> monomialDen;
  std::vector<SPolynomial> extraDen;
  std::vector<Character> extraWeights;

  ClassFraction toClass(const SVariableSet& vars) const;
  std::string str(const SVariableSet& vars) const;
};

// The representation m = sum c_i w_i (c >= 0) whose S-monomial comes first
// in the canonical order among all representations: letters are taken in
// search order and each is used as often as possible before the next is
// tried.  The search is depth-first, bounded by a grading positive on the
// alphabet, and memoized per instance.  The default search order is the
// alphabet order.
class RepresentationSearch {
 public:
  explicit RepresentationSearch(const SVariableSet& vars, std::vector<std::size_t> searchOrder = {});
  // c indexed by the alphabet, or std::nullopt when m is not representable.
  std::optional<std::vector<int>> find(const Character& m);
  // prod (1 + S_i)^{c_i} for the representation of m; throws MathError
  // naming m when there is none.
  SPolynomial monomial(const Character& m);

 private:
  std::optional<std::vector<int>> search(std::size_t pos, const Character& m);
  const SVariableSet& vars_;
  std::vector<std::size_t> order_;
  Character grading_;
  std::vector<std::int64_t> letterDegree_;
  std::map<std::pair<std::size_t, Character>, std::optional<std::vector<int>>> memo_;
};

struct RewriteResult {
  SFraction form;
  bool exact = false;  // form.toClass(vars) == input
};

// Writes c over the alphabet: a denominator factor 1 - T^w becomes -S_w
// when w or -w is a letter (flipping 1/(1 - T^w) = -T^{-w}/(1 - T^{-w})
// as needed), and otherwise the expanded polynomial for whichever of w, -w
// is representable; every numerator monomial T^m becomes prod (1 + S_i)^{c_i}
// for the first representation of m in the canonical order.
RewriteResult rewriteInS(const ClassFraction& c, const SVariableSet& vars);

// The local class of the toric germ of sigma summed piece by piece: for each
// face F of the dual cone and each half-open simplicial piece of relint F,
// d^{dim F} (sum over box points m of T^m) / prod_{rays w} S_w with T^m
// rewritten through the alphabet, letters that are not rays searched first.  Every term is nonnegative, so the
// numerator over the product of the ray variables is too.  Every ray of the
// dual cone must be a letter.
SFraction toricSExpansion(const lattice::Cone& sigma, const lattice::LatticeBasis& basis, const SVariableSet& vars);

}  // namespace eqhirz::basis
