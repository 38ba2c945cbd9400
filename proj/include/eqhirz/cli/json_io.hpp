#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "eqhirz/algebra/class_fraction.hpp"
#include "eqhirz/lattice/cone.hpp"

namespace eqhirz::cli {

using Json = nlohmann::ordered_json;

// A node of an input document together with its JSON pointer, so that
// every rejection names the location.  Accessors throw InputError.
class Field {
 public:
  Field(const Json& j, std::string path) : j_(&j), path_(std::move(path)) {}

  const Json& json() const { return *j_; }
  const std::string& path() const { return path_; }
  bool has(const std::string& key) const;
  Field at(const std::string& key) const;
  std::optional<Field> get(const std::string& key) const;
  std::vector<Field> items() const;

  std::int64_t asInt() const;
  int asSmallInt(int lo, int hi) const;
  bool asBool() const;
  std::string asString() const;
  std::string asChoice(const std::vector<std::string>& allowed) const;
  // An integer array; rank 0 accepts any length.
  algebra::Character asCharacter(std::size_t rank = 0) const;
  std::vector<algebra::Character> asCharacters(std::size_t rank = 0) const;

  [[noreturn]] void fail(const std::string& what) const;

 private:
  const Json* j_;
  std::string path_;
};

// {"num": ["0", "1"], "den": ["1"]}: coefficient lists in d, lowest first.
Json coeffToJson(const algebra::CoeffFrac& c);
algebra::CoeffFrac coeffFromJson(const Field& f);

// {"rank": r, "numerator": [{"exp": [..], "coeff": {..}}, ..], "denominator": [[..], ..]}
// with numerator terms in graded order; denominator lists the w of the
// factors 1 - T^w.
Json classToJson(const algebra::ClassFraction& c);
algebra::ClassFraction classFromJson(const Field& f);

// A class given either as a text expression or as a class document.
algebra::ClassFraction readClass(const Field& f, std::size_t rank);

// {"rays": [[..], ..], "side": "primal" | "dual"}
lattice::Cone readCone(const Field& f, std::size_t rank);
// An optional list of lattice generators; the standard lattice otherwise.
lattice::LatticeBasis readLattice(const std::optional<Field>& f, std::size_t rank);

}  // namespace eqhirz::cli
