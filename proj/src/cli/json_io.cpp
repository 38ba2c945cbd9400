#include "eqhirz/cli/json_io.hpp"

#include <algorithm>
#include <limits>

#include "eqhirz/cli/expression.hpp"
#include "eqhirz/error.hpp"

namespace eqhirz::cli {

using algebra::Character;
using algebra::ClassFraction;
using algebra::CoeffFrac;
using algebra::DeltaPoly;
using algebra::LaurentPoly;
using algebra::Rational;

namespace {

std::string escapeKey(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

}  // namespace

void Field::fail(const std::string& what) const { throw InputError((path_.empty() ? "/" : path_) + ": " + what); }

bool Field::has(const std::string& key) const { return j_->is_object() && j_->contains(key); }

Field Field::at(const std::string& key) const {
  if (!j_->is_object()) fail("expected an object");
  auto it = j_->find(key);
  if (it == j_->end()) fail("missing field \"" + key + "\"");
  return Field(*it, path_ + "/" + escapeKey(key));
}

std::optional<Field> Field::get(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return at(key);
}

std::vector<Field> Field::items() const {
  if (!j_->is_array()) fail("expected an array");
  std::vector<Field> out;
  for (std::size_t i = 0; i < j_->size(); ++i) out.emplace_back((*j_)[i], path_ + "/" + std::to_string(i));
  return out;
}

std::int64_t Field::asInt() const {
  if (!j_->is_number_integer()) fail("expected an integer");
  return j_->get<std::int64_t>();
}

int Field::asSmallInt(int lo, int hi) const {
  std::int64_t v = asInt();
  if (v < lo || v > hi) fail("expected an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

bool Field::asBool() const {
  if (!j_->is_boolean()) fail("expected true or false");
  return j_->get<bool>();
}

std::string Field::asString() const {
  if (!j_->is_string()) fail("expected a string");
  return j_->get<std::string>();
}

std::string Field::asChoice(const std::vector<std::string>& allowed) const {
  std::string s = asString();
  if (std::find(allowed.begin(), allowed.end(), s) == allowed.end()) {
    std::string list;
    for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + ("\"" + a + "\"");
    fail("expected one of " + list);
  }
  return s;
}

Character Field::asCharacter(std::size_t rank) const {
  if (!j_->is_array() || j_->empty()) fail("expected a nonempty integer array");
  std::vector<std::int64_t> c;
  for (const auto& f : items()) {
    std::int64_t v = f.asInt();
    if (v > (std::int64_t{1} << 40) || v < -(std::int64_t{1} << 40)) f.fail("coordinate out of range");
    c.push_back(v);
  }
  if (rank != 0 && c.size() != rank) fail("expected " + std::to_string(rank) + " coordinates");
  return Character(c);
}

std::vector<Character> Field::asCharacters(std::size_t rank) const {
  std::vector<Character> out;
  for (const auto& f : items()) out.push_back(f.asCharacter(rank));
  return out;
}

Json coeffToJson(const CoeffFrac& c) {
  auto list = [](const DeltaPoly& p) {
    Json a = Json::array();
    for (const auto& q : p.coeffs()) a.push_back(algebra::toString(q));
    return a;
  };
  return Json{{"num", list(c.num())}, {"den", list(c.den())}};
}

CoeffFrac coeffFromJson(const Field& f) {
  auto poly = [](const Field& g) {
    std::vector<Rational> c;
    for (const auto& x : g.items()) {
      try {
        c.push_back(algebra::parseRational(x.asString()));
      } catch (const InputError& e) {
        x.fail(e.what());
      }
    }
    return DeltaPoly(c);
  };
  DeltaPoly num = poly(f.at("num")), den = poly(f.at("den"));
  if (den.isZero()) f.at("den").fail("zero denominator");
  return CoeffFrac(num, den);
}

Json classToJson(const ClassFraction& c) {
  Json num = Json::array();
  for (const auto& [m, k] : c.num().terms()) num.push_back(Json{{"exp", m.coords()}, {"coeff", coeffToJson(k)}});
  Json den = Json::array();
  for (const auto& w : c.den()) den.push_back(w.coords());
  return Json{{"rank", c.rank()}, {"numerator", num}, {"denominator", den}};
}

ClassFraction classFromJson(const Field& f) {
  auto rank = static_cast<std::size_t>(f.at("rank").asSmallInt(0, 64));
  LaurentPoly num(rank);
  for (const auto& t : f.at("numerator").items()) {
    Character m = rank == 0 ? Character::zero(0) : t.at("exp").asCharacter(rank);
    if (rank == 0 && !t.at("exp").json().empty()) t.at("exp").fail("expected [] for rank 0");
    num.addTerm(m, coeffFromJson(t.at("coeff")));
  }
  std::vector<Character> den;
  for (const auto& w : f.at("denominator").items()) {
    Character c = w.asCharacter(rank);
    if (c.isZero()) w.fail("zero character in a denominator");
    den.push_back(c);
  }
  return ClassFraction(num, den);
}

ClassFraction readClass(const Field& f, std::size_t rank) {
  ClassFraction c(rank);
  if (f.json().is_string()) {
    try {
      c = parseClass(f.asString(), rank);
    } catch (const InputError& e) {
      f.fail(e.what());
    }
  } else {
    c = classFromJson(f);
  }
  if (c.rank() != rank) f.fail("class has rank " + std::to_string(c.rank()) + ", expected " + std::to_string(rank));
  return c;
}

lattice::Cone readCone(const Field& f, std::size_t rank) {
  std::vector<Character> rays = f.at("rays").asCharacters(rank);
  if (rays.empty()) f.at("rays").fail("a cone needs at least one ray");
  for (const auto& r : f.at("rays").items())
    if (r.asCharacter(rank).isZero()) r.fail("zero ray");
  std::string side = f.at("side").asChoice({"primal", "dual"});
  return lattice::Cone(rays, side == "primal" ? lattice::ConeSide::Primal : lattice::ConeSide::Dual);
}

lattice::LatticeBasis readLattice(const std::optional<Field>& f, std::size_t rank) {
  if (!f) return lattice::LatticeBasis::standard(rank);
  std::vector<Character> gens = f->asCharacters(rank);
  if (gens.empty()) f->fail("a lattice needs generators");
  return lattice::LatticeBasis::generatedBy(rank, gens);
}

}  // namespace eqhirz::cli
