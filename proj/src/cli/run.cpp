#include "eqhirz/cli/run.hpp"

#include <map>
#include <set>

#include "eqhirz/algebra/series.hpp"
#include "eqhirz/basis/positivity.hpp"
#include "eqhirz/basis/rewrite.hpp"
#include "eqhirz/cli/expression.hpp"
#include "eqhirz/error.hpp"
#include "eqhirz/hirz/local_classes.hpp"
#include "eqhirz/hirz/projective_cone.hpp"
#include "eqhirz/hirz/toric.hpp"

namespace eqhirz::cli {

using algebra::Character;
using algebra::ClassFraction;
using algebra::CoeffBasis;
using algebra::CoeffFrac;
using algebra::LaurentPoly;
using basis::SVariableSet;

namespace {

class Report {
 public:
  explicit Report(CoeffBasis basis) : basis_(basis) {}

  CoeffBasis basis() const { return basis_; }

  void line(const std::string& key, const std::string& text) { add(key, text, Json(text)); }
  void add(const std::string& key, const std::string& text, Json value) {
    lines_.emplace_back(key, text);
    doc_[key] = std::move(value);
  }
  void count(const std::string& key, std::int64_t n) { add(key, std::to_string(n), Json(n)); }
  void flag(const std::string& key, bool b) { add(key, b ? "true" : "false", Json(b)); }
  void cls(const std::string& key, const ClassFraction& c) {
    std::string text = algebra::formatClass(c, basis_);
    add(key, text, Json{{"text", text}, {"value", classToJson(c)}});
  }
  void coeff(const std::string& key, const CoeffFrac& c) {
    std::string text = algebra::formatCoeff(c, basis_);
    add(key, text, Json{{"text", text}, {"value", coeffToJson(c)}});
  }

  std::string render(OutputFormat format, const std::string& command) const {
    if (format == OutputFormat::Text) {
      std::string out;
      for (const auto& [k, v] : lines_) out += k + ": " + v + "\n";
      return out;
    }
    Json doc{{"schema_version", kSchemaVersion},
             {"command", command},
             {"basis", basis_ == CoeffBasis::Delta ? "delta" : "y"}};
    for (const auto& [k, v] : doc_.items()) doc[k] = v;
    return doc.dump(2) + "\n";
  }

 private:
  CoeffBasis basis_;
  std::vector<std::pair<std::string, std::string>> lines_;
  Json doc_ = Json::object();
};

std::size_t readRank(const Field& job) { return static_cast<std::size_t>(job.at("rank").asSmallInt(1, 8)); }

// The dual cone and lattice a toric job refers to, for alphabets and the
// constructive expansion.
struct ToricInput {
  lattice::Cone cone;
  lattice::LatticeBasis lattice;
};

std::optional<ToricInput> readToric(const Field& job, std::size_t rank) {
  auto c = job.get("cone");
  if (!c) return std::nullopt;
  return ToricInput{readCone(*c, rank), readLattice(job.get("lattice"), rank)};
}

std::optional<SVariableSet> readAlphabet(const Field& job, std::size_t rank, const std::optional<ToricInput>& toric) {
  auto a = job.get("alphabet");
  if (!a) return std::nullopt;
  if (a->json().is_string()) {
    a->asChoice({"semigroup"});
    if (!toric) a->fail("\"semigroup\" needs a cone");
    lattice::Cone dual = toric->cone.side() == lattice::ConeSide::Dual
                             ? toric->cone
                             : lattice::dualCone(toric->cone, toric->lattice);
    return SVariableSet(lattice::semigroupGenerators(dual, toric->lattice));
  }
  std::vector<Character> ws = a->asCharacters(rank);
  if (ws.empty()) a->fail("empty alphabet");
  std::set<Character> seen;
  for (const auto& f : a->items()) {
    Character w = f.asCharacter(rank);
    if (w.isZero()) f.fail("zero character in the alphabet");
    if (!seen.insert(w).second) f.fail("repeated letter " + w.str());
  }
  return SVariableSet(ws);
}

Json alphabetJson(const SVariableSet& vars) {
  Json a = Json::array();
  for (const auto& w : vars.weights()) a.push_back(w.coords());
  return a;
}

void reportPositivity(Report& r, const basis::SPolynomial& numerator, const SVariableSet& vars) {
  basis::PositivityReport p = basis::positivityReport(numerator);
  Json offending = Json::array();
  std::string text;
  for (const auto& m : p.offending) {
    std::string s = basis::formatSMonomial(m, vars);
    offending.push_back(s);
    text += (text.empty() ? "" : ", ") + s;
  }
  r.add("positivity", p.verdict() + " (" + std::to_string(p.terms.size()) + " terms)",
        Json{{"verdict", p.verdict()}, {"terms", p.terms.size()}, {"offending", offending}});
  if (!p.positive) r.line("offending", text);
}

void reportSFraction(Report& r, const basis::SFraction& form, const SVariableSet& vars, bool exact) {
  Json num = Json::array();
  for (const auto& [m, c] : form.numerator.terms())
    num.push_back(Json{{"s", m.s}, {"d", m.delta}, {"coeff", algebra::toString(c)}});
  Json extra = Json::array();
  for (std::size_t i = 0; i < form.extraDen.size(); ++i)
    extra.push_back(Json{{"weight", form.extraWeights[i].coords()}, {"text", form.extraDen[i].str(vars)}});
  std::string text = form.str(vars);
  r.add("s_form", text,
        Json{{"text", text},
             {"alphabet", alphabetJson(vars)},
             {"numerator", num},
             {"monomial_denominator", form.monomialDen},
             {"extra_denominators", extra}});
  r.flag("s_form_exact", exact);
  reportPositivity(r, form.numerator, vars);
}

// The (d, S) form of c over the job's alphabet, when one is given.
void reportS(Report& r, const Field& job, const ClassFraction& c, std::size_t rank,
             const std::optional<ToricInput>& toric, const std::string& defaultExpansion) {
  std::optional<SVariableSet> vars = readAlphabet(job, rank, toric);
  if (!vars) {
    if (job.has("expansion")) job.at("expansion").fail("\"expansion\" needs an \"alphabet\"");
    return;
  }
  std::string expansion = defaultExpansion;
  if (auto e = job.get("expansion")) expansion = e->asChoice({"rewrite", "constructive"});
  if (expansion == "constructive") {
    if (!toric) job.at("expansion").fail("the constructive expansion needs a cone");
    basis::SFraction form = basis::toricSExpansion(toric->cone, toric->lattice, *vars);
    reportSFraction(r, form, *vars, form.toClass(*vars) == c);
  } else {
    basis::RewriteResult res = basis::rewriteInS(c, *vars);
    reportSFraction(r, res.form, *vars, res.exact);
  }
}

ClassFraction readPoint(const Field& f, std::size_t rank) {
  int kinds = f.has("weights") + f.has("class") + f.has("cone");
  if (kinds != 1) f.fail("a fixed point needs exactly one of \"weights\", \"class\", \"cone\"");
  if (auto w = f.get("weights")) {
    std::vector<Character> ws = w->asCharacters(rank);
    for (const auto& x : w->items())
      if (x.asCharacter(rank).isZero()) x.fail("zero tangent weight");
    return hirz::smoothLocalClass({ws, ""}, rank);
  }
  if (auto c = f.get("class")) return readClass(*c, rank);
  return hirz::toricLocalClass(readCone(f.at("cone"), rank), readLattice(f.get("lattice"), rank));
}

std::vector<ClassFraction> readPoints(const Field& list, std::size_t rank) {
  std::vector<ClassFraction> out;
  for (const auto& p : list.items()) out.push_back(readPoint(p, rank));
  return out;
}

// Local classes of the fixed points of the toric variety of a complete fan
// (one per maximal cone) and its orbit counts b_i = #cones of dimension n - i.
struct FanData {
  std::vector<ClassFraction> points;
  std::vector<std::int64_t> orbits;
};

FanData readFan(const Field& fan, std::size_t rank) {
  lattice::LatticeBasis lat = readLattice(fan.get("lattice"), rank);
  FanData out;
  out.orbits.assign(rank + 1, 0);
  std::set<std::vector<Character>> seen;
  for (const auto& c : fan.at("cones").items()) {
    lattice::Cone sigma(c.asCharacters(rank), lattice::ConeSide::Primal);
    out.points.push_back(hirz::toricLocalClass(sigma, lat));
    for (const auto& face : lattice::faces(sigma)) {
      std::vector<Character> rays;
      for (auto i : face.rays) rays.push_back(sigma.rays()[i]);
      if (!seen.insert(rays).second) continue;
      if (face.dim < 0 || face.dim > static_cast<int>(rank)) c.fail("face of unexpected dimension");
      ++out.orbits[rank - static_cast<std::size_t>(face.dim)];
    }
  }
  if (out.points.empty()) fan.at("cones").fail("a fan needs at least one cone");
  return out;
}

void runChi(Report& r, const Field& job) {
  std::size_t rank = readRank(job);
  if (job.has("points") == job.has("fan")) job.fail("a chi job needs exactly one of \"points\", \"fan\"");
  std::vector<ClassFraction> points;
  std::optional<std::vector<std::int64_t>> orbits;
  if (auto p = job.get("points")) {
    points = readPoints(*p, rank);
  } else {
    FanData fan = readFan(job.at("fan"), rank);
    points = std::move(fan.points);
    orbits = fan.orbits;
  }
  if (auto o = job.get("orbits")) {
    std::vector<std::int64_t> given;
    for (const auto& x : o->items()) given.push_back(x.asInt());
    if (orbits && *orbits != given) o->fail("orbit counts do not match the fan");
    orbits = given;
  }
  r.count("fixed_points", static_cast<std::int64_t>(points.size()));
  CoeffFrac chi = hirz::chiFromLocal(points);
  r.coeff("chi", chi);
  if (orbits) {
    Json list = Json::array();
    std::string text;
    CoeffFrac poly;
    for (std::size_t i = 0; i < orbits->size(); ++i) {
      list.push_back((*orbits)[i]);
      text += (i ? ", " : "") + std::to_string((*orbits)[i]);
      poly += CoeffFrac(algebra::makeRational((*orbits)[i])) * CoeffFrac::delta().pow(static_cast<int>(i));
    }
    r.add("orbits", "[" + text + "]", list);
    r.coeff("orbit_polynomial", poly);
    r.flag("rigidity", poly == chi);
  }
}

void runToric(Report& r, const Field& job) {
  std::size_t rank = readRank(job);
  std::optional<ToricInput> t = readToric(job, rank);
  if (!t) job.fail("missing field \"cone\"");
  ClassFraction c = hirz::toricLocalClass(t->cone, t->lattice);
  r.cls("class", c);
  r.flag("y0_check", hirz::toricY0Check(t->cone, t->lattice).holds);
  r.flag("d0_check", c.substituteDelta(0) == ClassFraction::one(rank));
  reportS(r, job, c, rank, t, "constructive");
}

void runSnc(Report& r, const Field& job) {
  Field wf = job.at("weights");
  std::vector<Character> ws = wf.asCharacters();
  if (ws.empty()) wf.fail("need at least one weight");
  std::size_t rank = ws.front().rank();
  ws = wf.asCharacters(rank);
  for (const auto& x : wf.items())
    if (x.asCharacter(rank).isZero()) x.fail("zero weight");
  int n = static_cast<int>(ws.size());
  int k = job.at("k").asSmallInt(0, n);
  std::string variant = "complement";
  if (auto v = job.get("variant")) variant = v->asChoice({"space", "complement", "log", "divisor"});
  static const std::map<std::string, hirz::SncVariant> kinds = {{"space", hirz::SncVariant::Space},
                                                                {"complement", hirz::SncVariant::Complement},
                                                                {"log", hirz::SncVariant::Log},
                                                                {"divisor", hirz::SncVariant::Divisor}};
  ClassFraction c = hirz::sncLocalClass(n, k, ws, kinds.at(variant));
  r.cls("class", c);
  if (auto id = job.get("t1_identity"); id && id->asBool()) r.flag("t1_identity", hirz::sncT1Identity(n, k, ws).holds);
  reportS(r, job, c, rank, std::nullopt, "rewrite");
}

std::string formatUPoly(const hirz::UPoly& f, CoeffBasis basis) {
  std::string out;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i].isZero()) continue;
    std::string c = algebra::formatCoeff(f.coeffs[i], basis);
    bool negative = c.front() == '-' && c.find_first_of("+-", 1) == std::string::npos;
    if (negative) c = c.substr(1);
    if (c.find_first_of("+-/") != std::string::npos) c = "(" + c + ")";
    std::string u = i == 0 ? "" : (i == 1 ? "U" : "U^" + std::to_string(i));
    std::string body = u.empty() ? c : (c == "1" ? u : c + "*" + u);
    if (out.empty())
      out = (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

void runCone(Report& r, const Field& job) {
  if (job.has("hypersurface") == job.has("f")) job.fail("a cone job needs exactly one of \"hypersurface\", \"f\"");
  hirz::UPoly f;
  std::optional<int> degree;
  if (auto h = job.get("hypersurface")) {
    int n = h->at("n").asSmallInt(1, 12);
    degree = h->at("d").asSmallInt(0, 24);
    f = hirz::hypersurfaceF(n, *degree);
  } else {
    Field ff = job.at("f");
    f.modulus = ff.at("modulus").asSmallInt(1, 12);
    for (const auto& c : ff.at("coeffs").items()) {
      try {
        f.coeffs.push_back(parseCoeff(c.asString()));
      } catch (const InputError& e) {
        c.fail(e.what());
      }
    }
  }
  const int n = f.modulus;
  std::string part = "closed";
  if (auto p = job.get("part")) part = p->asChoice({"open", "closed", "complement"});
  hirz::ConePart which = part == "open"     ? hirz::ConePart::Open
                         : part == "closed" ? hirz::ConePart::Closed
                                            : hirz::ConePart::Complement;
  CoeffFrac chi = hirz::chiOfProjectiveClass(f, n);
  ClassFraction c = hirz::coneClass(f, n, chi, which);
  r.line("f", formatUPoly(f, r.basis()));
  r.coeff("chi_y", chi);
  r.cls("class", c);
  if (auto q = job.get("quadric_recursion"); q && q->asBool()) {
    if (degree != 2) q->fail("the quadric recursion needs a hypersurface of degree 2");
    auto [closed, complement] = hirz::quadricRecursion(n);
    r.flag("quadric_recursion", closed == hirz::coneClass(f, n, chi, hirz::ConePart::Closed) &&
                                    complement == hirz::coneClass(f, n, chi, hirz::ConePart::Complement));
  }
  reportS(r, job, c, 1, std::nullopt, "rewrite");
}

void runAssemble(Report& r, const Field& job) {
  std::size_t rank = readRank(job);
  std::vector<hirz::ChartTerm> terms;
  for (const auto& t : job.at("terms").items()) {
    hirz::ChartTerm term;
    if (auto s = t.get("sign")) {
      term.sign = s->asSmallInt(-1, 1);
      if (term.sign == 0) s->fail("sign must be 1 or -1");
    }
    if (auto m = t.get("multiplicity")) term.multiplicity = m->asSmallInt(1, 1 << 20);
    for (const auto& f : t.at("factors").items()) {
      std::string kind = f.at("kind").asChoice({"full", "punctured", "custom"});
      if (kind == "custom") {
        term.factors.push_back({hirz::ChartFactor::Kind::Custom, Character::zero(rank), readClass(f.at("class"), rank)});
      } else {
        Character w = f.at("weight").asCharacter(rank);
        if (w.isZero()) f.at("weight").fail("zero weight");
        term.factors.push_back({kind == "full" ? hirz::ChartFactor::Kind::FullLine
                                               : hirz::ChartFactor::Kind::PuncturedLine,
                                w, ClassFraction(rank)});
      }
    }
    terms.push_back(std::move(term));
  }
  ClassFraction c = hirz::assemble(terms, rank);
  r.cls("class", c);
  r.cls("class_y0", c.substituteY(0));
  reportS(r, job, c, rank, std::nullopt, "rewrite");
}

void runSolve(Report& r, const Field& job) {
  std::size_t rank = readRank(job);
  CoeffFrac chi;
  try {
    chi = parseCoeff(job.at("chi").asString());
  } catch (const InputError& e) {
    job.at("chi").fail(e.what());
  }
  std::vector<ClassFraction> known = readPoints(job.at("known"), rank);
  std::vector<Character> den = job.at("denominator").asCharacters(rank);
  for (const auto& x : job.at("denominator").items())
    if (x.asCharacter(rank).isZero()) x.fail("zero character in a denominator");
  LaurentPoly num = hirz::solveSingularContribution(chi, known, den);
  ClassFraction c(num, den);
  r.add("numerator", algebra::formatLaurent(num, r.basis()),
        Json{{"text", algebra::formatLaurent(num, r.basis())}, {"value", classToJson(ClassFraction(num))}});
  LaurentPoly num0 = ClassFraction(num).substituteY(0).num();
  r.add("numerator_y0", algebra::formatLaurent(num0, r.basis()),
        Json{{"text", algebra::formatLaurent(num0, r.basis())}, {"value", classToJson(ClassFraction(num0))}});
  r.cls("class", c);
  reportS(r, job, c, rank, std::nullopt, "rewrite");
}

void runPositivity(Report& r, const Field& job) {
  int sources = job.has("polynomial") + job.has("class") + job.has("cone");
  if (sources != 1) job.fail("a positivity job needs exactly one of \"polynomial\", \"class\", \"cone\"");
  if (!job.has("alphabet")) job.at("alphabet");
  std::size_t rank = readRank(job);
  std::optional<ToricInput> t = readToric(job, rank);
  if (auto p = job.get("polynomial")) {
    if (job.has("expansion")) job.at("expansion").fail("\"expansion\" does not apply to a polynomial");
    std::optional<SVariableSet> vars = readAlphabet(job, rank, t);
    basis::SPolynomial poly(vars->size());
    try {
      poly = parseSPolynomial(p->asString(), *vars);
    } catch (const InputError& e) {
      p->fail(e.what());
    }
    r.add("polynomial", poly.str(*vars), Json{{"text", poly.str(*vars)}, {"alphabet", alphabetJson(*vars)}});
    reportPositivity(r, poly, *vars);
    return;
  }
  ClassFraction c = t ? hirz::toricLocalClass(t->cone, t->lattice) : readClass(job.at("class"), rank);
  r.cls("class", c);
  reportS(r, job, c, rank, t, "rewrite");
}

void runResidue(Report& r, const Field& job, const RunOptions& options) {
  std::size_t rank = 1;
  if (job.has("rank")) rank = static_cast<std::size_t>(job.at("rank").asSmallInt(0, 8));
  int n = job.at("pole_order").asSmallInt(0, 24);
  int order = n + 1;
  if (auto t = job.get("truncation")) order = t->asSmallInt(1, 64);
  if (options.truncation) order = *options.truncation;
  if (order < n) job.fail("truncation " + std::to_string(order) + " is below the pole order");
  auto series = [&](const Field& list) {
    std::vector<ClassFraction> c;
    for (const auto& x : list.items()) c.push_back(readClass(x, rank));
    if (c.empty()) list.fail("need at least one coefficient");
    return algebra::SeriesTrunc<ClassFraction>("U", 0, c, order, ClassFraction(rank));
  };
  auto num = series(job.at("numerator"));
  auto f = num;
  if (auto d = job.get("denominator")) f = num * series(*d).inverse();
  r.cls("residue", algebra::residue(f.shifted(-n)));
}

const std::map<std::string, std::set<std::string>>& allowedFields() {
  static const std::map<std::string, std::set<std::string>> f = {
      {"chi", {"rank", "points", "fan", "orbits"}},
      {"toric", {"rank", "cone", "lattice", "alphabet", "expansion"}},
      {"snc", {"weights", "k", "variant", "t1_identity", "alphabet", "expansion"}},
      {"cone", {"hypersurface", "f", "part", "quadric_recursion", "alphabet", "expansion"}},
      {"assemble", {"rank", "terms", "alphabet", "expansion"}},
      {"solve", {"rank", "chi", "known", "denominator", "alphabet", "expansion"}},
      {"positivity", {"rank", "polynomial", "class", "cone", "lattice", "alphabet", "expansion"}},
      {"residue", {"rank", "numerator", "denominator", "pole_order", "truncation"}},
  };
  return f;
}

void checkFields(const Field& job, const std::string& cmd) {
  static const std::set<std::string> common = {"schema_version", "command", "title", "basis", "format", "expect_exit"};
  auto it = allowedFields().find(cmd);
  if (it == allowedFields().end()) return;
  for (const auto& [key, value] : job.json().items())
    if (!common.count(key) && !it->second.count(key)) job.at(key).fail("unknown field for a \"" + cmd + "\" job");
}

using Handler = void (*)(Report&, const Field&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"chi", runChi},         {"toric", runToric}, {"snc", runSnc},
      {"cone", runCone},       {"assemble", runAssemble}, {"solve", runSolve},
      {"positivity", runPositivity},
  };
  return h;
}

}  // namespace

const std::vector<std::string>& commandNames() {
  static const std::vector<std::string> names = {"chi",   "toric",      "snc",     "cone",  "assemble",
                                                 "solve", "positivity", "residue", "corpus"};
  return names;
}

RunResult runJob(const Json& doc, const std::string& command, const RunOptions& options) {
  RunResult out;
  try {
    Field job(doc, "");
    if (!doc.is_object()) job.fail("a job is a JSON object");
    if (auto v = job.get("schema_version"); v && v->asInt() != kSchemaVersion)
      v->fail("unsupported schema version (this build reads " + std::to_string(kSchemaVersion) + ")");
    std::string cmd = command;
    if (auto c = job.get("command")) {
      std::string named = c->asString();
      if (!cmd.empty() && named != cmd) c->fail("job is a \"" + named + "\" job, not \"" + cmd + "\"");
      cmd = named;
    }
    if (cmd.empty()) job.fail("missing field \"command\"");
    CoeffBasis basis = CoeffBasis::Delta;
    if (auto b = job.get("basis")) basis = b->asChoice({"y", "delta"}) == "y" ? CoeffBasis::Y : CoeffBasis::Delta;
    if (options.basis) basis = *options.basis;
    OutputFormat format = OutputFormat::Text;
    if (auto f = job.get("format")) format = f->asChoice({"text", "json"}) == "json" ? OutputFormat::Json : OutputFormat::Text;
    if (options.format) format = *options.format;

    checkFields(job, cmd);
    Report r(basis);
    if (cmd == "residue") {
      runResidue(r, job, options);
    } else {
      auto it = handlers().find(cmd);
      if (it == handlers().end()) {
        if (job.has("command")) job.at("command").fail("unknown command \"" + cmd + "\"");
        throw InputError("unknown command \"" + cmd + "\"");
      }
      it->second(r, job);
    }
    out.output = r.render(format, cmd);
  } catch (const InputError& e) {
    out = {kInputError, "", std::string("input error: ") + e.what()};
  } catch (const MathError& e) {
    out = {kMathError, "", std::string("math error: ") + e.what()};
  } catch (const std::exception& e) {
    out = {kInternalError, "", std::string("internal error: ") + e.what()};
  }
  return out;
}

RunResult runJobText(const std::string& text, const std::string& command, const RunOptions& options) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    return {kInputError, "", std::string("input error: ") + e.what()};
  }
  return runJob(doc, command, options);
}

}  // namespace eqhirz::cli
