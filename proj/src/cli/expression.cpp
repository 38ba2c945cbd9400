#include "eqhirz/cli/expression.hpp"

#include <cctype>
#include <memory>

#include "eqhirz/error.hpp"

namespace eqhirz::cli {

using algebra::Character;
using algebra::ClassFraction;
using algebra::CoeffFrac;
using algebra::Rational;
using basis::SPolynomial;

namespace {

struct Node {
  enum class Kind { Number, Delta, Y, T, S, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind;
  std::size_t column;
  Rational number;
  Character character;
  int exponent = 0;
  std::unique_ptr<Node> left, right;
};

using NodePtr = std::unique_ptr<Node>;

[[noreturn]] void fail(std::size_t column, const std::string& what) {
  throw InputError("column " + std::to_string(column) + ": " + what);
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) fail(col(), std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  std::size_t col() const { return pos_ + 1; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(col(), std::string("expected '") + c + "'");
  }

  static NodePtr make(Node::Kind k, std::size_t column, NodePtr l = nullptr, NodePtr r = nullptr) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->column = column;
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
  }

  NodePtr expr() {
    NodePtr l = term();
    for (;;) {
      std::size_t c = (skip(), col());
      if (accept('+'))
        l = make(Node::Kind::Add, c, std::move(l), term());
      else if (accept('-'))
        l = make(Node::Kind::Sub, c, std::move(l), term());
      else
        return l;
    }
  }

  NodePtr term() {
    NodePtr l = unary();
    for (;;) {
      std::size_t c = (skip(), col());
      if (accept('*'))
        l = make(Node::Kind::Mul, c, std::move(l), unary());
      else if (accept('/'))
        l = make(Node::Kind::Div, c, std::move(l), unary());
      else
        return l;
    }
  }

  NodePtr unary() {
    std::size_t c = (skip(), col());
    if (accept('-')) return make(Node::Kind::Neg, c, unary());
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    std::size_t c = (skip(), col());
    if (!accept('^')) return base;
    skip();
    std::string digits = integerDigits();
    if (digits.empty() || digits.size() > 6) fail(col(), "expected a small nonnegative exponent");
    NodePtr p = make(Node::Kind::Pow, c, std::move(base));
    p->exponent = std::stoi(digits);
    return p;
  }

  std::string integerDigits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Character character() {
    expect('[');
    std::vector<std::int64_t> coords;
    do {
      skip();
      std::size_t c = col();
      bool negative = accept('-');
      skip();
      std::string digits = integerDigits();
      if (digits.empty()) fail(c, "expected an integer coordinate");
      if (digits.size() > 15) fail(c, "coordinate out of range");
      std::int64_t v = std::stoll(digits);
      coords.push_back(negative ? -v : v);
    } while (accept(','));
    expect(']');
    return Character(coords);
  }

  NodePtr atom() {
    skip();
    std::size_t c = col();
    if (pos_ >= s_.size()) fail(c, "unexpected end of expression");
    char ch = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      NodePtr n = make(Node::Kind::Number, c);
      n->number = Rational(mpz_class(integerDigits()));
      return n;
    }
    if (accept('(')) {
      NodePtr e = expr();
      expect(')');
      e->column = c;
      return e;
    }
    ++pos_;
    switch (ch) {
      case 'd':
        return make(Node::Kind::Delta, c);
      case 'y':
        return make(Node::Kind::Y, c);
      case 'T':
      case 'S': {
        NodePtr n = make(ch == 'T' ? Node::Kind::T : Node::Kind::S, c);
        n->character = character();
        return n;
      }
      default:
        fail(c, std::string("unexpected '") + ch + "'");
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

class ClassEvaluator {
 public:
  explicit ClassEvaluator(std::size_t rank) : rank_(rank) {}

  ClassFraction eval(const Node& n) const {
    switch (n.kind) {
      case Node::Kind::Number:
        return ClassFraction::constant(rank_, n.number);
      case Node::Kind::Delta:
        return ClassFraction::constant(rank_, CoeffFrac::delta());
      case Node::Kind::Y:
        return ClassFraction::constant(rank_, CoeffFrac::y());
      case Node::Kind::T:
        return ClassFraction::monomial(checked(n));
      case Node::Kind::S:
        if (checked(n).isZero()) fail(n.column, "S of the zero character");
        return ClassFraction::sVariable(n.character);
      case Node::Kind::Add:
        return eval(*n.left) + eval(*n.right);
      case Node::Kind::Sub:
        return eval(*n.left) - eval(*n.right);
      case Node::Kind::Mul:
        return eval(*n.left) * eval(*n.right);
      case Node::Kind::Neg:
        return -eval(*n.left);
      case Node::Kind::Pow:
        return eval(*n.left).pow(n.exponent);
      case Node::Kind::Div:
        return divide(eval(*n.left), *n.right);
    }
    fail(n.column, "unknown node");
  }

 private:
  const Character& checked(const Node& n) const {
    if (n.character.rank() != rank_)
      fail(n.column, "character " + n.character.str() + " does not have rank " + std::to_string(rank_));
    return n.character;
  }

  ClassFraction divide(ClassFraction v, const Node& d) const {
    switch (d.kind) {
      case Node::Kind::Mul:
        return divide(divide(std::move(v), *d.left), *d.right);
      case Node::Kind::Neg:
        return -divide(std::move(v), *d.left);
      case Node::Kind::Pow:
        for (int i = 0; i < d.exponent; ++i) v = divide(std::move(v), *d.left);
        return v;
      default:
        break;
    }
    ClassFraction q = eval(d);
    if (q.isZero()) fail(d.column, "division by zero");
    if (q.isConstant()) return v * q.num().coeff(Character::zero(rank_)).inverse();
    try {
      return v.dividedBy(q);
    } catch (const MathError&) {
      fail(d.column, "divisor is not a monomial or a binomial");
    }
  }

  std::size_t rank_;
};

class SEvaluator {
 public:
  explicit SEvaluator(const basis::SVariableSet& vars) : vars_(vars) {}

  SPolynomial eval(const Node& n) const {
    const std::size_t N = vars_.size();
    switch (n.kind) {
      case Node::Kind::Number:
        return SPolynomial::constant(N, n.number);
      case Node::Kind::Delta:
        return SPolynomial::delta(N);
      case Node::Kind::Y:
        return -SPolynomial::constant(N, 1) - SPolynomial::delta(N);
      case Node::Kind::T:
        fail(n.column, "T is not allowed in an S-polynomial");
      case Node::Kind::S: {
        auto i = vars_.indexOf(n.character);
        if (!i) fail(n.column, "S" + n.character.str() + " is not in the alphabet");
        return SPolynomial::variable(N, *i);
      }
      case Node::Kind::Add:
        return eval(*n.left) + eval(*n.right);
      case Node::Kind::Sub:
        return eval(*n.left) - eval(*n.right);
      case Node::Kind::Mul:
        return eval(*n.left) * eval(*n.right);
      case Node::Kind::Neg:
        return -eval(*n.left);
      case Node::Kind::Pow:
        return eval(*n.left).pow(n.exponent);
      case Node::Kind::Div: {
        SPolynomial d = eval(*n.right);
        basis::SMonomial one{std::vector<int>(N, 0), 0};
        if (d.terms().size() != 1 || d.terms().begin()->first != one)
          fail(n.right->column, "an S-polynomial can only be divided by a nonzero rational");
        Rational c = d.terms().begin()->second;
        return eval(*n.left) * Rational(1 / c);
      }
    }
    fail(n.column, "unknown node");
  }

 private:
  const basis::SVariableSet& vars_;
};

}  // namespace

ClassFraction parseClass(const std::string& text, std::size_t rank) {
  NodePtr ast = Parser(text).parse();
  return ClassEvaluator(rank).eval(*ast);
}

CoeffFrac parseCoeff(const std::string& text) {
  NodePtr ast = Parser(text).parse();
  ClassFraction c = ClassEvaluator(0).eval(*ast);
  if (!c.isConstant()) throw InputError("'" + text + "' is not a constant");
  return c.num().coeff(Character::zero(0));
}

SPolynomial parseSPolynomial(const std::string& text, const basis::SVariableSet& vars) {
  NodePtr ast = Parser(text).parse();
  return SEvaluator(vars).eval(*ast);
}

}  // namespace eqhirz::cli
