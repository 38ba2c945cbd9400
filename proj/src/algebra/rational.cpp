#include "eqhirz/algebra/rational.hpp"

#include <cctype>

#include "eqhirz/error.hpp"

namespace eqhirz::algebra {

namespace {

bool isIntegerText(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parseRational(const std::string& text) {
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!isIntegerText(num) || !isIntegerText(den) || den.front() == '-' || den.front() == '+')
    throw InputError("malformed rational '" + text + "'");
  if (num.front() == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw InputError("zero denominator in rational '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  // generalized binomial n(n-1)...(n-k+1)/k!
  Rational r = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    r *= makeRational(n - i, i + 1);
  }
  return r;
}

}  // namespace eqhirz::algebra
