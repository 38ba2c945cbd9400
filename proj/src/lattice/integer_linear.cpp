#include "eqhirz/lattice/integer_linear.hpp"

#include <numeric>

#include "eqhirz/error.hpp"

namespace eqhirz::lattice {

std::int64_t checkedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw MathError("64-bit integer overflow in lattice arithmetic");
  return r;
}

std::int64_t checkedMul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw MathError("64-bit integer overflow in lattice arithmetic");
  return r;
}

std::int64_t toInt64(const algebra::Integer& z) {
  if (!z.fits_slong_p()) throw MathError("integer does not fit in 64 bits: " + z.get_str());
  return z.get_si();
}

std::int64_t gcdOf(const IntVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

IntVec primitive(const IntVec& v) {
  std::int64_t g = gcdOf(v);
  if (g <= 1) return v;
  IntVec r = v;
  for (auto& x : r) x /= g;
  return r;
}

namespace {

// row_i -= f * row_j
void subtractRow(IntMat& m, std::size_t i, std::size_t j, std::int64_t f) {
  if (f == 0) return;
  for (std::size_t c = 0; c < m[i].size(); ++c) m[i][c] = checkedAdd(m[i][c], -checkedMul(f, m[j][c]));
}

std::int64_t floorDiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Unimodular row reduction to echelon form on the first `cols` columns.
// Returns the pivot columns; rows past the pivots are zero on those columns.
std::vector<std::size_t> echelon(IntMat& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    while (true) {
      std::size_t best = m.size();
      for (std::size_t i = r; i < m.size(); ++i)
        if (m[i][c] != 0 && (best == m.size() || std::llabs(m[i][c]) < std::llabs(m[best][c]))) best = i;
      if (best == m.size()) break;
      std::swap(m[r], m[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        subtractRow(m, i, r, m[i][c] / m[r][c]);
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (auto& x : m[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) subtractRow(m, i, r, floorDiv(m[i][c], m[r][c]));
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

IntMat hermiteRows(IntMat rows) {
  if (rows.empty()) return rows;
  auto pivots = echelon(rows, rows.front().size());
  rows.resize(pivots.size());
  return rows;
}

IntMat integerKernel(const IntMat& a, std::size_t cols) {
  const std::size_t m = a.size();
  IntMat aug(cols, IntVec(m + cols, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < m; ++i) aug[j][i] = a[i][j];
    aug[j][m + j] = 1;
  }
  auto pivots = echelon(aug, m);
  IntMat kernel;
  for (std::size_t r = pivots.size(); r < cols; ++r)
    kernel.emplace_back(aug[r].begin() + static_cast<std::ptrdiff_t>(m), aug[r].end());
  return hermiteRows(kernel);
}

RatMat toRational(const IntMat& m) {
  RatMat r;
  for (const auto& row : m) {
    RatVec v;
    for (auto x : row) v.emplace_back(static_cast<long>(x));
    r.push_back(std::move(v));
  }
  return r;
}

std::size_t rankOf(const RatMat& in) {
  RatMat m = in;
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

std::size_t rankOf(const IntMat& m) { return rankOf(toRational(m)); }

RatMat inverse(RatMat m) {
  const std::size_t n = m.size();
  RatMat inv(n, RatVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw MathError("singular matrix");
    std::swap(m[c], m[p]);
    std::swap(inv[c], inv[p]);
    Rational f = 1 / m[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] *= f;
      inv[c][k] *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational g = m[i][c];
      for (std::size_t k = 0; k < n; ++k) {
        m[i][k] -= g * m[c][k];
        inv[i][k] -= g * inv[c][k];
      }
    }
  }
  return inv;
}

Rational determinant(RatMat m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[c], m[p]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return det;
}

std::optional<RatVec> solveRow(const RatMat& m, const RatVec& b) {
  // x M = b  <=>  M^T x^T = b^T; eliminate on the augmented transpose.
  const std::size_t rows = m.size();
  const std::size_t cols = b.size();
  RatMat a(cols, RatVec(rows + 1, Rational(0)));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) a[j][i] = m[i][j];
    a[j][rows] = b[j];
  }
  std::vector<std::size_t> pivotCol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < rows && r < cols; ++c) {
    std::size_t p = r;
    while (p < cols && a[p][c] == 0) ++p;
    if (p == cols) continue;
    std::swap(a[r], a[p]);
    Rational f = 1 / a[r][c];
    for (auto& x : a[r]) x *= f;
    for (std::size_t i = 0; i < cols; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational g = a[i][c];
      for (std::size_t k = 0; k <= rows; ++k) a[i][k] -= g * a[r][k];
    }
    pivotCol.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < cols; ++i)
    if (a[i][rows] != 0) return std::nullopt;
  if (r < rows) throw MathError("solveRow: matrix rows are dependent");
  RatVec x(rows, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivotCol[i]] = a[i][rows];
  return x;
}

IntVec clearDenominators(const RatVec& v) {
  algebra::Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVec r;
  for (const auto& x : v) {
    algebra::Integer z = x.get_num() * (l / x.get_den());
    r.push_back(toInt64(z));
  }
  return primitive(r);
}

}  // namespace eqhirz::lattice
