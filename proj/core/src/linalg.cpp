#include "dpz/linalg.hpp"

#include <utility>

#include "dpz/errors.hpp"

namespace dpz {

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    std::vector<Rational> r;
    r.reserve(row.size());
    for (auto v : row) r.emplace_back(v);
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a,
                                           const std::vector<Rational>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DomainError("solve: dimension mismatch");
  RationalMatrix m = a;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DomainError("solve: matrix is not square");
    m[i].push_back(b[i]);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    const Rational inv = 1 / m[col][col];
    for (std::size_t k = col; k <= n; ++k) m[col][k] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col];
      for (std::size_t k = col; k <= n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

std::size_t rank(RationalMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t row = r + 1; row < rows; ++row) {
      if (m[row][col] == 0) continue;
      const Rational f = m[row][col] / m[r][col];
      for (std::size_t k = col; k < cols; ++k) m[row][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      const Rational f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return det;
}

Rational fractional_part(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  BigInt rem = num % den;
  if (rem < 0) rem += den;
  return Rational(rem, den);
}

bool is_integer(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

std::string to_string(const Rational& x) {
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

}  // namespace dpz
