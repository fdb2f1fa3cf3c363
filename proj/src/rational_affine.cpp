//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//

#include "es4/rational_affine.hpp"

#include <cstddef>
#include <limits>
#include <stdexcept>

namespace es4 {

namespace {

// Forward elimination to row echelon form, returning the row-swap parity.
// Operates in place; used by both the solver and the determinant.
int eliminate(RatMatrix& a, std::vector<Rational>* rhs) {
  const std::size_t n = a.size();
  int parity = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0)
      ++pivot;
    if (pivot == n)
      throw std::domain_error("eliminate: singular matrix");
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      if (rhs)
        std::swap((*rhs)[pivot], (*rhs)[col]);
      parity = -parity;
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0)
        continue;
      const Rational f = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j)
        a[row][j] -= f * a[col][j];
      if (rhs)
        (*rhs)[row] -= f * (*rhs)[col];
    }
  }
  return parity;
}

} // namespace

std::vector<Rational> solve_linear(RatMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n)
    throw std::invalid_argument("solve_linear: dimension mismatch");
  for (const auto& row : a)
    if (row.size() != n)
      throw std::invalid_argument("solve_linear: matrix not square");
  eliminate(a, &b);
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t j = i + 1; j < n; ++j)
      s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

RatMatrix invert(const RatMatrix& a) {
  const std::size_t n = a.size();
  RatMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<Rational> e(n);
    e[col] = 1;
    std::vector<Rational> x = solve_linear(a, std::move(e));
    for (std::size_t row = 0; row < n; ++row)
      inv[row][col] = x[row];
  }
  return inv;
}

Rational determinant(RatMatrix a) {
  const std::size_t n = a.size();
  int parity;
  try {
    parity = eliminate(a, nullptr);
  } catch (const std::domain_error&) {
    return 0;
  }
  Rational det = parity;
  for (std::size_t i = 0; i < n; ++i)
    det *= a[i][i];
  return det;
}

Int rational_to_int_exact(const Rational& r) {
  if (boost::multiprecision::denominator(r) != 1)
    throw std::domain_error("rational_to_int_exact: not an integer");
  const auto num = boost::multiprecision::numerator(r);
  if (num < std::numeric_limits<Int>::min() || num > std::numeric_limits<Int>::max())
    throw std::domain_error("rational_to_int_exact: out of Int range");
  return static_cast<Int>(num);
}

Int IntAffine::eval(std::span<const Int> p) const {
  if (p.size() != coeffs.size())
    throw std::invalid_argument("IntAffine::eval: dimension mismatch");
  Int s = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    s += coeffs[i] * p[i];
  return s;
}

} // namespace es4
