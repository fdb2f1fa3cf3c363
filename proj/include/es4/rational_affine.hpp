//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
//
// Small dense exact-rational linear algebra and integer affine functionals.
// Every geometric decision in this project reduces to one small rational
// solve per simplex followed by integer arithmetic per lattice point, so no
// floating-point tolerance is ever involved.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "es4/numtheory.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <vector>

namespace es4 {

using Rational = boost::multiprecision::cpp_rational;
using RatMatrix = std::vector<std::vector<Rational>>;

/// Solves A x = b by Gaussian elimination with exact pivoting.
/// Throws std::domain_error if A is singular.
std::vector<Rational> solve_linear(RatMatrix a, std::vector<Rational> b);

/// Exact inverse of a square matrix. Throws std::domain_error if singular.
RatMatrix invert(const RatMatrix& a);

/// Exact determinant.
Rational determinant(RatMatrix a);

/// Narrows an integer-valued rational to Int. Throws std::domain_error if the
/// value is not an integer or does not fit.
Int rational_to_int_exact(const Rational& r);

/// Affine functional p -> constant + coeffs . p with integer coefficients.
struct IntAffine {
  Int constant = 0;
  std::vector<Int> coeffs;

  Int eval(std::span<const Int> p) const;

  friend bool operator==(const IntAffine&, const IntAffine&) = default;
};

} // namespace es4
