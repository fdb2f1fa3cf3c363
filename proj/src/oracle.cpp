//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//

#include "es4/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace es4 {

namespace {

// Homogeneous vertex matrix in slot order (v, e1..e4): column j is vertex j,
// row 0 is the affine row of ones. |det| = D.
RatMatrix vertex_matrix(const VRepSimplex& s) {
  RatMatrix a(5, std::vector<Rational>(5, 0));
  for (int j = 0; j < 5; ++j)
    a[0][j] = 1;
  for (int i = 0; i < 4; ++i)
    a[i + 1][0] = s.v[i];
  for (int j = 1; j < 5; ++j)
    a[j][j] = 1;
  return a;
}

} // namespace

std::array<IntAffine, 5> barycentric_functionals(const VRepSimplex& s) {
  const Int D = s.determinant();
  if (D < 1)
    throw std::invalid_argument("barycentric_functionals: degenerate simplex");
  const RatMatrix inv = invert(vertex_matrix(s));
  // beta(p) = inv * (1, p); scaling by D clears every denominator because
  // the vertex matrix has determinant +-D.
  std::array<IntAffine, 5> g;
  Int colsum_const = 0;
  for (int i = 0; i < 5; ++i) {
    g[i].constant = rational_to_int_exact(D * inv[i][0]);
    g[i].coeffs.resize(4);
    for (int j = 0; j < 4; ++j)
      g[i].coeffs[j] = rational_to_int_exact(D * inv[i][j + 1]);
    colsum_const += g[i].constant;
  }
  if (colsum_const != D)
    throw std::logic_error("barycentric_functionals: partition of unity broken");
  return g;
}

std::vector<LatticePoint> oracle_lattice_points(const VRepSimplex& s) {
  const Int D = s.determinant();
  if (D < 1)
    throw std::invalid_argument("oracle_lattice_points: degenerate simplex");
  const auto g = barycentric_functionals(s);

  std::array<Int, 4> lo{}, hi{};
  for (int i = 0; i < 4; ++i) {
    lo[i] = std::min<Int>(0, s.v[i]);
    hi[i] = std::max<Int>(1, s.v[i]);
  }

  std::array<LatticePoint, 5> vertices{};
  vertices[0] = s.v;
  for (int j = 1; j < 5; ++j)
    vertices[j][j - 1] = 1;

  std::vector<LatticePoint> out;
  LatticePoint p;
  for (p[0] = lo[0]; p[0] <= hi[0]; ++p[0])
    for (p[1] = lo[1]; p[1] <= hi[1]; ++p[1])
      for (p[2] = lo[2]; p[2] <= hi[2]; ++p[2])
        for (p[3] = lo[3]; p[3] <= hi[3]; ++p[3]) {
          bool inside = true;
          for (int i = 0; i < 5 && inside; ++i)
            inside = g[i].eval(p) >= 0;
          if (!inside)
            continue;
          if (std::find(vertices.begin(), vertices.end(), p) != vertices.end())
            continue;
          out.push_back(p);
        }
  return out;
}

bool oracle_is_empty(const VRepSimplex& s) { return oracle_lattice_points(s).empty(); }

Int oracle_width_upper(const VRepSimplex& s, Int radius) {
  if (radius < 1)
    throw std::invalid_argument("oracle_width_upper: radius must be >= 1");
  std::array<LatticePoint, 5> vertices{};
  vertices[0] = s.v;
  for (int j = 1; j < 5; ++j)
    vertices[j][j - 1] = 1;

  Int best = std::numeric_limits<Int>::max();
  std::array<Int, 4> a;
  for (a[0] = -radius; a[0] <= radius; ++a[0])
    for (a[1] = -radius; a[1] <= radius; ++a[1])
      for (a[2] = -radius; a[2] <= radius; ++a[2])
        for (a[3] = -radius; a[3] <= radius; ++a[3]) {
          if (a == std::array<Int, 4>{0, 0, 0, 0})
            continue;
          Int lo = std::numeric_limits<Int>::max();
          Int hi = std::numeric_limits<Int>::min();
          for (const auto& w : vertices) {
            Int val = 0;
            for (int i = 0; i < 4; ++i)
              val += a[i] * w[i];
            lo = std::min(lo, val);
            hi = std::max(hi, val);
          }
          best = std::min(best, hi - lo);
        }
  return best;
}

ResidueTuple oracle_point_class(const VRepSimplex& s, const LatticePoint& p) {
  const Int D = s.determinant();
  const auto g = barycentric_functionals(s);
  std::vector<Int> e(5);
  for (int i = 0; i < 5; ++i)
    e[i] = mod_reduce(g[i].eval(p), D);
  return ResidueTuple::make(D, e);
}

} // namespace es4
