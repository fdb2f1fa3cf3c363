//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
//
// Independent brute-force geometry over explicit integer coordinates. One
// exact rational 5x5 solve per simplex yields integer barycentric functionals
// g_i with sum D, so per-point membership is pure integer arithmetic. Built
// to be obviously correct at small determinants, not fast.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "es4/simplex.hpp"

#include <array>
#include <vector>

namespace es4 {

using LatticePoint = std::array<Int, 4>;

/// The five D-scaled barycentric functionals of conv(v, e1..e4) in slot order
/// (v, e1, e2, e3, e4): g_i(p) = D * beta_i(p), integer coefficients,
/// sum_i g_i = D identically, g_i >= 0 on exactly the simplex.
/// Throws std::invalid_argument on a degenerate simplex (D < 1).
std::array<IntAffine, 5> barycentric_functionals(const VRepSimplex& s);

/// All non-vertex lattice points of the simplex, found by scanning the true
/// per-axis bounding box of the five vertices with exact membership.
std::vector<LatticePoint> oracle_lattice_points(const VRepSimplex& s);

bool oracle_is_empty(const VRepSimplex& s);

/// Min over nonzero integer functionals with coefficients in [-radius,
/// radius]^4 of (max - min) over the five vertices: an upper bound on the
/// lattice width, exact whenever an optimal functional fits in the radius.
Int oracle_width_upper(const VRepSimplex& s, Int radius = 6);

/// The quintuple class of a non-vertex lattice point: its D-scaled
/// barycentric vector reduced mod D, an element of the discrete torus.
ResidueTuple oracle_point_class(const VRepSimplex& s, const LatticePoint& p);

} // namespace es4
