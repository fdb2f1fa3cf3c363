//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
//
// Geometric semantics of a residue tuple: the simplex Delta(v) =
// conv(e1, e2, e3, e4, v) of determinant D = v1+v2+v3+v4 - 1, its emptiness,
// its lattice width with certificates, and its facet volumes. All tests run
// through the quintuple congruence; slot 0 of a quintuple corresponds to the
// vertex v and slots 1..4 to the unit vertices e1..e4.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "es4/rational_affine.hpp"
#include "es4/residue_tuple.hpp"

#include <array>
#include <vector>

namespace es4 {

/// The simplex Delta(v) = conv(e1, e2, e3, e4, v). Entries of v may be
/// negative or exceed D; only the determinant constraint is invariant.
struct VRepSimplex {
  std::array<Int, 4> v;

  Int determinant() const { return v[0] + v[1] + v[2] + v[3] - 1; }

  friend bool operator==(const VRepSimplex&, const VRepSimplex&) = default;
};

/// Validates D >= 1. Throws std::invalid_argument on a degenerate vector.
VRepSimplex make_vrep(std::array<Int, 4> v);

/// The quintuple (-1, v1, v2, v3, v4) mod D. Always primitive: the slot-0
/// entry D-1 is a unit mod D.
ResidueTuple tuple_of_vrep(const VRepSimplex& s);

/// Inverse direction: scale u so that some unit entry becomes D-1, move it to
/// slot 0, and lift the rest to integers v with v1+..+v4 = D+1 exactly (adding
/// or subtracting D from the largest entry as needed, which can go negative).
/// The returned simplex is equivalent to the input tuple's simplex. Throws
/// std::domain_error("no unimodular facet") when no entry is a unit mod D.
VRepSimplex vrep_of_tuple(const ResidueTuple& u);

/// All k in 1..D-1 whose representative k*u (least nonnegative residues) has
/// entry sum exactly D. These classes are in bijection with the non-vertex
/// lattice points of the simplex.
std::vector<Int> lattice_classes_in_simplex(const ResidueTuple& u);

/// True iff no k qualifies; early exit on the first hit.
bool is_empty(const ResidueTuple& u);

/// Same verdict using the k <-> D-k symmetry to halve the loop: the
/// representatives of k*u and (D-k)*u have entry sums adding to z*D, with z
/// the number of nonzero entries of the k-representative. Kept separate so
/// the equivalence with is_empty stays testable.
bool is_empty_halfloop(const ResidueTuple& u);

/// If nonempty, the smallest witness k; otherwise 0.
Int first_nonempty_witness(const ResidueTuple& u);

constexpr Int kDefaultWidthCap = 5;

struct WidthResult {
  Int width = 0;               // meaningful only when capped is false
  bool capped = false;         // true: width exceeds the cap
  std::vector<Int> certificate; // lambda with min 0, max = width, sum lambda_i u_i = 0 mod D
};

/// Smallest k in 1..cap admitting lambda in {0..k}^{d+1} with min 0, max k and
/// sum lambda_i u_i = 0 mod D, else the capped marker. Constant lambda is
/// excluded by the min-0/max-k normalization: the congruence is invariant
/// under shifting lambda because the entries sum to 0 mod D.
WidthResult width(const ResidueTuple& u, Int cap = kDefaultWidthCap);

/// Facet volumes D_i = gcd(u_i, D); the facet opposite vertex i is unimodular
/// iff D_i = 1.
std::vector<Int> facet_volumes(const ResidueTuple& u);

/// The unique affine functional f on Z^4 with f(v) = lambda_0 and
/// f(e_j) = lambda_j. Closed form: f = a.x + c with c = (sum lambda_j v_j -
/// lambda_0) / D and a_j = lambda_j - c. Throws std::domain_error if lambda is
/// not a valid certificate for tuple_of_vrep(s) or if c is not integral; the
/// vertex values of the result span exactly {min lambda .. max lambda}.
IntAffine functional_from_certificate(const VRepSimplex& s, std::span<const Int> lambda);

} // namespace es4
