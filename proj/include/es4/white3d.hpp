//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
//
// The classified empty 3-simplices T(p,q) = conv{(0,0,0), (1,0,0), (0,0,1),
// (p,q,1)} with gcd(p,q) = 1, reused as an independent oracle for the torus
// machinery in dimension 3: every T(p,q) is empty of width 1, and T(p,q) is
// equivalent to T(p',q) exactly when p' = +-p^{+-1} mod q.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "es4/residue_tuple.hpp"

#include <vector>

namespace es4 {

/// The generator quadruple of T(p,q) mod q in vertex slot order
/// ((0,0,0), (1,0,0), (0,0,1), (p,q,1)): the closed form
/// (p, q-p, q-1, 1) mod q. Throws on gcd(p,q) != 1 or q < 1.
ResidueTuple white_tuple(Int p, Int q);

/// Same quadruple derived from scratch: exact barycentric coordinates of the
/// lattice point (0,1,0) with respect to T(p,q), scaled by q. Ships as the
/// derivation oracle for the closed form above.
ResidueTuple white_tuple_derived(Int p, Int q);

/// { canonical_form(white_tuple(p,q)) : gcd(p,q) = 1 }, deduplicated.
std::vector<CanonicalTuple> white_classes(Int q);

/// Number of orbits of the units mod q under p -> +-p^{+-1}, computed by
/// direct orbit enumeration. The expected cardinality of white_classes(q).
Int white_orbit_count(Int q);

/// True iff for every unit p: white_tuple(p,q) is empty and has width 1, and
/// |white_classes(q)| = white_orbit_count(q).
bool crosscheck_white(Int q);

} // namespace es4
