//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace es4 {

using Int = std::int64_t;

/// Least nonnegative residue of x modulo m (m >= 1). Works for negative x.
Int mod_reduce(Int x, Int m);

/// Inverse of a modulo m. Throws std::domain_error if gcd(a, m) != 1.
Int mod_inverse(Int a, Int m);

/// The units of Z_m in increasing order. By convention units_mod(1) = {0},
/// so multiplication by the sole unit is the identity on the zero tuple.
std::vector<Int> units_mod(Int m);

/// Prime factorization (p, multiplicity) by trial division, p ascending.
std::vector<std::pair<Int, int>> factorize(Int n);

/// Number of distinct prime factors; 0 for n = 1.
int distinct_prime_factors(Int n);

/// True for n = 1 and n = p^k.
bool is_prime_power(Int n);

} // namespace es4
