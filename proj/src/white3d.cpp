//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//

#include "es4/white3d.hpp"

#include "es4/rational_affine.hpp"
#include "es4/simplex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace es4 {

namespace {

void check_params(Int p, Int q) {
  if (q < 1)
    throw std::invalid_argument("white_tuple: q must be >= 1");
  if (std::gcd(mod_reduce(p, q), q) != 1 && q > 1)
    throw std::invalid_argument("white_tuple: gcd(p, q) must be 1");
}

} // namespace

ResidueTuple white_tuple(Int p, Int q) {
  check_params(p, q);
  return ResidueTuple::make(q, {p, q - p, q - 1, 1});
}

ResidueTuple white_tuple_derived(Int p, Int q) {
  check_params(p, q);
  // Homogeneous vertex matrix of T(p,q), columns in slot order
  // ((0,0,0), (1,0,0), (0,0,1), (p,q,1)); |det| = q.
  RatMatrix a(4, std::vector<Rational>(4, 0));
  a[0] = {1, 1, 1, 1};
  a[1] = {0, 1, 0, p};
  a[2] = {0, 0, 0, q};
  a[3] = {0, 0, 1, 1};
  const std::vector<Rational> beta = solve_linear(std::move(a), {1, 0, 1, 0});
  std::vector<Int> e(4);
  for (int i = 0; i < 4; ++i)
    e[i] = mod_reduce(rational_to_int_exact(q * beta[i]), q);
  return ResidueTuple::make(q, e);
}

std::vector<CanonicalTuple> white_classes(Int q) {
  std::set<CanonicalTuple> out;
  for (Int p : units_mod(q))
    out.insert(canonical_form(white_tuple(q == 1 ? 0 : p, q)));
  return {out.begin(), out.end()};
}

Int white_orbit_count(Int q) {
  const std::vector<Int> units = units_mod(q);
  std::set<Int> seen;
  Int count = 0;
  for (Int p : units) {
    if (seen.contains(p))
      continue;
    ++count;
    if (q == 1) {
      seen.insert(p);
      continue;
    }
    const Int inv = mod_inverse(p, q);
    for (Int r : {p, mod_reduce(-p, q), inv, mod_reduce(-inv, q)})
      seen.insert(r);
  }
  return count;
}

bool crosscheck_white(Int q) {
  for (Int p : units_mod(q)) {
    const ResidueTuple t = white_tuple(q == 1 ? 0 : p, q);
    if (t != white_tuple_derived(q == 1 ? 0 : p, q))
      return false;
    if (!is_empty(t))
      return false;
    const WidthResult w = width(t);
    if (w.capped || w.width != 1)
      return false;
  }
  return static_cast<Int>(white_classes(q).size()) == white_orbit_count(q);
}

} // namespace es4
