//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//

#include "es4/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace es4 {

Int mod_reduce(Int x, Int m) {
  if (m < 1) throw std::domain_error("mod_reduce: modulus must be >= 1");
  Int r = x % m;
  return r < 0 ? r + m : r;
}

Int mod_inverse(Int a, Int m) {
  if (m < 1) throw std::domain_error("mod_inverse: modulus must be >= 1");
  if (m == 1) return 0;
  // extended Euclid on (a mod m, m)
  Int r0 = mod_reduce(a, m), r1 = m;
  Int s0 = 1, s1 = 0;
  while (r1 != 0) {
    Int q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) throw std::domain_error("mod_inverse: argument not a unit");
  return mod_reduce(s0, m);
}

std::vector<Int> units_mod(Int m) {
  if (m < 1) throw std::domain_error("units_mod: modulus must be >= 1");
  if (m == 1) return {0};
  std::vector<Int> out;
  for (Int c = 1; c < m; ++c)
    if (std::gcd(c, m) == 1) out.push_back(c);
  return out;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n < 1) throw std::domain_error("factorize: argument must be >= 1");
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int distinct_prime_factors(Int n) { return static_cast<int>(factorize(n).size()); }

bool is_prime_power(Int n) { return factorize(n).size() <= 1; }

} // namespace es4
