//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//

#include "es4/simplex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace es4 {

VRepSimplex make_vrep(std::array<Int, 4> v) {
  VRepSimplex s{v};
  if (s.determinant() < 1)
    throw std::invalid_argument("make_vrep: determinant must be >= 1");
  return s;
}

ResidueTuple tuple_of_vrep(const VRepSimplex& s) {
  const Int D = s.determinant();
  if (D < 1)
    throw std::invalid_argument("tuple_of_vrep: determinant must be >= 1");
  return ResidueTuple::make(D, {-1, s.v[0], s.v[1], s.v[2], s.v[3]});
}

VRepSimplex vrep_of_tuple(const ResidueTuple& u) {
  if (!is_primitive(u))
    throw std::invalid_argument("vrep_of_tuple: tuple must be primitive");
  if (u.size() != 5)
    throw std::invalid_argument("vrep_of_tuple: need a quintuple");
  const Int D = u.modulus();
  std::size_t slot = u.size();
  for (std::size_t i = 0; i < u.size(); ++i)
    if (std::gcd(u.entries()[i], D) == 1) {
      slot = i;
      break;
    }
  if (slot == u.size())
    throw std::domain_error("vrep_of_tuple: no unimodular facet");

  // Scale so the chosen slot becomes D-1 (= -1), then move it to front.
  const Int c = D == 1 ? 0 : mod_reduce(-mod_inverse(u.entries()[slot], D), D);
  std::array<Int, 4> v{};
  std::size_t j = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i == slot)
      continue;
    v[j++] = mod_reduce(c * u.entries()[i], D);
  }

  // Lift residues to integers with exact sum D+1; adjusting the largest entry
  // by multiples of D reproduces the usual negative-coordinate
  // representatives while keeping the quintuple class fixed.
  Int sum = v[0] + v[1] + v[2] + v[3];
  while (sum != D + 1) {
    auto it = std::max_element(v.begin(), v.end());
    if (sum > D + 1) {
      *it -= D;
      sum -= D;
    } else {
      *it += D;
      sum += D;
    }
  }
  return VRepSimplex{v};
}

std::vector<Int> lattice_classes_in_simplex(const ResidueTuple& u) {
  if (!is_primitive(u))
    throw std::invalid_argument("lattice_classes_in_simplex: tuple must be primitive");
  const Int D = u.modulus();
  const auto& e = u.entries();
  std::vector<Int> rep(e.begin(), e.end());
  std::vector<Int> hits;
  for (Int k = 1; k < D; ++k) {
    Int sum = 0;
    if (k > 1)
      for (std::size_t i = 0; i < rep.size(); ++i) {
        rep[i] += e[i];
        if (rep[i] >= D)
          rep[i] -= D;
        sum += rep[i];
      }
    else
      sum = std::accumulate(rep.begin(), rep.end(), Int{0});
    if (sum == D)
      hits.push_back(k);
  }
  return hits;
}

bool is_empty(const ResidueTuple& u) { return first_nonempty_witness(u) == 0; }

Int first_nonempty_witness(const ResidueTuple& u) {
  if (!is_primitive(u))
    throw std::invalid_argument("is_empty: tuple must be primitive");
  const Int D = u.modulus();
  const auto& e = u.entries();
  std::vector<Int> rep(e.begin(), e.end());
  Int sum = std::accumulate(rep.begin(), rep.end(), Int{0});
  for (Int k = 1; k < D; ++k) {
    if (k > 1) {
      sum = 0;
      for (std::size_t i = 0; i < rep.size(); ++i) {
        rep[i] += e[i];
        if (rep[i] >= D)
          rep[i] -= D;
        sum += rep[i];
      }
    }
    if (sum == D)
      return k;
  }
  return 0;
}

bool is_empty_halfloop(const ResidueTuple& u) {
  if (!is_primitive(u))
    throw std::invalid_argument("is_empty_halfloop: tuple must be primitive");
  const Int D = u.modulus();
  const auto& e = u.entries();
  std::vector<Int> rep(e.begin(), e.end());
  Int sum = std::accumulate(rep.begin(), rep.end(), Int{0});
  for (Int k = 1; 2 * k <= D; ++k) {
    if (k > 1) {
      sum = 0;
      for (std::size_t i = 0; i < rep.size(); ++i) {
        rep[i] += e[i];
        if (rep[i] >= D)
          rep[i] -= D;
        sum += rep[i];
      }
    }
    if (sum == D)
      return false;
    // The (D-k)-representative is the entrywise complement on nonzero slots,
    // so its sum is z*D - sum with z the number of nonzero entries.
    if (2 * k < D) {
      Int z = 0;
      for (Int r : rep)
        if (r != 0)
          ++z;
      if (z * D - sum == D)
        return false;
    }
  }
  return true;
}

WidthResult width(const ResidueTuple& u, Int cap) {
  if (!is_primitive(u))
    throw std::invalid_argument("width: tuple must be primitive");
  if (cap < 1)
    throw std::invalid_argument("width: cap must be >= 1");
  const Int D = u.modulus();
  const auto& e = u.entries();
  const std::size_t n = e.size();
  std::vector<Int> lambda(n, 0);
  for (Int k = 1; k <= cap; ++k) {
    // Odometer over {0..k}^n; keep vectors attaining min 0 and max k.
    std::fill(lambda.begin(), lambda.end(), 0);
    while (true) {
      Int lo = lambda[0], hi = lambda[0];
      for (std::size_t i = 1; i < n; ++i) {
        lo = std::min(lo, lambda[i]);
        hi = std::max(hi, lambda[i]);
      }
      if (lo == 0 && hi == k) {
        Int dot = 0;
        for (std::size_t i = 0; i < n; ++i)
          dot += lambda[i] * e[i];
        if (dot % D == 0)
          return WidthResult{k, false, lambda};
      }
      std::size_t pos = 0;
      while (pos < n && lambda[pos] == k)
        lambda[pos++] = 0;
      if (pos == n)
        break;
      ++lambda[pos];
    }
  }
  return WidthResult{0, true, {}};
}

std::vector<Int> facet_volumes(const ResidueTuple& u) {
  if (!is_primitive(u))
    throw std::invalid_argument("facet_volumes: tuple must be primitive");
  std::vector<Int> f(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    f[i] = std::gcd(u.entries()[i], u.modulus());
  return f;
}

IntAffine functional_from_certificate(const VRepSimplex& s, std::span<const Int> lambda) {
  if (lambda.size() != 5)
    throw std::invalid_argument("functional_from_certificate: need 5 coefficients");
  const Int D = s.determinant();
  const ResidueTuple u = tuple_of_vrep(s);
  Int dot = 0, lo = lambda[0], hi = lambda[0];
  for (std::size_t i = 0; i < 5; ++i) {
    dot += lambda[i] * u.entries()[i];
    lo = std::min(lo, lambda[i]);
    hi = std::max(hi, lambda[i]);
  }
  if (lo == hi)
    throw std::domain_error("functional_from_certificate: constant certificate");
  if (mod_reduce(dot, D) != 0)
    throw std::domain_error("functional_from_certificate: congruence fails");

  Int num = -lambda[0];
  for (int j = 0; j < 4; ++j)
    num += lambda[j + 1] * s.v[j];
  if (num % D != 0)
    throw std::domain_error("functional_from_certificate: non-integral functional");
  const Int c = num / D;
  IntAffine f{c, {lambda[1] - c, lambda[2] - c, lambda[3] - c, lambda[4] - c}};

  // Vertex values are lambda itself, so the span must match by construction.
  if (f.eval(s.v) != lambda[0])
    throw std::domain_error("functional_from_certificate: vertex value mismatch");
  for (int j = 0; j < 4; ++j) {
    std::array<Int, 4> ej{};
    ej[j] = 1;
    if (f.eval(ej) != lambda[j + 1])
      throw std::domain_error("functional_from_certificate: vertex value mismatch");
  }
  return f;
}

} // namespace es4
