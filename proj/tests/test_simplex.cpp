//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//

#include "es4/simplex.hpp"

#include "doctest.h"

#include <numeric>
#include <random>
#include <stdexcept>

using namespace es4;

TEST_CASE("tuple_of_vrep") {
  const ResidueTuple t101 = tuple_of_vrep(VRepSimplex{{6, 14, 17, 65}});
  CHECK(t101.modulus() == 101);
  CHECK(t101.entries() == std::vector<Int>{100, 6, 14, 17, 65});

  const ResidueTuple t41 = tuple_of_vrep(VRepSimplex{{4, 23, 25, -10}});
  CHECK(t41.modulus() == 41);
  CHECK(t41.entries() == std::vector<Int>{40, 4, 23, 25, 31});

  const ResidueTuple t3 = tuple_of_vrep(VRepSimplex{{1, 1, 1, 1}});
  CHECK(t3.modulus() == 3);
  CHECK(t3.entries() == std::vector<Int>{2, 1, 1, 1, 1});
  CHECK(is_primitive(t3));

  CHECK_THROWS_AS(make_vrep({0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(tuple_of_vrep(VRepSimplex{{1, 0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("vrep_of_tuple picks a unit slot and lifts to sum D+1") {
  // Slot 0 already holds the unit -1; identity on the Table-1 layout.
  const VRepSimplex s101 = vrep_of_tuple(ResidueTuple::make(101, {100, 6, 14, 17, 65}));
  CHECK(s101.v == std::array<Int, 4>{6, 14, 17, 65});

  // All entries are units; scaling by -1 then lifting goes negative.
  const VRepSimplex s5 = vrep_of_tuple(ResidueTuple::make(5, {1, 1, 1, 1, 1}));
  CHECK(s5.determinant() == 5);
  CHECK(s5.v == std::array<Int, 4>{-1, -1, 4, 4});

  const VRepSimplex s1 = vrep_of_tuple(ResidueTuple::make(1, {0, 0, 0, 0, 0}));
  CHECK(s1.determinant() == 1);

  CHECK_THROWS_AS(vrep_of_tuple(ResidueTuple::make(6, {2, 3, 2, 3, 2})),
                  std::domain_error);
}

TEST_CASE("vrep round-trip preserves the equivalence class") {
  std::mt19937_64 rng(41);
  int done = 0;
  while (done < 30) {
    const Int d = 2 + static_cast<Int>(rng() % 80);
    std::vector<Int> e(5);
    Int sum = 0;
    for (int i = 0; i < 4; ++i) {
      e[i] = static_cast<Int>(rng() % d);
      sum += e[i];
    }
    e[4] = mod_reduce(-sum, d);
    const ResidueTuple u = ResidueTuple::make(d, e);
    const bool has_unit = [&] {
      for (Int x : u.entries())
        if (std::gcd(x, d) == 1)
          return true;
      return false;
    }();
    if (!is_primitive(u) || !has_unit)
      continue;
    const VRepSimplex s = vrep_of_tuple(u);
    CHECK(s.determinant() == d);
    CHECK(equivalent(tuple_of_vrep(s), u));
    ++done;
  }
}

TEST_CASE("lattice_classes_in_simplex") {
  CHECK(lattice_classes_in_simplex(ResidueTuple::make(2, {1, 1, 1, 1})).empty());
  CHECK(lattice_classes_in_simplex(ResidueTuple::make(2, {1, 1, 0, 0, 0})) ==
        std::vector<Int>{1});
  CHECK(lattice_classes_in_simplex(ResidueTuple::make(1, {0, 0, 0, 0, 0})).empty());

  // Nonempty tuple with a known witness: k=3 scales (5,1,2,4,0) to reps
  // (3,3,0,0,0) of sum 6.
  const std::vector<Int> ks =
      lattice_classes_in_simplex(ResidueTuple::make(6, {5, 1, 2, 4, 0}));
  CHECK_FALSE(ks.empty());
  CHECK(ks.front() == 3);
}

TEST_CASE("is_empty frozen verdicts and halfloop equivalence") {
  CHECK(is_empty(ResidueTuple::make(101, {100, 6, 14, 17, 65})));
  CHECK(is_empty(ResidueTuple::make(41, {40, 4, 23, 25, 31})));
  CHECK_FALSE(is_empty(ResidueTuple::make(2, {1, 1, 0, 0, 0})));
  CHECK(first_nonempty_witness(ResidueTuple::make(6, {5, 1, 2, 4, 0})) == 3);

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const Int d = 1 + static_cast<Int>(rng() % 90);
    std::vector<Int> e(5);
    Int sum = 0;
    for (int i = 0; i < 4; ++i) {
      e[i] = static_cast<Int>(rng() % d);
      sum += e[i];
    }
    e[4] = mod_reduce(-sum, d);
    const ResidueTuple u = ResidueTuple::make(d, e);
    if (!is_primitive(u))
      continue;
    CHECK(is_empty(u) == is_empty_halfloop(u));
  }
}

TEST_CASE("is_empty is an orbit invariant") {
  const ResidueTuple t = ResidueTuple::make(41, {40, 4, 23, 25, 31});
  for (const ResidueTuple& x : orbit(t))
    CHECK(is_empty(x));
  const ResidueTuple n = ResidueTuple::make(6, {5, 1, 2, 4, 0});
  for (const ResidueTuple& x : orbit(n))
    CHECK_FALSE(is_empty(x));
}

TEST_CASE("width with certificates") {
  const ResidueTuple t101 = ResidueTuple::make(101, {100, 6, 14, 17, 65});
  const WidthResult w101 = width(t101);
  REQUIRE_FALSE(w101.capped);
  CHECK(w101.width == 4);

  const ResidueTuple t41 = ResidueTuple::make(41, {40, 4, 23, 25, 31});
  const WidthResult w41 = width(t41);
  REQUIRE_FALSE(w41.capped);
  CHECK(w41.width == 3);

  for (const auto& [t, w] : {std::pair{t101, w101}, std::pair{t41, w41}}) {
    Int dot = 0, lo = w.certificate[0], hi = w.certificate[0];
    for (std::size_t i = 0; i < 5; ++i) {
      dot += w.certificate[i] * t.entries()[i];
      lo = std::min(lo, w.certificate[i]);
      hi = std::max(hi, w.certificate[i]);
    }
    CHECK(mod_reduce(dot, t.modulus()) == 0);
    CHECK(lo == 0);
    CHECK(hi == w.width);
  }

  // Two complementary entries force width 1.
  const WidthResult w1 = width(ResidueTuple::make(9, {1, 8, 0, 0, 0}));
  CHECK(w1.width == 1);

  // The cap marker fires when the cap sits below the true width.
  const WidthResult capped = width(t41, 2);
  CHECK(capped.capped);
  CHECK(capped.certificate.empty());

  // Orbit invariance of the width value.
  for (const ResidueTuple& x : orbit(t41))
    CHECK(width(x).width == 3);
}

TEST_CASE("width of the unimodular class") {
  const WidthResult w = width(ResidueTuple::make(1, {0, 0, 0, 0, 0}));
  CHECK_FALSE(w.capped);
  CHECK(w.width == 1);
}

TEST_CASE("facet_volumes") {
  CHECK(facet_volumes(ResidueTuple::make(179, {178, 3, 5, 79, 93})) ==
        std::vector<Int>{1, 1, 1, 1, 1});
  const ResidueTuple t6 = ResidueTuple::make(6, {5, 1, 2, 4, 0});
  CHECK(facet_volumes(t6) == std::vector<Int>{1, 1, 2, 2, 6});
  CHECK_FALSE(is_empty(t6)); // pairwise coprimality fails, so it cannot be empty
  CHECK(facet_volumes(ResidueTuple::make(1, {0, 0, 0, 0, 0})) ==
        std::vector<Int>{1, 1, 1, 1, 1});
}

TEST_CASE("functional_from_certificate closed form vs exact interpolation") {
  const VRepSimplex s{{6, 14, 17, 65}};
  const WidthResult w = width(tuple_of_vrep(s));
  REQUIRE(w.width == 4);
  const IntAffine f = functional_from_certificate(s, w.certificate);

  // Dual route: interpolate the same functional with the exact rational
  // solver; unknowns (c, a1..a4), one equation per vertex.
  RatMatrix m(5, std::vector<Rational>(5, 0));
  std::vector<Rational> rhs(5);
  m[0][0] = 1;
  for (int j = 0; j < 4; ++j)
    m[0][j + 1] = s.v[j];
  rhs[0] = w.certificate[0];
  for (int j = 0; j < 4; ++j) {
    m[j + 1][0] = 1;
    m[j + 1][j + 1] = 1;
    rhs[j + 1] = w.certificate[j + 1];
  }
  const std::vector<Rational> x = solve_linear(m, rhs);
  CHECK(rational_to_int_exact(x[0]) == f.constant);
  for (int j = 0; j < 4; ++j)
    CHECK(rational_to_int_exact(x[j + 1]) == f.coeffs[j]);

  // Vertex values span exactly {0..width}.
  Int lo = f.eval(s.v), hi = lo;
  for (int j = 0; j < 4; ++j) {
    std::array<Int, 4> ej{};
    ej[j] = 1;
    lo = std::min(lo, f.eval(ej));
    hi = std::max(hi, f.eval(ej));
  }
  CHECK(lo == 0);
  CHECK(hi - lo == w.width);
}

TEST_CASE("functional_from_certificate simple and rejected inputs") {
  // u = (10, 1, 3, 4, 4) mod 11 satisfies lambda = (1,1,0,0,0).
  const VRepSimplex s{{1, 3, 4, 4}};
  const std::vector<Int> lambda{1, 1, 0, 0, 0};
  const IntAffine f = functional_from_certificate(s, lambda);
  CHECK(f.constant == 0);
  CHECK(f.coeffs == std::vector<Int>{1, 0, 0, 0});

  CHECK_THROWS_AS(functional_from_certificate(s, std::vector<Int>{2, 2, 2, 2, 2}),
                  std::domain_error);
  CHECK_THROWS_AS(functional_from_certificate(s, std::vector<Int>{1, 0, 0, 0, 0}),
                  std::domain_error);
}
