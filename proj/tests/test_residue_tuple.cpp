//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//

#include "es4/residue_tuple.hpp"

#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

using namespace es4;

namespace {

// Seeded primitive tuple of the given length; rejection-samples until the
// zero-sum completion is possible and the tuple is primitive.
ResidueTuple random_primitive(std::mt19937_64& rng, Int d, std::size_t len) {
  std::uniform_int_distribution<Int> dist(0, d - 1);
  while (true) {
    std::vector<Int> e(len);
    Int sum = 0;
    for (std::size_t i = 0; i + 1 < len; ++i) {
      e[i] = dist(rng);
      sum += e[i];
    }
    e[len - 1] = mod_reduce(-sum, d);
    ResidueTuple t = ResidueTuple::make(d, e);
    if (is_primitive(t))
      return t;
  }
}

} // namespace

TEST_CASE("make_tuple reduces entries and enforces the zero sum") {
  const ResidueTuple t = ResidueTuple::make(101, {-1, 6, 14, 17, 65});
  CHECK(t.entries() == std::vector<Int>{100, 6, 14, 17, 65});
  CHECK(t.modulus() == 101);
  CHECK(t.dimension() == 4);

  CHECK(ResidueTuple::make(1, {0, 0, 0, 0, 0}).entries() ==
        std::vector<Int>{0, 0, 0, 0, 0});
  CHECK(ResidueTuple::make(7, {-1, 2, 2, 2, 2}).entries() ==
        std::vector<Int>{6, 2, 2, 2, 2});

  CHECK_THROWS_AS(ResidueTuple::make(101, {1, 6, 14, 17, 65}), std::invalid_argument);
  CHECK_THROWS_AS(ResidueTuple::make(5, {5}), std::invalid_argument);
  CHECK_THROWS_AS(ResidueTuple::make(0, {0, 0}), std::invalid_argument);
}

TEST_CASE("is_primitive") {
  CHECK_FALSE(is_primitive(ResidueTuple::make(6, {2, 4, 0, 0, 0})));
  CHECK(is_primitive(ResidueTuple::make(101, {100, 6, 14, 17, 65})));
  CHECK(is_primitive(ResidueTuple::make(1, {0, 0, 0, 0, 0})));
  CHECK(is_primitive(ResidueTuple::make(6, {2, 3, 2, 3, 2})));
}

TEST_CASE("canonical_form lex-min over unit multiples of the sorted vector") {
  const ResidueTuple t = ResidueTuple::make(5, {4, 3, 1, 1, 1});
  CHECK(canonical_form(t).entries() == std::vector<Int>{1, 1, 1, 3, 4});

  CHECK(canonical_form(ResidueTuple::make(1, {0, 0, 0, 0, 0})).entries() ==
        std::vector<Int>{0, 0, 0, 0, 0});

  CHECK_THROWS_AS(canonical_form(ResidueTuple::make(6, {2, 4, 0, 0, 0})),
                  std::invalid_argument);
}

TEST_CASE("canonical_form is idempotent and orbit invariant") {
  std::mt19937_64 rng(20260825);
  for (int trial = 0; trial < 40; ++trial) {
    const Int d = 2 + static_cast<Int>(rng() % 60);
    const ResidueTuple t = random_primitive(rng, d, 5);
    const CanonicalTuple c = canonical_form(t);
    CHECK(canonical_form(c.tuple()) == c);

    // Random permutation and unit multiple must canonicalize identically.
    std::vector<Int> e = t.entries();
    std::shuffle(e.begin(), e.end(), rng);
    const std::vector<Int> units = units_mod(d);
    const Int u = units[rng() % units.size()];
    for (Int& x : e)
      x = mod_reduce(u * x, d);
    CHECK(canonical_form(ResidueTuple::make(d, e)) == c);

    // The canonical representative lies in the orbit.
    const std::vector<ResidueTuple> orb = orbit(t);
    CHECK(std::find(orb.begin(), orb.end(), c.tuple()) != orb.end());
  }
}

TEST_CASE("equivalent under permutation and unit scaling") {
  const ResidueTuple t = ResidueTuple::make(101, {100, 6, 14, 17, 65});
  CHECK(equivalent(t, ResidueTuple::make(101, {6, 100, 65, 17, 14})));
  std::vector<Int> doubled;
  for (Int x : t.entries())
    doubled.push_back(mod_reduce(2 * x, 101));
  CHECK(equivalent(t, ResidueTuple::make(101, doubled)));

  // Two same-determinant catalog members stay inequivalent.
  const ResidueTuple a = ResidueTuple::make(43, {-1, 3, 5, 11, 25});
  const ResidueTuple b = ResidueTuple::make(43, {-1, 4, 7, 9, 24});
  CHECK_FALSE(equivalent(a, b));
  CHECK_THROWS_AS(equivalent(t, ResidueTuple::make(5, {1, 1, 1, 1, 1})),
                  std::invalid_argument);
}

TEST_CASE("orbit contents and size divisors") {
  const ResidueTuple t2 = ResidueTuple::make(2, {1, 1, 1, 1, 0});
  const std::vector<ResidueTuple> orb2 = orbit(t2);
  CHECK(orb2.size() == 5); // the five placements of the single zero
  CHECK(std::find(orb2.begin(), orb2.end(), t2) != orb2.end());

  const ResidueTuple t = ResidueTuple::make(101, {100, 6, 14, 17, 65});
  const std::vector<ResidueTuple> orb = orbit(t);
  CHECK(std::find(orb.begin(), orb.end(), t) != orb.end());
  CHECK((120u * 100u) % orb.size() == 0);
  for (const ResidueTuple& x : orb)
    CHECK(equivalent(x, t));
}

TEST_CASE("relax reduces mod a divisor and is functorial") {
  const ResidueTuple t = ResidueTuple::make(6, {5, 1, 2, 4, 0});
  CHECK(relax(t, 2).entries() == std::vector<Int>{1, 1, 0, 0, 0});
  CHECK(relax(t, 6) == t);
  CHECK_THROWS_AS(relax(t, 4), std::invalid_argument);

  const ResidueTuple big = ResidueTuple::make(60, {59, 7, 22, 31, 1});
  CHECK(relax(relax(big, 12), 3) == relax(big, 3));
  CHECK(relax(relax(big, 20), 5) == relax(big, 5));
}

TEST_CASE("crt_combine frozen value and relaxation laws") {
  const ResidueTuple ta = ResidueTuple::make(2, {1, 1, 1, 1, 0});
  const ResidueTuple tb = ResidueTuple::make(3, {2, 1, 1, 1, 1});
  const ResidueTuple c = crt_combine(ta, tb);
  CHECK(c.modulus() == 6);
  CHECK(c.entries() == std::vector<Int>{1, 5, 5, 5, 2});
  CHECK(is_primitive(c));

  // relax(result, a) = b * ta with b a unit mod a, and symmetrically.
  std::mt19937_64 rng(7);
  const std::vector<std::pair<Int, Int>> moduli{{2, 3}, {3, 4}, {4, 5}, {5, 9}, {8, 9}};
  for (const auto& [a, b] : moduli) {
    const ResidueTuple ra = random_primitive(rng, a, 5);
    const ResidueTuple rb = random_primitive(rng, b, 5);
    const ResidueTuple combined = crt_combine(ra, rb);
    CHECK(is_primitive(combined));
    std::vector<Int> scaled_a, scaled_b;
    for (Int x : ra.entries())
      scaled_a.push_back(mod_reduce(b * x, a));
    for (Int x : rb.entries())
      scaled_b.push_back(mod_reduce(a * x, b));
    CHECK(relax(combined, a).entries() == scaled_a);
    CHECK(relax(combined, b).entries() == scaled_b);
  }

  CHECK_THROWS_AS(crt_combine(ResidueTuple::make(2, {1, 1, 1, 1, 0}),
                              ResidueTuple::make(4, {3, 1, 1, 1, 2})),
                  std::invalid_argument);
}

TEST_CASE("render and parse round-trip; canonical parsing is strict") {
  const ResidueTuple t = ResidueTuple::make(101, {100, 6, 14, 17, 65});
  CHECK(render(t) == "101:100 6 14 17 65");
  CHECK(parse_tuple(render(t)) == t);
  CHECK(parse_tuple("1:0 0 0 0 0").modulus() == 1);
  CHECK_THROWS_AS(parse_tuple("101 100 6 14 17 65"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tuple("101:1 6 14 17 65"), std::invalid_argument);

  const CanonicalTuple c = canonical_form(t);
  CHECK(parse_canonical(render(c)) == c);
  CHECK_THROWS_AS(parse_canonical("101:100 6 14 17 65"), std::invalid_argument);
}
