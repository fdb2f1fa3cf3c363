//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//

#include "es4/bounds.hpp"

#include "es4/store.hpp"

#include <cmath>
#include <filesystem>
#include <stdexcept>

#include "doctest.h"

using namespace es4;

TEST_CASE("sylvester sequence values and recurrence") {
  CHECK(sylvester(1) == 2);
  CHECK(sylvester(2) == 3);
  CHECK(sylvester(3) == 7);
  CHECK(sylvester(4) == 43);
  CHECK(sylvester(5) == 1807);
  CHECK(sylvester(6) == 3263443);
  CHECK(sylvester(7) == 10650056950807);
  for (Int i = 1; i < 7; ++i)
    CHECK(sylvester(i + 1) == sylvester(i) * (sylvester(i) - 1) + 1);
  CHECK_THROWS_AS(sylvester(0), std::invalid_argument);
  CHECK_THROWS_AS(sylvester(8), std::overflow_error);
}

TEST_CASE("width thresholds and the branch-agreement identity") {
  const double t = width_threshold();
  const double star = width_regime_star();
  CHECK(t == doctest::Approx(2.1547005383792515).epsilon(1e-12));
  CHECK(star > t);
  CHECK(star < 3.0);

  // Both branch formulas coincide at w* iff 32 (w* - t) = 3 (w* - 1)^3; the
  // same identity covers the five-point pair.
  CHECK(std::abs(32.0 * (star - t) - 3.0 * (star - 1) * (star - 1) * (star - 1)) <
        kBoundTolerance);

  const double delta = 1e-7;
  for (const bool five : {false, true}) {
    const auto lo = hollow3_volume_bound(star - delta, five);
    const auto hi = hollow3_volume_bound(star + delta, five);
    CHECK(lo.regime == "rational-diameter");
    CHECK(hi.regime == "difference-body");
    CHECK(std::abs(lo.value - hi.value) < 1e-3);
  }
}

TEST_CASE("hollow body volume bounds at frozen widths") {
  const auto general3 = hollow3_volume_bound(3.0, false);
  CHECK(general3.regime == "difference-body");
  CHECK(std::abs(general3.value - 27.0) < kBoundTolerance);

  const auto five3 = hollow3_volume_bound(3.0, true);
  CHECK(std::abs(five3.value - 18.0) < kBoundTolerance);

  CHECK(std::abs(hollow3_volume_bound(4.0, false).value - 512.0 / 27.0) <
        kBoundTolerance);

  const auto narrow = hollow3_volume_bound(2.2, false);
  CHECK(narrow.regime == "rational-diameter");
  CHECK(narrow.value == doctest::Approx(176.2935).epsilon(1e-4));

  CHECK_THROWS_AS(hollow3_volume_bound(width_threshold(), false), std::domain_error);
  CHECK_THROWS_AS(hollow3_volume_bound(2.0, true), std::domain_error);
  CHECK_THROWS_AS(hollow3_volume_bound(0.0, false), std::domain_error);
}

TEST_CASE("hollow bound is strictly decreasing above the threshold") {
  const double grid[] = {2.16, 2.2, 2.3, 2.4, 2.43, 2.5, 3.0, 5.0, 10.0};
  for (const bool five : {false, true}) {
    double prev = hollow3_volume_bound(grid[0], five).value;
    for (std::size_t i = 1; i < std::size(grid); ++i) {
      const double cur = hollow3_volume_bound(grid[i], five).value;
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("direct sum coefficients and the square pyramid gap") {
  CHECK(direct_sum_rs_coefficient(0, 3) == 20);
  CHECK(direct_sum_rs_coefficient(1, 2) == 12);
  for (Int p = 0; p <= 3; ++p)
    CHECK(direct_sum_rs_coefficient(p, 3 - p) == direct_sum_rs_coefficient(3 - p, p));
  CHECK_THROWS_AS(direct_sum_rs_coefficient(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(direct_sum_rs_coefficient(-1, 4), std::invalid_argument);

  // The pyramid factor 14 sits strictly between the direct-sum coefficients.
  CHECK(direct_sum_rs_coefficient(1, 2) < kSquarePyramidDifferenceFactor);
  CHECK(kSquarePyramidDifferenceFactor < direct_sum_rs_coefficient(0, 3));
}

TEST_CASE("eq8 bound: frozen values, interior minimum, interval maximum") {
  const auto [num, den] = eq8_exact_at_sylvester_bound();
  CHECK(num == 1229312);
  CHECK(den == 243);
  CHECK(std::abs(eq8_bound(1.0 / 42.0) - static_cast<double>(num) / den) <
        kBoundTolerance * eq8_bound(1.0 / 42.0));

  CHECK(std::abs(eq8_bound(1.0 / 6.0) - 1536.0) < kBoundTolerance);
  for (const double l : {0.02, 0.05, 0.1, 0.15, 0.2, 0.3, 0.5, 0.6})
    CHECK(eq8_bound(l) > 1536.0);

  // On [1/42, 0.19] the maximum sits at the left endpoint.
  for (double l = 1.0 / 42.0; l <= 0.19; l += 0.01)
    CHECK(eq8_bound(l) <= eq8_bound(1.0 / 42.0) + kBoundTolerance);

  CHECK_THROWS_AS(eq8_bound(0.0), std::domain_error);
  CHECK_THROWS_AS(eq8_bound(2.0 / 3.0), std::domain_error);
}

TEST_CASE("volume caps") {
  CHECK(volume_cap_branch_019() == doctest::Approx(4209.386).epsilon(1e-5));
  CHECK(simplex_volume_cap() == 5058);
  CHECK(simplex_volume_cap() == 1229312 / 243); // exact integer floor
  CHECK(static_cast<Int>(std::floor(volume_cap_branch_019())) < simplex_volume_cap());
  CHECK(projecting_volume_cap() == 27);
}

TEST_CASE("completeness certificate verdict logic on synthetic stores") {
  const auto dir = std::filesystem::temp_directory_path() / "es4_bounds_store";
  std::filesystem::remove_all(dir);
  Store store(dir);

  SUBCASE("missing records are listed and capped at ten") {
    const CertifyVerdict v = completeness_certificate(12, store);
    CHECK_FALSE(v.store_complete);
    CHECK_FALSE(v.complete);
    CHECK(v.missing == std::vector<Int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    CHECK(v.text.find("records missing") != std::string::npos);
    CHECK(v.text.find("verdict: INCOMPLETE; remaining gap (12, 5058]") !=
          std::string::npos);
  }

  SUBCASE("complete records below the cap still report the gap") {
    for (Int d = 1; d <= 3; ++d) {
      EnumerationRecord rec;
      rec.determinant = d;
      rec.algo = "A1";
      rec.complete = true;
      if (d == 1)
        rec.classes.push_back(StoredClass{
            canonical_form(ResidueTuple::make(1, {0, 0, 0, 0, 0})), 1, false,
            {1, 1, 1, 1, 1}});
      store.write(rec);
    }
    const CertifyVerdict v = completeness_certificate(3, store);
    CHECK(v.store_complete);
    CHECK(v.catalog_match);
    CHECK_FALSE(v.complete);
    CHECK(v.cap == 5058);
    CHECK(v.text.find("verdict: INCOMPLETE; remaining gap (3, 5058]") !=
          std::string::npos);
  }

  CHECK_THROWS_AS(completeness_certificate(0, store), std::invalid_argument);
  std::filesystem::remove_all(dir);
}
