//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
//
// Closed-form evaluators for the width-vs-volume bounds and the final
// classification-completeness certificate. Bound evaluation is double
// precision with a pinned 1e-9 comparison tolerance; the certificate
// threshold is exact integer arithmetic throughout.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "es4/numtheory.hpp"

#include <string>
#include <vector>

namespace es4 {

class Store;

/// Comparison tolerance shared by every double-precision bound check.
inline constexpr double kBoundTolerance = 1e-9;

/// vol(K - K) = 14 vol(K) for the square pyramid, the body showing the
/// direct-sum coefficients 12 and 20 are not tight in general. Test constant
/// only; no operation consumes it.
inline constexpr Int kSquarePyramidDifferenceFactor = 14;

/// Sylvester sequence s_1 = 2, s_{n+1} = s_n (s_n - 1) + 1. Defined for
/// i in [1, 7]; later terms overflow Int and throw std::overflow_error.
Int sylvester(Int i);

/// Width below which no volume bound exists: 1 + 2/sqrt(3).
double width_threshold();

/// Regime split point w* = (2/sqrt(3)) (sqrt(5) - 1) + 1; both branch
/// formulas agree there.
double width_regime_star();

struct BoundEvaluation {
  double input = 0;   // width w or parameter lambda
  std::string regime; // branch tag
  double value = 0;   // volume bound
};

/// Upper bound on the Euclidean volume of a hollow 3-body of width w, or of
/// a five-point body when five_point is set. Branches:
///   w >= w*  "difference-body":    8 w^3 / (w-1)^3,   five-point 16 w^3 / (3 (w-1)^3)
///   w <  w*  "rational-diameter":  3 w^3 / (4 (w-t)), five-point w^3 / (2 (w-t))
/// with t = width_threshold(). Throws std::domain_error for w <= t, where
/// hollow prisms of arbitrary volume exist.
BoundEvaluation hollow3_volume_bound(double w, bool five_point);

/// binomial(2p, p) * binomial(2q, q) for p + q = 3: the factor by which the
/// volume of a direct sum grows under the difference operation.
Int direct_sum_rs_coefficient(Int p, Int q);

/// 2^5 3^3 / ((2 - 3 lambda)^3 lambda) on (0, 2/3); the normalized-volume
/// bound parametrized by the last barycentric coordinate lambda.
double eq8_bound(double lambda);

/// eq8_bound(1/42) as an exact fraction: 2^9 7^4 / 3^5 = 1229312 / 243.
/// Returned as (numerator, denominator).
std::pair<Int, Int> eq8_exact_at_sylvester_bound();

/// The lambda >= 0.19 proof branch: 24 * 16 / (70 * 0.19^4), about 4209.38.
double volume_cap_branch_019();

/// Max over the proof branches, floor(1229312/243) = 5058 versus the 0.19
/// branch; exact integer result.
Int simplex_volume_cap();

/// Normalized-volume cap for the hollow-projection case.
Int projecting_volume_cap();

struct CertifyVerdict {
  Int coverage = 0;        // determinant range certified from the store
  Int cap = 0;             // simplex_volume_cap()
  Int full_run_target = 7600; // reference determinant range of a full production run
  bool store_complete = false; // every D <= coverage has a complete record
  bool catalog_match = false;  // store wide classes == embedded catalog (D <= coverage)
  bool complete = false;       // final verdict
  std::vector<Int> missing;    // first few determinants lacking complete records
  std::string text;            // rendered verdict, one line per fact
};

/// Classification is complete iff the store holds complete records for every
/// D <= coverage_dmax, coverage_dmax >= simplex_volume_cap(), and the store's
/// width->=3 classes match the embedded catalog. Anything less reports the
/// remaining gap (coverage, 5058].
CertifyVerdict completeness_certificate(Int coverage_dmax, const Store& store);

} // namespace es4
