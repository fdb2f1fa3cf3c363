//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
//
// Exhaustive per-determinant enumeration of empty 4-simplex classes.
// Algorithm 1 scans the D^3 quintuples (D-1, v1..v4) directly; Algorithm 2
// assembles candidates for D = a*b from the stored classes of the coprime
// factors via CRT. Survivors are deduplicated by canonical rendering.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "es4/store.hpp"

#include <optional>

namespace es4 {

/// Coprime factorization D = a*b with a <= b and both >= 2, gap |a-b|
/// minimal.
struct SplitChoice {
  Int a = 0;
  Int b = 0;

  friend bool operator==(const SplitChoice&, const SplitChoice&) = default;
};

/// None when D is 1 or a prime power; otherwise the minimal-gap grouping of
/// the prime-power factors of D (ties broken by smaller a).
std::optional<SplitChoice> choose_split(Int d);

/// All empty classes of determinant D by direct scan over v1, v2, v3 in
/// [0,D)^3 with v4 = 1 - v1 - v2 - v3 mod D. Candidates are primitive
/// automatically (slot 0 holds the unit D-1). Requires at most four distinct
/// prime factors, which guarantees every empty class has a unimodular facet
/// and is therefore reached by the scan. Sorted ascending.
///
/// The scan restricts to v1 <= v2 <= v3 since permuting those slots permutes
/// tuple entries; set prune_symmetry to false to force the full cube (the
/// equivalence of both scans is a test requirement).
std::vector<CanonicalTuple> algorithm1(Int d, int jobs = 1, bool prune_symmetry = true);

/// Same class set via CRT gluing: for each stored empty class Pa of
/// determinant a and each tuple y in the orbit of a stored class of
/// determinant b, test b*rep(Pa) + a*y. Requires complete records for both
/// factors in the store.
std::vector<CanonicalTuple> algorithm2(Int d, const SplitChoice& split, const Store& store);

enum class AlgoMode { Auto, ForceA1, ForceA2 };

struct RangeSummary {
  struct Item {
    Int determinant = 0;
    std::string algo;      // "A1", "A2:a,b", or "" when skipped/error
    bool skipped = false;  // complete record already present
    std::size_t classes = 0;
    double seconds = 0;
    std::string error;     // nonempty when this determinant failed
  };
  std::vector<Item> items;

  bool all_ok() const;
};

/// Ascending pass over [dmin, dmax], writing one complete record per
/// determinant. Auto mode prefers Algorithm 2 whenever choose_split succeeds
/// and both factor records are complete. Idempotent: complete records are
/// skipped. Per-determinant failures are reported in the summary without
/// aborting the range.
RangeSummary enumerate_range(Int dmin, Int dmax, Store& store, int jobs = 1,
                             AlgoMode mode = AlgoMode::Auto);

struct WideClass {
  Int determinant = 0;
  CanonicalTuple tuple;
  Int width = 0;            // holds the cap when width_capped is set
  bool width_capped = false;
};

/// All classes of width >= threshold across the given complete records,
/// ascending by (determinant, entries). Width-capped classes count as wide
/// whenever the cap is at least the threshold.
std::vector<WideClass> wide_filter(const std::vector<EnumerationRecord>& records,
                                   Int threshold = 3);

struct RunEstimate {
  double alpha = 0;         // fitted exponent of t = c * D^alpha
  double c = 0;             // fitted coefficient
  double total_seconds = 0; // extrapolated cost of a pass over D <= target
  std::size_t samples = 0;  // timings used for the fit
};

/// Least-squares power-law fit t = c * D^alpha in log-log space over the
/// store's positive timings, extrapolated to a full pass over D <=
/// target_dmax. nullopt with fewer than two usable samples.
std::optional<RunEstimate> estimate_full_run(const Store& store, Int target_dmax = 7600);

} // namespace es4
