//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
//
// The embedded ground-truth catalog: the 179 empty 4-simplices of width >= 3,
// as v-vectors with determinant D = v1+v2+v3+v4 - 1 ranging over [41, 179].
// The data ships as data/table1.txt (checksummed in the repository) and is
// compiled in verbatim; the verification report is the guard against
// transcription slips.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "es4/simplex.hpp"
#include "es4/store.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace es4 {

namespace detail {
/// The embedded contents of data/table1.txt.
const char* table1_text();
} // namespace detail

struct CatalogEntry {
  std::array<Int, 4> v{};
  Int determinant = 0;    // v1+v2+v3+v4 - 1
  Int expected_width = 0; // 3, or 4 for the single (6,14,17,65) entry

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// Parses catalog text: one `v1 v2 v3 v4` per line, `#` comments and blank
/// lines ignored. No cardinality constraints; used directly by
/// fault-injection tests.
std::vector<CatalogEntry> parse_catalog(std::string_view text);

/// The embedded catalog. Throws std::logic_error unless it has exactly 179
/// entries, 178 of expected width 3 and one of expected width 4.
const std::vector<CatalogEntry>& catalog();

struct VerificationItem {
  std::string subject;
  std::string detail;
};

struct VerificationReport {
  int checks = 0;
  std::vector<VerificationItem> failures;

  bool pass() const { return failures.empty(); }
  void check(bool ok, const std::string& subject, const std::string& detail);
  std::string summary() const;
};

/// Per-entry checks (determinant range, emptiness, width, facet coprimality)
/// plus pairwise inequivalence and the 178/1 width histogram.
VerificationReport verify_entries(const std::vector<CatalogEntry>& entries);

/// verify_entries over the embedded catalog.
VerificationReport verify_catalog();

/// Symmetric difference between the store's width->=3 classes with D <= dmax
/// and the catalog entries with D <= dmax. Requires complete records for
/// every D <= dmax; missing records are reported as failures.
VerificationReport diff_store(const Store& store, Int dmax);

} // namespace es4
