//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
//
// Flat-file store of enumeration results, one record file per determinant.
// Formats are fixed so runs are diffable across machines:
//
//   d{D}.txt      header `D <D> algo <A1|A2:a,b> complete <0|1> classes <n>`,
//                 then per class `<D>:<e0> <e1> <e2> <e3> <e4> w=<w|>cap>
//                 facets=<f0>,<f1>,<f2>,<f3>,<f4>`, classes in ascending
//                 lexicographic entry order.
//   manifest.txt  completed determinants, ascending, one per line.
//   timings.txt   append-only sidecar `D <D> algo <...> seconds <float>`,
//                 not part of the normative format.
//
// Record and manifest writes go through a temp file plus rename, so readers
// never observe a torn file.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "es4/residue_tuple.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace es4 {

struct StoredClass {
  CanonicalTuple tuple;
  Int width = 0;            // holds the cap when width_capped is set
  bool width_capped = false;
  std::vector<Int> facets;

  friend bool operator==(const StoredClass&, const StoredClass&) = default;
};

struct EnumerationRecord {
  Int determinant = 0;
  std::string algo; // "A1" or "A2:a,b"
  bool complete = false;
  std::vector<StoredClass> classes;

  friend bool operator==(const EnumerationRecord&, const EnumerationRecord&) = default;
};

/// Renders one class line exactly as stored (no trailing newline).
std::string render_class_line(const StoredClass& c);

/// Parses one class line; throws std::runtime_error on malformed input.
StoredClass parse_class_line(const std::string& line);

class Store {
public:
  /// Opens (creating if needed) the store directory.
  explicit Store(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path record_path(Int d) const;

  /// True iff the record file exists and its header says complete.
  bool has_complete(Int d) const;

  /// Reads a record; nullopt when the file does not exist. Throws
  /// std::runtime_error on malformed contents.
  std::optional<EnumerationRecord> read(Int d) const;

  /// Atomically writes the record (classes sorted on the way out) and
  /// refreshes the manifest.
  void write(const EnumerationRecord& rec);

  /// Deletes a record and its manifest entry; no-op when absent.
  void remove(Int d);

  /// Manifest contents filtered by has_complete, ascending.
  std::vector<Int> completed() const;

  /// Reads every complete record with determinant in [1, dmax], ascending.
  std::vector<EnumerationRecord> read_range(Int dmax) const;

  struct Timing {
    Int determinant = 0;
    std::string algo;
    double seconds = 0;
  };

  void record_timing(Int d, const std::string& algo, double seconds);
  std::vector<Timing> timings() const;

private:
  void rewrite_manifest(std::vector<Int> completed) const;
  std::vector<Int> manifest_entries() const;

  std::filesystem::path dir_;
};

} // namespace es4
