//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//

#include "es4/catalog.hpp"

#include "es4/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace es4 {

namespace {

const std::array<Int, 4> kWidthFourEntry{6, 14, 17, 65};

std::string render_entry(const CatalogEntry& e) {
  std::ostringstream os;
  os << "(" << e.v[0] << "," << e.v[1] << "," << e.v[2] << "," << e.v[3] << ")";
  return os.str();
}

} // namespace

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    CatalogEntry e;
    if (!(ls >> e.v[0] >> e.v[1] >> e.v[2] >> e.v[3]))
      continue;
    Int extra = 0;
    if (ls >> extra)
      throw std::runtime_error("parse_catalog: more than four coordinates: " + line);
    e.determinant = e.v[0] + e.v[1] + e.v[2] + e.v[3] - 1;
    e.expected_width = e.v == kWidthFourEntry ? 4 : 3;
    out.push_back(e);
  }
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> parsed = parse_catalog(detail::table1_text());
    if (parsed.size() != 179)
      throw std::logic_error("catalog: expected 179 entries, found " +
                             std::to_string(parsed.size()));
    const auto width4 =
        std::count_if(parsed.begin(), parsed.end(),
                      [](const CatalogEntry& e) { return e.expected_width == 4; });
    if (width4 != 1)
      throw std::logic_error("catalog: expected exactly one width-4 entry");
    return parsed;
  }();
  return entries;
}

void VerificationReport::check(bool ok, const std::string& subject, const std::string& detail) {
  ++checks;
  if (!ok)
    failures.push_back(VerificationItem{subject, detail});
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << checks << " checks, " << failures.size() << " failures";
  for (const VerificationItem& f : failures)
    os << "\nFAIL " << f.subject << ": " << f.detail;
  return os.str();
}

VerificationReport verify_entries(const std::vector<CatalogEntry>& entries) {
  VerificationReport report;
  std::set<CanonicalTuple> classes;
  Int width3 = 0, width4 = 0;
  for (const CatalogEntry& e : entries) {
    const std::string subject = render_entry(e);
    report.check(e.determinant >= 41 && e.determinant <= 179, subject,
                 "determinant " + std::to_string(e.determinant) + " outside [41, 179]");
    if (e.determinant < 1)
      continue;
    const ResidueTuple t = tuple_of_vrep(VRepSimplex{e.v});
    report.check(is_empty(t), subject, "not empty");
    const WidthResult w = width(t);
    report.check(!w.capped && w.width == e.expected_width, subject,
                 "width " + (w.capped ? ">" + std::to_string(kDefaultWidthCap)
                                      : std::to_string(w.width)) +
                     ", expected " + std::to_string(e.expected_width));
    if (!w.capped && w.width == 3)
      ++width3;
    if (!w.capped && w.width == 4)
      ++width4;
    const std::vector<Int> fv = facet_volumes(t);
    bool coprime = true;
    for (std::size_t i = 0; i < fv.size(); ++i)
      for (std::size_t j = i + 1; j < fv.size(); ++j)
        coprime = coprime && std::gcd(fv[i], fv[j]) == 1;
    report.check(coprime, subject, "facet volumes not pairwise coprime");
    classes.insert(canonical_form(t));
  }
  report.check(classes.size() == entries.size(), "catalog",
               "equivalent entries collapse: " + std::to_string(classes.size()) +
                   " classes from " + std::to_string(entries.size()) + " entries");
  report.check(width3 == 178 && width4 == 1, "catalog",
               "width histogram {3: " + std::to_string(width3) +
                   ", 4: " + std::to_string(width4) + "}, expected {3: 178, 4: 1}");
  return report;
}

VerificationReport verify_catalog() { return verify_entries(catalog()); }

VerificationReport diff_store(const Store& store, Int dmax) {
  VerificationReport report;
  for (Int d = 1; d <= dmax; ++d)
    report.check(store.has_complete(d), "d" + std::to_string(d),
                 "missing complete record");
  if (!report.pass())
    return report;

  std::set<CanonicalTuple> store_side;
  for (const WideClass& w : wide_filter(store.read_range(dmax)))
    store_side.insert(w.tuple);
  std::set<CanonicalTuple> catalog_side;
  for (const CatalogEntry& e : catalog())
    if (e.determinant <= dmax)
      catalog_side.insert(canonical_form(tuple_of_vrep(VRepSimplex{e.v})));

  for (const CanonicalTuple& c : store_side)
    report.check(catalog_side.contains(c), render(c), "store class absent from catalog");
  for (const CanonicalTuple& c : catalog_side)
    report.check(store_side.contains(c), render(c), "catalog class absent from store");
  report.check(store_side.size() == catalog_side.size(), "diff",
               "class counts differ: store " + std::to_string(store_side.size()) +
                   ", catalog " + std::to_string(catalog_side.size()));
  return report;
}

} // namespace es4
