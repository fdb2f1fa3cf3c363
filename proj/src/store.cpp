//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//

#include "es4/store.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace es4 {

namespace {

[[noreturn]] void malformed(const std::filesystem::path& file, const std::string& what) {
  throw std::runtime_error("store: malformed " + file.string() + ": " + what);
}

void atomic_write(const std::filesystem::path& target, const std::string& contents) {
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out)
      throw std::runtime_error("store: cannot open " + tmp.string());
    out << contents;
    out.flush();
    if (!out)
      throw std::runtime_error("store: short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

} // namespace

std::string render_class_line(const StoredClass& c) {
  std::ostringstream os;
  os << render(c.tuple) << " w=";
  if (c.width_capped)
    os << '>';
  os << c.width << " facets=";
  for (std::size_t i = 0; i < c.facets.size(); ++i) {
    if (i)
      os << ',';
    os << c.facets[i];
  }
  return os.str();
}

StoredClass parse_class_line(const std::string& line) {
  const auto wpos = line.find(" w=");
  const auto fpos = line.find(" facets=", wpos == std::string::npos ? 0 : wpos);
  if (wpos == std::string::npos || fpos == std::string::npos)
    throw std::runtime_error("store: malformed class line: " + line);
  StoredClass c{parse_canonical(line.substr(0, wpos)), 0, false, {}};

  std::string wtext = line.substr(wpos + 3, fpos - (wpos + 3));
  if (!wtext.empty() && wtext.front() == '>') {
    c.width_capped = true;
    wtext.erase(0, 1);
  }
  std::size_t used = 0;
  c.width = std::stoll(wtext, &used);
  if (used != wtext.size() || c.width < 1)
    throw std::runtime_error("store: malformed width in: " + line);

  std::istringstream fs(line.substr(fpos + 8));
  std::string item;
  while (std::getline(fs, item, ','))
    c.facets.push_back(std::stoll(item));
  if (c.facets.size() != c.tuple.entries().size())
    throw std::runtime_error("store: facet count mismatch in: " + line);
  return c;
}

Store::Store(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path Store::record_path(Int d) const {
  return dir_ / ("d" + std::to_string(d) + ".txt");
}

bool Store::has_complete(Int d) const {
  std::ifstream in(record_path(d));
  if (!in)
    return false;
  std::string tag;
  Int dd = 0;
  std::string algo;
  int complete = 0;
  if (!(in >> tag >> dd) || tag != "D" || dd != d)
    return false;
  if (!(in >> tag >> algo) || tag != "algo")
    return false;
  if (!(in >> tag >> complete) || tag != "complete")
    return false;
  return complete == 1;
}

std::optional<EnumerationRecord> Store::read(Int d) const {
  const std::filesystem::path file = record_path(d);
  std::ifstream in(file);
  if (!in)
    return std::nullopt;

  std::string header;
  if (!std::getline(in, header))
    malformed(file, "missing header");
  std::istringstream hs(header);
  EnumerationRecord rec;
  std::string tag;
  int complete = 0;
  std::size_t nclasses = 0;
  if (!(hs >> tag >> rec.determinant) || tag != "D" || rec.determinant != d)
    malformed(file, "bad determinant field");
  if (!(hs >> tag >> rec.algo) || tag != "algo")
    malformed(file, "bad algo field");
  if (!(hs >> tag >> complete) || tag != "complete" || (complete != 0 && complete != 1))
    malformed(file, "bad complete field");
  if (!(hs >> tag >> nclasses) || tag != "classes")
    malformed(file, "bad classes field");
  rec.complete = complete == 1;

  std::string line;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    StoredClass c = parse_class_line(line);
    if (c.tuple.modulus() != d)
      malformed(file, "class modulus mismatch");
    rec.classes.push_back(std::move(c));
  }
  if (rec.classes.size() != nclasses)
    malformed(file, "class count mismatch");
  if (!std::is_sorted(rec.classes.begin(), rec.classes.end(),
                      [](const StoredClass& x, const StoredClass& y) { return x.tuple < y.tuple; }))
    malformed(file, "classes not sorted");
  return rec;
}

void Store::write(const EnumerationRecord& rec) {
  EnumerationRecord sorted = rec;
  std::sort(sorted.classes.begin(), sorted.classes.end(),
            [](const StoredClass& x, const StoredClass& y) { return x.tuple < y.tuple; });

  std::ostringstream os;
  os << "D " << sorted.determinant << " algo " << sorted.algo << " complete "
     << (sorted.complete ? 1 : 0) << " classes " << sorted.classes.size() << '\n';
  for (const StoredClass& c : sorted.classes)
    os << render_class_line(c) << '\n';
  atomic_write(record_path(sorted.determinant), os.str());

  std::vector<Int> done = manifest_entries();
  const bool listed = std::binary_search(done.begin(), done.end(), sorted.determinant);
  if (sorted.complete && !listed) {
    done.insert(std::upper_bound(done.begin(), done.end(), sorted.determinant),
                sorted.determinant);
    rewrite_manifest(std::move(done));
  } else if (!sorted.complete && listed) {
    done.erase(std::find(done.begin(), done.end(), sorted.determinant));
    rewrite_manifest(std::move(done));
  }
}

void Store::remove(Int d) {
  std::filesystem::remove(record_path(d));
  std::vector<Int> done = manifest_entries();
  if (auto it = std::find(done.begin(), done.end(), d); it != done.end()) {
    done.erase(it);
    rewrite_manifest(std::move(done));
  }
}

std::vector<Int> Store::completed() const {
  std::vector<Int> out;
  for (Int d : manifest_entries())
    if (has_complete(d))
      out.push_back(d);
  return out;
}

std::vector<EnumerationRecord> Store::read_range(Int dmax) const {
  std::vector<EnumerationRecord> out;
  for (Int d = 1; d <= dmax; ++d)
    if (auto rec = read(d); rec && rec->complete)
      out.push_back(std::move(*rec));
  return out;
}

void Store::record_timing(Int d, const std::string& algo, double seconds) {
  std::ofstream out(dir_ / "timings.txt", std::ios::app);
  out << "D " << d << " algo " << algo << " seconds " << seconds << '\n';
}

std::vector<Store::Timing> Store::timings() const {
  std::vector<Timing> out;
  std::ifstream in(dir_ / "timings.txt");
  std::string tag1, tag2, tag3;
  Timing t;
  while (in >> tag1 >> t.determinant >> tag2 >> t.algo >> tag3 >> t.seconds) {
    if (tag1 != "D" || tag2 != "algo" || tag3 != "seconds")
      throw std::runtime_error("store: malformed timings.txt");
    out.push_back(t);
  }
  return out;
}

void Store::rewrite_manifest(std::vector<Int> completed) const {
  std::ostringstream os;
  for (Int d : completed)
    os << d << '\n';
  atomic_write(dir_ / "manifest.txt", os.str());
}

std::vector<Int> Store::manifest_entries() const {
  std::vector<Int> out;
  std::ifstream in(dir_ / "manifest.txt");
  Int d = 0;
  while (in >> d)
    out.push_back(d);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace es4
