//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//

#include "es4/residue_tuple.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace es4 {

ResidueTuple ResidueTuple::make(Int modulus, std::span<const Int> raw) {
  if (modulus < 1)
    throw std::invalid_argument("ResidueTuple: modulus must be >= 1");
  if (raw.size() < 2)
    throw std::invalid_argument("ResidueTuple: need at least 2 entries");
  std::vector<Int> e(raw.size());
  Int sum = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    e[i] = mod_reduce(raw[i], modulus);
    sum = (sum + e[i]) % modulus;
  }
  if (sum != 0)
    throw std::invalid_argument("ResidueTuple: entry sum not 0 mod D");
  return ResidueTuple(modulus, std::move(e));
}

ResidueTuple ResidueTuple::make(Int modulus, std::initializer_list<Int> raw) {
  return make(modulus, std::span<const Int>(raw.begin(), raw.size()));
}

bool is_primitive(const ResidueTuple& t) {
  Int g = t.modulus();
  for (Int e : t.entries())
    g = std::gcd(g, e);
  return g == 1 || t.modulus() == 1;
}

CanonicalTuple canonical_form(const ResidueTuple& t) {
  if (!is_primitive(t))
    throw std::invalid_argument("canonical_form: tuple is not primitive");
  const Int D = t.modulus();
  std::vector<Int> best;
  std::vector<Int> cand(t.size());
  for (Int c : units_mod(D)) {
    for (std::size_t i = 0; i < t.size(); ++i)
      cand[i] = (c * t.entries()[i]) % D;
    std::sort(cand.begin(), cand.end());
    if (best.empty() || cand < best)
      best = cand;
  }
  return CanonicalTuple(ResidueTuple::make(D, best));
}

bool equivalent(const ResidueTuple& t1, const ResidueTuple& t2) {
  if (t1.modulus() != t2.modulus() || t1.size() != t2.size())
    throw std::invalid_argument("equivalent: modulus or length mismatch");
  return canonical_form(t1) == canonical_form(t2);
}

std::vector<ResidueTuple> orbit(const ResidueTuple& t) {
  const Int D = t.modulus();
  std::vector<ResidueTuple> out;
  std::vector<Int> scaled(t.size());
  for (Int c : units_mod(D)) {
    for (std::size_t i = 0; i < t.size(); ++i)
      scaled[i] = (c * t.entries()[i]) % D;
    std::sort(scaled.begin(), scaled.end());
    do {
      out.push_back(ResidueTuple::make(D, scaled));
    } while (std::next_permutation(scaled.begin(), scaled.end()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ResidueTuple relax(const ResidueTuple& t, Int a) {
  if (a < 1 || t.modulus() % a != 0)
    throw std::invalid_argument("relax: a must divide the modulus");
  std::vector<Int> e(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    e[i] = t.entries()[i] % a;
  return ResidueTuple::make(a, e);
}

ResidueTuple crt_combine(const ResidueTuple& ta, const ResidueTuple& tb) {
  const Int a = ta.modulus();
  const Int b = tb.modulus();
  if (std::gcd(a, b) != 1)
    throw std::invalid_argument("crt_combine: moduli must be coprime");
  if (ta.size() != tb.size())
    throw std::invalid_argument("crt_combine: length mismatch");
  if (!is_primitive(ta) || !is_primitive(tb))
    throw std::invalid_argument("crt_combine: inputs must be primitive");
  std::vector<Int> e(ta.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = b * ta.entries()[i] + a * tb.entries()[i];
  return ResidueTuple::make(a * b, e);
}

std::string render(const ResidueTuple& t) {
  std::ostringstream os;
  os << t.modulus() << ':';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i)
      os << ' ';
    os << t.entries()[i];
  }
  return os.str();
}

std::string render(const CanonicalTuple& t) { return render(t.tuple()); }

namespace {

Int parse_int(std::string_view s) {
  Int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("parse_tuple: bad integer '" + std::string(s) + "'");
  return value;
}

} // namespace

ResidueTuple parse_tuple(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("parse_tuple: missing ':' separator");
  const Int D = parse_int(text.substr(0, colon));
  std::vector<Int> e;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    while (!rest.empty() && rest.front() == ' ')
      rest.remove_prefix(1);
    if (rest.empty())
      break;
    auto end = rest.find(' ');
    e.push_back(parse_int(rest.substr(0, end)));
    rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
  }
  return ResidueTuple::make(D, e);
}

CanonicalTuple parse_canonical(std::string_view text) {
  ResidueTuple t = parse_tuple(text);
  CanonicalTuple c = canonical_form(t);
  if (c.tuple() != t)
    throw std::invalid_argument("parse_canonical: tuple not in canonical form: " +
                                std::string(text));
  return c;
}

} // namespace es4
