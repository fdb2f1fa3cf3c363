//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//

#include "es4/enumeration.hpp"

#include "es4/simplex.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <thread>
#include <unordered_set>

namespace es4 {

namespace {

// Emptiness of the quintuple (D-1, v1..v4) without constructing a tuple.
// The slot-0 representative at step k is D-k, so the simplex is nonempty iff
// the remaining four representatives sum to k for some k in 1..D-1.
bool candidate_empty_a1(Int d, Int v1, Int v2, Int v3, Int v4) {
  Int r1 = v1, r2 = v2, r3 = v3, r4 = v4;
  for (Int k = 1; k < d; ++k) {
    if (k > 1) {
      r1 += v1;
      if (r1 >= d)
        r1 -= d;
      r2 += v2;
      if (r2 >= d)
        r2 -= d;
      r3 += v3;
      if (r3 >= d)
        r3 -= d;
      r4 += v4;
      if (r4 >= d)
        r4 -= d;
    }
    if (r1 + r2 + r3 + r4 == k)
      return false;
  }
  return true;
}

// General quintuple kernel used by Algorithm 2 candidates.
bool candidate_empty(Int d, const std::array<Int, 5>& e) {
  std::array<Int, 5> r = e;
  Int sum = r[0] + r[1] + r[2] + r[3] + r[4];
  for (Int k = 1; k < d; ++k) {
    if (k > 1) {
      sum = 0;
      for (int i = 0; i < 5; ++i) {
        r[i] += e[i];
        if (r[i] >= d)
          r[i] -= d;
        sum += r[i];
      }
    }
    if (sum == d)
      return false;
  }
  return true;
}

std::vector<CanonicalTuple> finalize(const std::unordered_set<std::string>& renderings) {
  std::vector<CanonicalTuple> out;
  out.reserve(renderings.size());
  for (const std::string& s : renderings)
    out.push_back(parse_canonical(s));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::optional<SplitChoice> choose_split(Int d) {
  const auto factors = factorize(d);
  if (factors.size() < 2)
    return std::nullopt;
  std::vector<Int> parts;
  for (const auto& [p, e] : factors) {
    Int q = 1;
    for (Int i = 0; i < e; ++i)
      q *= p;
    parts.push_back(q);
  }
  SplitChoice best{};
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << parts.size()); ++mask) {
    Int a = 1;
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (mask & (std::size_t{1} << i))
        a *= parts[i];
    const Int b = d / a;
    if (a > b)
      continue;
    if (best.a == 0 || b - a < best.b - best.a || (b - a == best.b - best.a && a < best.a))
      best = SplitChoice{a, b};
  }
  return best;
}

std::vector<CanonicalTuple> algorithm1(Int d, int jobs, bool prune_symmetry) {
  if (d < 1)
    throw std::invalid_argument("algorithm1: determinant must be >= 1");
  if (distinct_prime_factors(d) > 4)
    throw std::invalid_argument(
        "algorithm1: determinant has five or more prime factors; "
        "a unimodular facet is no longer guaranteed");
  if (d == 1)
    return {canonical_form(ResidueTuple::make(1, {0, 0, 0, 0, 0}))};

  const int nworkers = std::max(1, jobs);
  std::atomic<Int> next_v1{0};
  std::vector<std::unordered_set<std::string>> found(nworkers);

  auto worker = [&](int w) {
    auto& local = found[w];
    for (Int v1 = next_v1.fetch_add(1); v1 < d; v1 = next_v1.fetch_add(1)) {
      for (Int v2 = prune_symmetry ? v1 : 0; v2 < d; ++v2) {
        for (Int v3 = prune_symmetry ? v2 : 0; v3 < d; ++v3) {
          const Int v4 = mod_reduce(1 - v1 - v2 - v3, d);
          if (!candidate_empty_a1(d, v1, v2, v3, v4))
            continue;
          const ResidueTuple t = ResidueTuple::make(d, {d - 1, v1, v2, v3, v4});
          local.insert(render(canonical_form(t)));
        }
      }
    }
  };

  if (nworkers == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < nworkers; ++w)
      pool.emplace_back(worker, w);
    for (auto& t : pool)
      t.join();
  }

  std::unordered_set<std::string> merged;
  for (auto& local : found)
    merged.merge(local);
  return finalize(merged);
}

std::vector<CanonicalTuple> algorithm2(Int d, const SplitChoice& split, const Store& store) {
  const Int a = split.a, b = split.b;
  if (a < 2 || b < 2 || a * b != d || std::gcd(a, b) != 1)
    throw std::invalid_argument("algorithm2: invalid split");
  const auto rec_a = store.read(a);
  const auto rec_b = store.read(b);
  if (!rec_a || !rec_a->complete)
    throw std::runtime_error("algorithm2: missing complete record for determinant " +
                             std::to_string(a));
  if (!rec_b || !rec_b->complete)
    throw std::runtime_error("algorithm2: missing complete record for determinant " +
                             std::to_string(b));

  std::unordered_set<std::string> found;
  for (const StoredClass& cb : rec_b->classes) {
    const std::vector<ResidueTuple> orb = orbit(cb.tuple.tuple());
    for (const StoredClass& ca : rec_a->classes) {
      const auto& ta = ca.tuple.entries();
      for (const ResidueTuple& y : orb) {
        std::array<Int, 5> e;
        for (int i = 0; i < 5; ++i)
          e[i] = (b * ta[i] + a * y.entries()[i]) % d;
        if (!candidate_empty(d, e))
          continue;
        const ResidueTuple t = ResidueTuple::make(d, {e[0], e[1], e[2], e[3], e[4]});
        found.insert(render(canonical_form(t)));
      }
    }
  }
  return finalize(found);
}

bool RangeSummary::all_ok() const {
  return std::all_of(items.begin(), items.end(),
                     [](const Item& i) { return i.error.empty(); });
}

RangeSummary enumerate_range(Int dmin, Int dmax, Store& store, int jobs, AlgoMode mode) {
  if (dmin < 1)
    throw std::invalid_argument("enumerate_range: dmin must be >= 1");
  RangeSummary summary;
  for (Int d = dmin; d <= dmax; ++d) {
    RangeSummary::Item item;
    item.determinant = d;
    if (store.has_complete(d)) {
      item.skipped = true;
      summary.items.push_back(std::move(item));
      continue;
    }
    try {
      const auto split = choose_split(d);
      bool use_a2 = false;
      switch (mode) {
      case AlgoMode::Auto:
        use_a2 = split && store.has_complete(split->a) && store.has_complete(split->b);
        break;
      case AlgoMode::ForceA1:
        use_a2 = false;
        break;
      case AlgoMode::ForceA2:
        if (!split)
          throw std::runtime_error("no coprime split exists");
        use_a2 = true;
        break;
      }
      item.algo = use_a2
                      ? "A2:" + std::to_string(split->a) + "," + std::to_string(split->b)
                      : "A1";

      const auto t0 = std::chrono::steady_clock::now();
      const std::vector<CanonicalTuple> classes =
          use_a2 ? algorithm2(d, *split, store) : algorithm1(d, jobs);
      EnumerationRecord rec;
      rec.determinant = d;
      rec.algo = item.algo;
      rec.complete = true;
      for (const CanonicalTuple& c : classes) {
        const WidthResult w = width(c.tuple());
        rec.classes.push_back(StoredClass{c, w.capped ? kDefaultWidthCap : w.width,
                                          w.capped, facet_volumes(c.tuple())});
      }
      const auto t1 = std::chrono::steady_clock::now();
      item.seconds = std::chrono::duration<double>(t1 - t0).count();
      item.classes = rec.classes.size();
      store.write(rec);
      store.record_timing(d, rec.algo, item.seconds);
    } catch (const std::exception& ex) {
      item.error = ex.what();
    }
    summary.items.push_back(std::move(item));
  }
  return summary;
}

std::vector<WideClass> wide_filter(const std::vector<EnumerationRecord>& records,
                                   Int threshold) {
  std::vector<WideClass> out;
  for (const EnumerationRecord& rec : records) {
    if (!rec.complete)
      throw std::invalid_argument("wide_filter: incomplete record for determinant " +
                                  std::to_string(rec.determinant));
    for (const StoredClass& c : rec.classes)
      if (c.width >= threshold)
        out.push_back(WideClass{rec.determinant, c.tuple, c.width, c.width_capped});
  }
  std::sort(out.begin(), out.end(), [](const WideClass& x, const WideClass& y) {
    return std::tie(x.determinant, x.tuple) < std::tie(y.determinant, y.tuple);
  });
  return out;
}

std::optional<RunEstimate> estimate_full_run(const Store& store, Int target_dmax) {
  std::vector<std::pair<double, double>> pts; // (log D, log seconds)
  for (const Store::Timing& t : store.timings())
    if (t.seconds > 1e-6 && t.determinant >= 2)
      pts.emplace_back(std::log(static_cast<double>(t.determinant)), std::log(t.seconds));
  if (pts.size() < 2)
    return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(pts.size());
  const double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-12)
    return std::nullopt;
  RunEstimate est;
  est.samples = pts.size();
  est.alpha = (n * sxy - sx * sy) / denom;
  const double logc = (sy - est.alpha * sx) / n;
  est.c = std::exp(logc);
  for (Int d = 2; d <= target_dmax; ++d)
    est.total_seconds += std::exp(logc + est.alpha * std::log(static_cast<double>(d)));
  return est;
}

} // namespace es4
