#pragma once

#include <algorithm>

#include "gridlsh/interval_sampler.hpp"
#include "gridlsh/rect_sampler.hpp"

// Exhaustive-scan reference implementations of the samplers. They back the
// CLI --oracle mode and differential tests; deliberately independent of the
// hull machinery.

namespace gridlsh::reference {

inline void check_interval(const LinearHash1D& h, i64 lo, i64 hi) {
  if (lo < 0 || lo > hi || hi >= static_cast<i64>(h.p.value()))
    throw std::domain_error("interval sampler: need 0 <= lo <= hi < p");
}

inline SampleEntry min_hash_interval(const LinearHash1D& h, i64 lo, i64 hi) {
  check_interval(h, lo, hi);
  SampleEntry best{lo, eval_1d(h, static_cast<u64>(lo))};
  for (i64 x = lo + 1; x <= hi; ++x) {
    u64 v = eval_1d(h, static_cast<u64>(x));
    if (v < best.hash) best = {x, v};
  }
  return best;
}

inline IntervalSample bottom_k(const LinearHash1D& h, i64 lo, i64 hi, u64 k) {
  check_interval(h, lo, hi);
  IntervalSample s;
  s.mode = IntervalSample::Mode::kBottomK;
  s.parameter = k;
  for (i64 x = lo; x <= hi; ++x) s.entries.push_back({x, eval_1d(h, static_cast<u64>(x))});
  std::sort(s.entries.begin(), s.entries.end(), [](const SampleEntry& a, const SampleEntry& b) {
    return a.hash != b.hash ? a.hash < b.hash : a.x < b.x;
  });
  if (s.entries.size() > k) s.entries.resize(k);
  return s;
}

inline IntervalSample threshold_sample(const LinearHash1D& h, i64 lo, i64 hi, u64 threshold) {
  check_interval(h, lo, hi);
  if (threshold > h.p.value())
    throw std::domain_error("threshold_sample: threshold must be in [0, p]");
  IntervalSample s;
  s.mode = IntervalSample::Mode::kThreshold;
  s.parameter = threshold;
  for (i64 x = lo; x <= hi; ++x) {
    u64 v = eval_1d(h, static_cast<u64>(x));
    if (v < threshold) s.entries.push_back({x, v});
  }
  std::sort(s.entries.begin(), s.entries.end(), [](const SampleEntry& a, const SampleEntry& b) {
    return a.hash != b.hash ? a.hash < b.hash : a.x < b.x;
  });
  return s;
}

inline RectSample zero_set(const LinearHash2D& h, const GridRect& r) {
  const i64 p = static_cast<i64>(h.p.value());
  if (r.x_lo < 0 || r.x_lo > r.x_hi || r.x_hi >= p || r.y_lo < 0 || r.y_lo > r.y_hi ||
      r.y_hi >= p)
    throw std::domain_error("zero_set: rectangle must lie within [0, p)^2");
  RectSample out;
  out.hash = h;
  for (i64 x = r.x_lo; x <= r.x_hi; ++x) {
    for (i64 y = r.y_lo; y <= r.y_hi; ++y) {
      if (eval_2d(h, static_cast<u64>(x), static_cast<u64>(y)) == 0)
        out.points.push_back({x, y});
    }
  }
  return out;
}

}  // namespace gridlsh::reference
