#include "gridlsh/interval_sampler.hpp"

#include <queue>
#include <stdexcept>

namespace gridlsh {

namespace {

void check_bounds(const LinearHash1D& h, i64 lo, i64 hi) {
  i64 p = static_cast<i64>(h.p.value());
  if (lo < 0 || lo > hi || hi >= p)
    throw std::domain_error("interval sampler: need 0 <= lo <= hi < p");
  if (h.a >= h.p.value() || h.b >= h.p.value())
    throw std::domain_error("interval sampler: hash parameters not in [0, p)");
}

PolyHashLine line_for(const LinearHash1D& h, i64 lo, i64 hi) {
  PolyHashLine line;
  line.slope_num = h.a;
  line.intercept_num = static_cast<i64>(h.b);
  line.denom = h.p;
  line.x_lo = lo;
  line.x_hi = hi;
  return line;
}

struct Segment {
  u64 hash;
  i64 x;
  i64 lo;
  i64 hi;
  bool operator>(const Segment& o) const {
    if (hash != o.hash) return hash > o.hash;
    return x > o.x;
  }
};

// Shared heap-and-split driver: pops segments in (hash, x) order, reports
// the minimizer, splits the segment around it. `stop_hash` is exclusive.
std::vector<SampleEntry> extract(const LinearHash1D& h, i64 lo, i64 hi,
                                 u64 max_count, u64 stop_hash,
                                 SamplerStats* stats) {
  std::vector<SampleEntry> out;
  if (max_count == 0) return out;
  SamplerStats local;
  SamplerStats& st = stats ? *stats : local;

  std::priority_queue<Segment, std::vector<Segment>, std::greater<Segment>> heap;
  auto push = [&](i64 a, i64 b) {
    if (a > b) return;
    ClosestPoint c = closest_below(line_for(h, a, b), &st.hull);
    heap.push({c.dist_num, c.x, a, b});
  };
  push(lo, hi);
  while (!heap.empty() && out.size() < max_count) {
    Segment s = heap.top();
    heap.pop();
    ++st.heap_pops;
    if (s.hash >= stop_hash) break;
    out.push_back({s.x, s.hash});
    push(s.lo, s.x - 1);
    push(s.x + 1, s.hi);
  }
  return out;
}

}  // namespace

SampleEntry min_hash_interval(const LinearHash1D& h, i64 lo, i64 hi,
                              SamplerStats* stats) {
  check_bounds(h, lo, hi);
  SamplerStats local;
  SamplerStats& st = stats ? *stats : local;
  ClosestPoint c = closest_below(line_for(h, lo, hi), &st.hull);
  return {c.x, c.dist_num};
}

IntervalSample bottom_k(const LinearHash1D& h, i64 lo, i64 hi, u64 k,
                        SamplerStats* stats) {
  check_bounds(h, lo, hi);
  IntervalSample s;
  s.mode = IntervalSample::Mode::kBottomK;
  s.parameter = k;
  s.entries = extract(h, lo, hi, k, h.p.value(), stats);
  return s;
}

IntervalSample threshold_sample(const LinearHash1D& h, i64 lo, i64 hi,
                                u64 threshold, SamplerStats* stats) {
  check_bounds(h, lo, hi);
  if (threshold > h.p.value())
    throw std::domain_error("threshold_sample: threshold must be in [0, p]");
  IntervalSample s;
  s.mode = IntervalSample::Mode::kThreshold;
  s.parameter = threshold;
  if (threshold > 0) {
    u64 all = static_cast<u64>(hi - lo) + 1;
    s.entries = extract(h, lo, hi, all, threshold, stats);
  }
  return s;
}

}  // namespace gridlsh
