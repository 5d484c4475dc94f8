#pragma once

#include <vector>

#include "gridlsh/field_hash.hpp"
#include "gridlsh/integer_hull.hpp"

namespace gridlsh {

struct SampleEntry {
  i64 x = 0;
  u64 hash = 0;
  friend bool operator==(const SampleEntry&, const SampleEntry&) = default;
};

/// Sample of an integer interval under h(x) = (a x + b) mod p. Entries are
/// sorted by (hash, x); in threshold mode they are exactly the x with
/// h(x) < threshold (the threshold is exclusive, so threshold = 0 always
/// yields an empty sample).
struct IntervalSample {
  enum class Mode { kBottomK, kThreshold };
  Mode mode = Mode::kBottomK;
  u64 parameter = 0;  // k, or the threshold
  std::vector<SampleEntry> entries;
};

struct SamplerStats {
  u64 heap_pops = 0;
  HullStats hull;
};

/// argmin over [lo, hi] of h, smallest x on ties. O(log span).
SampleEntry min_hash_interval(const LinearHash1D& h, i64 lo, i64 hi,
                              SamplerStats* stats = nullptr);

/// The k lexicographically smallest (hash, x) pairs. O(k log span).
IntervalSample bottom_k(const LinearHash1D& h, i64 lo, i64 hi, u64 k,
                        SamplerStats* stats = nullptr);

/// Exactly {x in [lo, hi] : h(x) < threshold}; threshold in [0, p].
IntervalSample threshold_sample(const LinearHash1D& h, i64 lo, i64 hi,
                                u64 threshold, SamplerStats* stats = nullptr);

}  // namespace gridlsh
