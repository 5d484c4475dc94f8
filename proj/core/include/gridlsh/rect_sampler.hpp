#pragma once

#include <vector>

#include "gridlsh/field_hash.hpp"
#include "gridlsh/interval_sampler.hpp"

namespace gridlsh {

struct GridPoint {
  i64 x = 0;
  i64 y = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// Axis-aligned integer rectangle {x_lo..x_hi} x {y_lo..y_hi}.
struct GridRect {
  i64 x_lo = 0;
  i64 x_hi = 0;
  i64 y_lo = 0;
  i64 y_hi = 0;

  i64 width() const { return x_hi - x_lo; }
  i64 height() const { return y_hi - y_lo; }
  bool contains(i64 x, i64 y) const {
    return x >= x_lo && x <= x_hi && y >= y_lo && y <= y_hi;
  }
  u64 point_count() const {
    return static_cast<u64>(width() + 1) * static_cast<u64>(height() + 1);
  }
};

/// The zero-set {(x,y) in r : h(x,y) = 0}, points in lexicographic (x, y)
/// order, no duplicates.
struct RectSample {
  LinearHash2D hash;
  std::vector<GridPoint> points;
};

/// Computes the zero-set in O((|result|+1) log min(width, height)). The
/// shorter axis is iterated; the choice depends on the rectangle alone, so
/// the output is identical either way.
RectSample zero_set(const LinearHash2D& h, const GridRect& r,
                    SamplerStats* stats = nullptr);

namespace detail {
/// Orientation-forced variant backing the metamorphic test.
RectSample zero_set_oriented(const LinearHash2D& h, const GridRect& r,
                             bool iterate_y, SamplerStats* stats);
}  // namespace detail

/// p * |{q in zero_set(h, r) : pred(q)}|: an (eps, p/(eps^2 mu))-estimator
/// of the number mu of points in r satisfying pred, by 2-independence.
template <typename Pred>
u64 estimate_count(Pred&& pred, const LinearHash2D& h, const GridRect& r,
                   SamplerStats* stats = nullptr) {
  RectSample s = zero_set(h, r, stats);
  u64 hits = 0;
  for (const auto& q : s.points) {
    if (pred(q.x, q.y)) ++hits;
  }
  return h.p.value() * hits;
}

}  // namespace gridlsh
