#pragma once

#include <vector>

#include "gridlsh/field_hash.hpp"
#include "gridlsh/numeric.hpp"

namespace gridlsh {

/// A rational line segment y = (slope_num * x + intercept_num) / denom over
/// x in [x_lo, x_hi]. All geometry on it is exact: vertical distances are
/// residues (slope_num * x + intercept_num) mod denom, never floating point.
/// The intercept is stored as a full signed 64-bit integer (translations may
/// push it past denom) and reduced mod denom only inside residue
/// computations.
struct PolyHashLine {
  u64 slope_num = 0;    // in [0, denom)
  i64 intercept_num = 0;
  Prime denom;
  i64 x_lo = 0;
  i64 x_hi = 0;
};

/// Lattice point on or below the line: y = floor((slope*x + intercept)/denom).
struct HullVertex {
  i64 x = 0;
  i64 y = 0;
  friend bool operator==(const HullVertex&, const HullVertex&) = default;
};

struct HullStats {
  u64 levels = 0;    // recursion levels walked
  u64 vertices = 0;  // hull vertices emitted
};

/// Upper integer convex hull of the lattice points on or below the segment.
/// Vertices come back in strictly increasing x, starting at x_lo and ending
/// at x_hi; no lattice point on or below the line lies strictly above the
/// returned polyline, and the list contains every vertex of the minimal
/// hull (possibly with extra collinear points at recursion seams). The size
/// is O(log(x_hi - x_lo)).
std::vector<HullVertex> upper_hull(const PolyHashLine& line, HullStats* stats = nullptr);

struct ClosestPoint {
  i64 x = 0;
  u64 dist_num = 0;  // minimum residue, the vertical distance numerator
};

/// The x in [x_lo, x_hi] minimizing (slope*x + intercept) mod denom, ties
/// broken toward the smallest x.
ClosestPoint closest_below(const PolyHashLine& line, HullStats* stats = nullptr);

struct BandPoint {
  i64 x = 0;
  i64 k = 0;  // floor((slope*x + intercept)/denom)
  friend bool operator==(const BandPoint&, const BandPoint&) = default;
};

/// All x in [x_lo, x_hi] whose residue is <= band_num, sorted by x, each
/// paired with the floor value k. Cost O((count+1) log span): the interval
/// is split at each reported point and subintervals whose minimum residue
/// exceeds the band are abandoned.
std::vector<BandPoint> band_points(const PolyHashLine& line, u64 band_num,
                                   HullStats* stats = nullptr);

}  // namespace gridlsh
