#include "gridlsh/integer_hull.hpp"

#include <stdexcept>

namespace gridlsh {

namespace {

// The two chains are computed by a mutually recursive Euclidean descent.
// hull_upper handles the upper chain of floor-points below a line of slope
// a/c; its interior vertices are the leftmost lattice points of each row,
// which form a ceil-linear sequence in the row index, i.e. a hull_lower
// instance with the roles of the axes exchanged (and slope c/a, so the
// slope pair reduces like gcd). hull_lower is the mirror statement for the
// lower chain of ceil-points above the line.
//
// Throughout: c >= 1, n >= 0, slopes are non-negative after normalization,
// and every coordinate produced is a coordinate of the original problem, so
// intermediate values stay within the caller's range.

std::vector<HullVertex> hull_upper(i64 a, i64 b, i64 c, i64 n, HullStats& st);
std::vector<HullVertex> hull_lower(i64 a, i64 b, i64 c, i64 n, HullStats& st);

// Upper chain of {(x, floor((a x + b) / c)) : 0 <= x <= n}.
std::vector<HullVertex> hull_upper(i64 a, i64 b, i64 c, i64 n, HullStats& st) {
  ++st.levels;
  i64 y_shift = floor_div(b, c);
  b -= y_shift * c;
  i64 shear = floor_div(a, c);
  a -= shear * c;

  std::vector<HullVertex> out;
  if (n == 0) {
    out.push_back({0, 0});
  } else {
    i64 m = floor_div128((i128)a * n + b, c);
    if (a == 0 || m == 0) {
      out.push_back({0, 0});
      out.push_back({n, 0});
    } else {
      // Leftmost point of row y (1 <= y <= m) sits at x = ceil((c y - b)/a).
      auto child = hull_lower(c, c - b, a, m - 1, st);
      out.reserve(child.size() + 2);
      out.push_back({0, 0});
      for (const auto& v : child) out.push_back({v.y, v.x + 1});
      if (out.back().x != n) out.push_back({n, m});
    }
  }
  if (shear != 0 || y_shift != 0) {
    for (auto& v : out) v.y += shear * v.x + y_shift;
  }
  return out;
}

// Lower chain of {(x, ceil((a x + b) / c)) : 0 <= x <= n}.
std::vector<HullVertex> hull_lower(i64 a, i64 b, i64 c, i64 n, HullStats& st) {
  ++st.levels;
  i64 y_shift = floor_div(b, c);
  b -= y_shift * c;
  i64 shear = floor_div(a, c);
  a -= shear * c;
  i64 g0 = (b > 0) ? 1 : 0;

  std::vector<HullVertex> out;
  if (n == 0) {
    out.push_back({0, g0});
  } else {
    i64 m = floor_div128((i128)a * n + b + c - 1, c);
    if (a == 0 || m == g0) {
      out.push_back({0, g0});
      out.push_back({n, g0});
    } else {
      // Rightmost point of row y (g0 <= y < m) sits at x = floor((c y - b)/a).
      auto child = hull_upper(c, c * g0 - b, a, m - 1 - g0, st);
      out.reserve(child.size() + 2);
      if (child.front().y > 0) out.push_back({0, g0});
      for (const auto& v : child) out.push_back({v.y, v.x + g0});
      out.push_back({n, m});
    }
  }
  if (shear != 0 || y_shift != 0) {
    for (auto& v : out) v.y += shear * v.x + y_shift;
  }
  return out;
}

struct LocalLine {
  i64 a = 0;      // slope numerator reduced into [0, p)
  i64 r = 0;      // residue of the intercept at the local origin, in [0, p)
  i64 q = 0;      // floor((a*x_lo + intercept)/p), the global y offset
  i64 p = 0;
  i64 span = 0;   // x_hi - x_lo
};

LocalLine localize(const PolyHashLine& line) {
  const u64 p = line.denom.value();
  if (line.x_lo < 0 || line.x_lo > line.x_hi)
    throw std::invalid_argument("PolyHashLine: need 0 <= x_lo <= x_hi");
  if (line.slope_num >= p)
    throw std::invalid_argument("PolyHashLine: slope must be in [0, denom)");
  LocalLine loc;
  loc.a = static_cast<i64>(line.slope_num);
  loc.p = static_cast<i64>(p);
  loc.span = line.x_hi - line.x_lo;
  i128 at_origin = (i128)loc.a * line.x_lo + line.intercept_num;
  loc.q = floor_div128(at_origin, loc.p);
  loc.r = static_cast<i64>(at_origin - (i128)loc.q * loc.p);
  return loc;
}

// Minimum residue over local x in [lo, hi], smallest x on ties.
ClosestPoint closest_local(const LocalLine& loc, i64 lo, i64 hi, HullStats& st) {
  if (loc.a == 0) {
    ++st.vertices;
    return {lo, static_cast<u64>(loc.r)};
  }
  i128 at_lo = (i128)loc.a * lo + loc.r;
  i64 q = floor_div128(at_lo, loc.p);
  i64 r = static_cast<i64>(at_lo - (i128)q * loc.p);
  auto hull = hull_upper(loc.a, r, loc.p, hi - lo, st);
  st.vertices += hull.size();
  ClosestPoint best{lo, static_cast<u64>(loc.p)};
  for (const auto& v : hull) {
    u64 res = static_cast<u64>((i128)loc.a * v.x + r - (i128)loc.p * v.y);
    if (res < best.dist_num) {
      best.dist_num = res;
      best.x = lo + v.x;
    }
  }
  return best;
}

// In-order traversal with an explicit work stack (the reported point can
// split the interval very unevenly, so plain recursion could get as deep as
// the output size).
void band_walk(const LocalLine& loc, i64 lo, i64 hi, u64 band,
               std::vector<BandPoint>& out, HullStats& st) {
  struct Task {
    i64 lo, hi;
    bool emit;
  };
  std::vector<Task> stack;
  stack.push_back({lo, hi, false});
  while (!stack.empty()) {
    Task t = stack.back();
    stack.pop_back();
    if (t.emit) {
      i128 num = (i128)loc.a * t.lo + loc.r;
      out.push_back({t.lo, loc.q + floor_div128(num, loc.p)});
      continue;
    }
    if (t.lo > t.hi) continue;
    ClosestPoint c = closest_local(loc, t.lo, t.hi, st);
    if (c.dist_num > band) continue;
    stack.push_back({c.x + 1, t.hi, false});
    stack.push_back({c.x, c.x, true});
    stack.push_back({t.lo, c.x - 1, false});
  }
}

}  // namespace

std::vector<HullVertex> upper_hull(const PolyHashLine& line, HullStats* stats) {
  HullStats local;
  HullStats& st = stats ? *stats : local;
  LocalLine loc = localize(line);
  auto hull = hull_upper(loc.a, loc.r, loc.p, loc.span, st);
  st.vertices += hull.size();
  for (auto& v : hull) {
    v.x += line.x_lo;
    v.y += loc.q;
  }
  return hull;
}

ClosestPoint closest_below(const PolyHashLine& line, HullStats* stats) {
  HullStats local;
  HullStats& st = stats ? *stats : local;
  LocalLine loc = localize(line);
  ClosestPoint c;
  if (loc.a == 0) {
    c = {0, static_cast<u64>(loc.r)};
    ++st.vertices;
  } else {
    c = closest_local(loc, 0, loc.span, st);
  }
  c.x += line.x_lo;
  return c;
}

std::vector<BandPoint> band_points(const PolyHashLine& line, u64 band_num,
                                   HullStats* stats) {
  HullStats local;
  HullStats& st = stats ? *stats : local;
  LocalLine loc = localize(line);
  if (band_num >= static_cast<u64>(loc.p))
    throw std::invalid_argument("band_points: band must be in [0, denom)");
  std::vector<BandPoint> out;
  if (loc.a == 0) {
    if (static_cast<u64>(loc.r) <= band_num) {
      out.reserve(static_cast<size_t>(loc.span) + 1);
      for (i64 x = 0; x <= loc.span; ++x) out.push_back({x, loc.q});
    }
  } else {
    band_walk(loc, 0, loc.span, band_num, out, st);
  }
  for (auto& bp : out) bp.x += line.x_lo;
  return out;
}

}  // namespace gridlsh
