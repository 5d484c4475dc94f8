#include "gridlsh/polygon_geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gridlsh {

namespace {

i128 cross(GridPoint o, GridPoint a, GridPoint b) {
  return (i128)(a.x - o.x) * (b.y - o.y) - (i128)(a.y - o.y) * (b.x - o.x);
}

bool point_on_segment(GridPoint q, GridPoint a, GridPoint b) {
  if (cross(a, b, q) != 0) return false;
  return q.x >= std::min(a.x, b.x) && q.x <= std::max(a.x, b.x) &&
         q.y >= std::min(a.y, b.y) && q.y <= std::max(a.y, b.y);
}

int sign(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Closed-segment intersection test, exact.
bool segments_intersect(GridPoint a, GridPoint b, GridPoint c, GridPoint d) {
  int d1 = sign(cross(c, d, a));
  int d2 = sign(cross(c, d, b));
  int d3 = sign(cross(a, b, c));
  int d4 = sign(cross(a, b, d));
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && point_on_segment(a, c, d)) return true;
  if (d2 == 0 && point_on_segment(b, c, d)) return true;
  if (d3 == 0 && point_on_segment(c, a, b)) return true;
  if (d4 == 0 && point_on_segment(d, a, b)) return true;
  return false;
}

// Squared distance from q to segment [a, b] as a rational.
SquaredDistance segment_distance_sq(GridPoint q, GridPoint a, GridPoint b) {
  i64 dx = b.x - a.x, dy = b.y - a.y;
  i64 ex = q.x - a.x, ey = q.y - a.y;
  i128 t_num = (i128)dx * ex + (i128)dy * ey;
  i128 t_den = (i128)dx * dx + (i128)dy * dy;
  if (t_den == 0 || t_num <= 0)
    return {(i128)ex * ex + (i128)ey * ey, 1};
  if (t_num >= t_den) {
    i64 fx = q.x - b.x, fy = q.y - b.y;
    return {(i128)fx * fx + (i128)fy * fy, 1};
  }
  i128 c = (i128)dx * ey - (i128)dy * ex;
  return {c * c, t_den};
}

// num/den <= w^2, with a 1e-9 relative guard keeping the locus closed.
bool dist_sq_le(const SquaredDistance& d, double w) {
  long double lhs = static_cast<long double>(d.num);
  long double rhs = static_cast<long double>(w) * w * static_cast<long double>(d.den);
  return lhs <= rhs + 1e-9L * (rhs + 1.0L);
}

bool dist_sq_ge(const SquaredDistance& d, double w) {
  long double lhs = static_cast<long double>(d.num);
  long double rhs = static_cast<long double>(w) * w * static_cast<long double>(d.den);
  return lhs >= rhs - 1e-9L * (rhs + 1.0L);
}

}  // namespace

GridPolygon GridPolygon::from_vertices(std::vector<GridPoint> vertices) {
  size_t n = vertices.size();
  if (n < 3) throw std::invalid_argument("GridPolygon: needs at least 3 vertices");
  for (size_t i = 0; i < n; ++i) {
    if (vertices[i] == vertices[(i + 1) % n])
      throw std::invalid_argument("GridPolygon: repeated consecutive vertex");
  }
  // Reject spikes (an edge folding back over its predecessor).
  for (size_t i = 0; i < n; ++i) {
    GridPoint a = vertices[i], b = vertices[(i + 1) % n], c = vertices[(i + 2) % n];
    if (cross(a, b, c) == 0) {
      i128 dot = (i128)(b.x - a.x) * (c.x - b.x) + (i128)(b.y - a.y) * (c.y - b.y);
      if (dot < 0) throw std::invalid_argument("GridPolygon: degenerate spike vertex");
    }
  }
  // Non-adjacent edges must not touch.
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (segments_intersect(vertices[i], vertices[(i + 1) % n], vertices[j],
                             vertices[(j + 1) % n]))
        throw std::invalid_argument("GridPolygon: not simple (edges intersect)");
    }
  }

  i128 twice = 0;
  for (size_t i = 0; i < n; ++i) {
    const GridPoint& a = vertices[i];
    const GridPoint& b = vertices[(i + 1) % n];
    twice += (i128)a.x * b.y - (i128)a.y * b.x;
  }
  if (twice == 0) throw std::invalid_argument("GridPolygon: zero area");
  if (twice < 0) {
    std::reverse(vertices.begin(), vertices.end());
    twice = -twice;
  }
  if (twice > std::numeric_limits<i64>::max())
    throw std::invalid_argument("GridPolygon: area overflows 64 bits");

  GridPolygon poly;
  poly.vertices_ = std::move(vertices);
  poly.area_twice_ = static_cast<i64>(twice);
  u64 dsq = 0;
  GridRect box{poly.vertices_[0].x, poly.vertices_[0].x, poly.vertices_[0].y,
               poly.vertices_[0].y};
  for (size_t i = 0; i < n; ++i) {
    box.x_lo = std::min(box.x_lo, poly.vertices_[i].x);
    box.x_hi = std::max(box.x_hi, poly.vertices_[i].x);
    box.y_lo = std::min(box.y_lo, poly.vertices_[i].y);
    box.y_hi = std::max(box.y_hi, poly.vertices_[i].y);
    for (size_t j = i + 1; j < n; ++j) {
      i64 dx = poly.vertices_[i].x - poly.vertices_[j].x;
      i64 dy = poly.vertices_[i].y - poly.vertices_[j].y;
      i128 d = (i128)dx * dx + (i128)dy * dy;
      if (d > (i128)std::numeric_limits<u64>::max())
        throw std::invalid_argument("GridPolygon: diameter overflows 64 bits");
      dsq = std::max<u64>(dsq, static_cast<u64>(d));
    }
  }
  poly.diameter_sq_ = dsq;
  poly.bbox_ = box;
  return poly;
}

double GridPolygon::diameter() const {
  return std::sqrt(static_cast<double>(diameter_sq_));
}

double GridPolygon::perimeter() const {
  double per = 0.0;
  size_t n = vertices_.size();
  for (size_t i = 0; i < n; ++i) {
    i64 dx = vertices_[(i + 1) % n].x - vertices_[i].x;
    i64 dy = vertices_[(i + 1) % n].y - vertices_[i].y;
    per += std::sqrt(static_cast<double>(dx * dx + dy * dy));
  }
  return per;
}

bool on_boundary(const GridPolygon& poly, GridPoint q) {
  const auto& v = poly.vertices();
  size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    if (point_on_segment(q, v[i], v[(i + 1) % n])) return true;
  }
  return false;
}

bool contains(const GridPolygon& poly, GridPoint q) {
  const GridRect box = poly.bounding_box();
  if (!box.contains(q.x, q.y)) return false;
  const auto& v = poly.vertices();
  size_t n = v.size();
  bool inside = false;
  for (size_t i = 0; i < n; ++i) {
    GridPoint a = v[i], b = v[(i + 1) % n];
    if (point_on_segment(q, a, b)) return true;
    if ((a.y > q.y) != (b.y > q.y)) {
      // Crossing iff the edge passes strictly right of q at height q.y.
      i128 num = (i128)(a.x - q.x) * (b.y - a.y) + (i128)(q.y - a.y) * (b.x - a.x);
      if (b.y > a.y ? num > 0 : num < 0) inside = !inside;
    }
  }
  return inside;
}

SquaredDistance boundary_distance_sq(const GridPolygon& poly, GridPoint q) {
  const auto& v = poly.vertices();
  size_t n = v.size();
  SquaredDistance best = segment_distance_sq(q, v[0], v[1]);
  for (size_t i = 1; i < n; ++i) {
    SquaredDistance d = segment_distance_sq(q, v[i], v[(i + 1) % n]);
    if (d.num * best.den < best.num * d.den) best = d;
  }
  return best;
}

bool in_dilation(const GridPolygon& poly, GridPoint q, double w) {
  if (w < 0) throw std::domain_error("in_dilation: w must be >= 0");
  if (contains(poly, q)) return true;
  const GridRect box = poly.bounding_box();
  double wd = w + 1.0;
  if (static_cast<double>(q.x) < box.x_lo - wd || static_cast<double>(q.x) > box.x_hi + wd ||
      static_cast<double>(q.y) < box.y_lo - wd || static_cast<double>(q.y) > box.y_hi + wd)
    return false;
  return dist_sq_le(boundary_distance_sq(poly, q), w);
}

bool in_erosion(const GridPolygon& poly, GridPoint q, double w) {
  if (w < 0) throw std::domain_error("in_erosion: w must be >= 0");
  if (!contains(poly, q)) return false;
  if (w == 0) return true;
  return dist_sq_ge(boundary_distance_sq(poly, q), w);
}

u64 grid_count(const GridPolygon& poly, double w, const GridSpec& grid) {
  if (grid.side <= 0) throw std::invalid_argument("grid_count: empty grid");
  const GridRect box = poly.bounding_box();
  i64 pad = static_cast<i64>(std::ceil(w)) + 1;
  i64 x0 = std::max<i64>(0, box.x_lo - pad);
  i64 x1 = std::min<i64>(grid.side - 1, box.x_hi + pad);
  i64 y0 = std::max<i64>(0, box.y_lo - pad);
  i64 y1 = std::min<i64>(grid.side - 1, box.y_hi + pad);
  u64 count = 0;
  for (i64 y = y0; y <= y1; ++y) {
    for (i64 x = x0; x <= x1; ++x) {
      if (in_dilation(poly, {x, y}, w)) ++count;
    }
  }
  return count;
}

}  // namespace gridlsh
