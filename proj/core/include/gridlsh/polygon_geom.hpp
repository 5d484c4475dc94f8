#pragma once

#include <string>
#include <vector>

#include "gridlsh/rect_sampler.hpp"

namespace gridlsh {

/// Simple lattice polygon, no holes, at least 3 vertices, nonzero area.
/// Vertices are normalized to counterclockwise order at construction;
/// non-simple input is rejected with a diagnostic.
class GridPolygon {
 public:
  GridPolygon() = default;  // empty; only assignment targets
  static GridPolygon from_vertices(std::vector<GridPoint> vertices);

  const std::vector<GridPoint>& vertices() const { return vertices_; }
  /// Twice the area, exact (shoelace).
  i64 area_twice() const { return area_twice_; }
  double area() const { return 0.5 * static_cast<double>(area_twice_); }
  /// Squared diameter, exact; attained at a vertex pair.
  u64 diameter_sq() const { return diameter_sq_; }
  double diameter() const;
  double perimeter() const;
  GridRect bounding_box() const { return bbox_; }

 private:
  std::vector<GridPoint> vertices_;
  i64 area_twice_ = 0;
  u64 diameter_sq_ = 0;
  GridRect bbox_;
};

/// A g-by-g grid of lattice points, identified with [0, g-1]^2.
struct GridSpec {
  i64 side = 0;

  GridRect square() const { return {0, side - 1, 0, side - 1}; }
  u64 point_count() const { return static_cast<u64>(side) * static_cast<u64>(side); }
};

/// Closed-region membership (boundary inclusive, so the lattice count of a
/// polygon is interior + boundary points).
bool contains(const GridPolygon& poly, GridPoint q);

bool on_boundary(const GridPolygon& poly, GridPoint q);

/// Membership in the dilation P+(w): Euclidean distance from q to the
/// closed region is <= w. Distances are compared as exact squared
/// rationals against w^2, with a 1e-9 relative guard band absorbing the
/// rounding of w itself.
bool in_dilation(const GridPolygon& poly, GridPoint q, double w);

/// Membership in the erosion P-(w): q is inside P and at distance >= w
/// from the boundary.
bool in_erosion(const GridPolygon& poly, GridPoint q, double w);

/// Exact squared distance from q to the boundary of the polygon, as a
/// rational num/den.
struct SquaredDistance {
  i128 num = 0;
  i128 den = 1;
  double value() const {
    return static_cast<double>(static_cast<long double>(num) /
                               static_cast<long double>(den));
  }
};
SquaredDistance boundary_distance_sq(const GridPolygon& poly, GridPoint q);

/// Number of lattice points of the grid square inside the dilation P+(w)
/// (w = 0 counts the polygon itself), by bounding-box scan.
u64 grid_count(const GridPolygon& poly, double w, const GridSpec& grid);

}  // namespace gridlsh
