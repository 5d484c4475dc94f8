#pragma once

#include <string>
#include <vector>

#include "gridlsh/minwise_lsh.hpp"
#include "gridlsh/polygon_geom.hpp"

namespace gridlsh::cli {

// File ingestion. Schemas:
//   histogram: {"weights": [w0, w1, ...]}
//   polygon:   {"vertices": [[x, y], ...]}   (integer coordinates)
//   point set: {"points": [[x, y], ...]}
Histogram load_histogram(const std::string& path);
GridPolygon load_polygon(const std::string& path);
std::vector<GridPoint> load_points(const std::string& path);

}  // namespace gridlsh::cli
