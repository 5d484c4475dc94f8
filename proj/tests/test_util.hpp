#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "gridlsh/polygon_geom.hpp"

namespace testutil {

using namespace gridlsh;

// Convex hull (monotone chain) of lattice points, counterclockwise.
inline std::vector<GridPoint> convex_hull(std::vector<GridPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return {};
  auto cross = [](GridPoint o, GridPoint a, GridPoint b) {
    return (i128)(a.x - o.x) * (b.y - o.y) - (i128)(a.y - o.y) * (b.x - o.x);
  };
  std::vector<GridPoint> hull(2 * pts.size());
  size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  std::reverse(hull.begin(), hull.end());  // counterclockwise
  return hull;
}

inline GridPolygon random_convex_polygon(SeededRng& rng, i64 cx, i64 cy, i64 radius) {
  for (;;) {
    std::vector<GridPoint> pts;
    size_t n = 5 + rng.next_below(8);
    for (size_t i = 0; i < n; ++i) {
      double ang = rng.next_unit() * 2.0 * M_PI;
      double r = radius * (0.4 + 0.6 * rng.next_unit());
      pts.push_back({cx + static_cast<i64>(std::lround(r * std::cos(ang))),
                     cy + static_cast<i64>(std::lround(r * std::sin(ang)))});
    }
    auto hull = convex_hull(std::move(pts));
    if (hull.size() < 3) continue;
    try {
      return GridPolygon::from_vertices(std::move(hull));
    } catch (const std::invalid_argument&) {
      continue;
    }
  }
}

// Star-shaped simple polygon around (cx, cy).
inline GridPolygon random_simple_polygon(SeededRng& rng, i64 cx, i64 cy, i64 radius) {
  for (;;) {
    size_t n = 4 + rng.next_below(9);
    std::vector<double> angles(n);
    for (auto& a : angles) a = rng.next_unit() * 2.0 * M_PI;
    std::sort(angles.begin(), angles.end());
    std::vector<GridPoint> pts;
    for (double a : angles) {
      double r = radius * (0.3 + 0.7 * rng.next_unit());
      pts.push_back({cx + static_cast<i64>(std::lround(r * std::cos(a))),
                     cy + static_cast<i64>(std::lround(r * std::sin(a)))});
    }
    std::vector<GridPoint> dedup;
    for (const auto& p : pts) {
      if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
    }
    if (dedup.size() >= 2 && dedup.front() == dedup.back()) dedup.pop_back();
    if (dedup.size() < 3) continue;
    try {
      return GridPolygon::from_vertices(std::move(dedup));
    } catch (const std::invalid_argument&) {
      continue;
    }
  }
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

inline CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(GRIDLSH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliResult r;
  if (!pipe) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline void write_file(const std::string& path, const std::string& content) {
  FILE* f = fopen(path.c_str(), "w");
  if (!f) {
    std::perror(path.c_str());
    std::abort();
  }
  fwrite(content.data(), 1, content.size(), f);
  fclose(f);
}

}  // namespace testutil
