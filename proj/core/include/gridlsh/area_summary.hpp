#pragma once

#include <iosfwd>
#include <span>
#include <unordered_set>
#include <vector>

#include "gridlsh/minwise_lsh.hpp"

namespace gridlsh {

struct SummaryParams {
  double phi = 0.25;
  double eps = 0.2;
  double delta = 0.2;
  u64 seed = 0;
};

/// Multi-rate consistent-sample summary of a polygon set. For each level l
/// in [level_min, level_max] there is a prime p[l] from the dyadic interval
/// [2^(l-1), 2^l] and, per polygon, the zero-set samples of the level hash
/// inside the dilation P+(w/2), w = phi*d(P). Union and intersection area
/// queries are answered from the samples alone, escalating to finer levels
/// until enough unique samples are seen.
///
/// Immutable after build; queries are read-only and safe to run
/// concurrently.
class AreaSummary {
 public:
  struct PolygonEntry {
    GridPolygon polygon;
    u64 count = 0;  // |P+(w/2)| within the grid square, exact
    std::vector<std::vector<GridPoint>> samples;  // per level, sorted
  };

  struct QueryResult {
    u64 estimate = 0;
    unsigned level = 0;  // 0 means the rate-1 exact fallback was used
    u64 prime = 1;
    u64 sample_count = 0;
    u64 inspections = 0;  // samples touched while answering
  };

  const SummaryParams& params() const { return params_; }
  GridSpec grid() const { return {grid_side_}; }
  unsigned level_min() const { return level_min_; }
  unsigned level_max() const { return level_max_; }
  const std::vector<PolygonEntry>& polygons() const { return polygons_; }

  Prime level_prime(unsigned level) const;
  LinearHash2D level_hash(unsigned level) const;
  /// Dilation radius w_i / 2 used for sampling polygon `id`.
  double sample_radius(size_t id) const;

  QueryResult query_union(std::span<const u32> ids) const;
  QueryResult query_intersection(std::span<const u32> ids) const;

  void write(std::ostream& out) const;
  static AreaSummary read(std::istream& in);

  friend AreaSummary build_summary(std::vector<GridPolygon> polygons,
                                   const SummaryParams& params, const GridSpec& grid);

 private:
  AreaSummary() = default;
  void build_lookup_sets();
  unsigned start_level(double f_max) const;
  u64 required_samples() const;
  QueryResult fallback_union(std::span<const u32> ids, u64 inspections) const;
  QueryResult fallback_intersection(std::span<const u32> ids, u64 inspections) const;

  SummaryParams params_;
  i64 grid_side_ = 0;
  unsigned level_min_ = 0;
  unsigned level_max_ = 0;
  std::vector<u64> primes_;  // primes_[l - level_min_]
  std::vector<PolygonEntry> polygons_;
  // Per (polygon, level) hash sets for constant-time membership checks.
  std::vector<std::vector<std::unordered_set<u64>>> lookup_;
};

/// Builds the summary. Every polygon must satisfy phi*d(P) >= sqrt(8) and
/// lie inside the grid square; violations are rejected with a diagnostic
/// naming the polygon.
AreaSummary build_summary(std::vector<GridPolygon> polygons,
                          const SummaryParams& params, const GridSpec& grid);

}  // namespace gridlsh
