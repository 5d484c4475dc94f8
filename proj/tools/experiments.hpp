#pragma once

#include <atomic>
#include <iosfwd>
#include <thread>
#include <vector>

#include "gridlsh/minwise_lsh.hpp"

namespace gridlsh::cli {

/// Runs fn(0..n-1) on a small worker pool keyed by trial index.
template <typename Fn>
void parallel_for(u64 n, Fn&& fn) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers > 8) workers = 8;
  std::atomic<u64> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      constexpr u64 kChunk = 64;
      for (;;) {
        u64 base = next.fetch_add(kChunk);
        if (base >= n) return;
        u64 end = std::min(n, base + kChunk);
        for (u64 i = base; i < end; ++i) fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

struct CollisionResult {
  double rate = 0.0;
  double exact_j = 0.0;
  double band_lo = 0.0;
  double band_hi = 1.0;
  bool pass = false;
};

/// Acceptance band J +- eps +- 3 binomial sigma (sigma taken at the band
/// boundary hypothesis).
CollisionResult collision_band(double exact_j, double eps, u64 trials, u64 collisions);

CollisionResult run_histogram_collision(const Histogram& a, const Histogram& b,
                                        u64 seed, double eps, u64 trials,
                                        std::ostream* csv);

CollisionResult run_set_collision(const std::vector<GridPoint>& a,
                                  const std::vector<GridPoint>& b, u64 seed,
                                  double eps, double alpha, const GridSpec& grid,
                                  u64 trials, std::ostream* csv);

CollisionResult run_polygon_collision(const GridPolygon& a, const GridPolygon& b,
                                      u64 seed, double eps, double alpha, double phi,
                                      const GridSpec& grid, u64 trials,
                                      std::ostream* csv);

struct EstimatorResult {
  double failure_rate = 0.0;
  double bound = 0.0;   // p / (eps^2 mu)
  double limit = 0.0;   // bound + 3 sigma
  bool pass = false;
};

/// Concentration experiment for the zero-set count estimator: S = the first
/// mu points of [0,p)^2 in row-major order, X = p * |S ∩ zero_set| per
/// seeded hash draw; failures are |X - mu| > eps * mu.
EstimatorResult run_estimator_experiment(u64 trials, u64 seed, u64 p, u64 mu,
                                         double eps, std::ostream* csv);

double weighted_jaccard(const Histogram& a, const Histogram& b);
double set_jaccard(std::vector<GridPoint> a, std::vector<GridPoint> b);
/// |P1+(w1/2) ∩ P2+(w2/2)| / |P1+(w1/2) ∪ P2+(w2/2)| by grid counting; a
/// valid fuzzy-model Jaccard value for the pair.
double polygon_valid_jaccard(const GridPolygon& a, const GridPolygon& b, double phi,
                             const GridSpec& grid);

}  // namespace gridlsh::cli
