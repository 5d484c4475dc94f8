#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "gridlsh/rect_sampler.hpp"

namespace gridlsh::cli {

namespace {

void write_csv(std::ostream* csv, const std::vector<u8>& values) {
  if (!csv) return;
  (*csv) << "trial,value\n";
  for (size_t i = 0; i < values.size(); ++i)
    (*csv) << i << ',' << static_cast<int>(values[i]) << '\n';
}

double binomial_sigma(double q, u64 trials) {
  q = std::clamp(q, 0.0, 1.0);
  return std::sqrt(q * (1.0 - q) / static_cast<double>(trials));
}

}  // namespace

CollisionResult collision_band(double exact_j, double eps, u64 trials, u64 collisions) {
  CollisionResult r;
  r.exact_j = exact_j;
  r.rate = static_cast<double>(collisions) / static_cast<double>(trials);
  double hi_q = std::min(1.0, exact_j + eps);
  double lo_q = std::max(0.0, exact_j - eps);
  r.band_hi = std::min(1.0, hi_q + 3.0 * binomial_sigma(hi_q, trials));
  r.band_lo = std::max(0.0, lo_q - 3.0 * binomial_sigma(lo_q, trials));
  r.pass = r.rate >= r.band_lo && r.rate <= r.band_hi;
  return r;
}

CollisionResult run_histogram_collision(const Histogram& a, const Histogram& b,
                                        u64 seed, double eps, u64 trials,
                                        std::ostream* csv) {
  if (a.total() != b.total())
    throw std::domain_error("histogram collision: weights differ (equal-weight hypothesis)");
  u64 n = std::max(a.weights.size(), b.weights.size());
  u64 weight = a.total();
  std::vector<u8> hit(trials);
  parallel_for(trials, [&](u64 t) {
    LshFunction F = LshFunction::for_histograms(derive_seed(seed, t), eps, n, weight);
    hit[t] = histogram_hash(a, F) == histogram_hash(b, F) ? 1 : 0;
  });
  write_csv(csv, hit);
  u64 c = 0;
  for (u8 v : hit) c += v;
  return collision_band(weighted_jaccard(a, b), eps, trials, c);
}

CollisionResult run_set_collision(const std::vector<GridPoint>& a,
                                  const std::vector<GridPoint>& b, u64 seed,
                                  double eps, double alpha, const GridSpec& grid,
                                  u64 trials, std::ostream* csv) {
  std::vector<u8> hit(trials);
  parallel_for(trials, [&](u64 t) {
    LshFunction F = LshFunction::for_point_sets(derive_seed(seed, t), eps, alpha, grid);
    hit[t] = point_set_hash(a, F) == point_set_hash(b, F) ? 1 : 0;
  });
  write_csv(csv, hit);
  u64 c = 0;
  for (u8 v : hit) c += v;
  return collision_band(set_jaccard(a, b), eps, trials, c);
}

CollisionResult run_polygon_collision(const GridPolygon& a, const GridPolygon& b,
                                      u64 seed, double eps, double alpha, double phi,
                                      const GridSpec& grid, u64 trials,
                                      std::ostream* csv) {
  std::vector<u8> hit(trials);
  parallel_for(trials, [&](u64 t) {
    LshFunction F = LshFunction::for_polygons(derive_seed(seed, t), eps, alpha, phi, grid);
    hit[t] = polygon_hash(a, F, grid) == polygon_hash(b, F, grid) ? 1 : 0;
  });
  write_csv(csv, hit);
  u64 c = 0;
  for (u8 v : hit) c += v;
  return collision_band(polygon_valid_jaccard(a, b, phi, grid), eps, trials, c);
}

EstimatorResult run_estimator_experiment(u64 trials, u64 seed, u64 p_value, u64 mu,
                                         double eps, std::ostream* csv) {
  Prime p(p_value);
  if (mu == 0 || mu > p_value * p_value)
    throw std::domain_error("estimator experiment: mu must be in [1, p^2]");
  GridRect rect{0, static_cast<i64>(p_value) - 1, 0, static_cast<i64>(p_value) - 1};
  std::vector<u64> estimates(trials);
  std::vector<u8> fail(trials);
  parallel_for(trials, [&](u64 t) {
    LinearHash2D h = LinearHash2D::from_seed(derive_seed(seed, t), p);
    u64 kept = 0;
    for (const auto& q : zero_set(h, rect).points) {
      u64 index = static_cast<u64>(q.x) * p_value + static_cast<u64>(q.y);
      if (index < mu) ++kept;
    }
    u64 x = p_value * kept;
    estimates[t] = x;
    double err = std::abs(static_cast<double>(x) - static_cast<double>(mu));
    fail[t] = err > eps * static_cast<double>(mu) ? 1 : 0;
  });
  if (csv) {
    (*csv) << "trial,estimate\n";
    for (size_t i = 0; i < estimates.size(); ++i)
      (*csv) << i << ',' << estimates[i] << '\n';
  }
  u64 failures = 0;
  for (u8 v : fail) failures += v;
  EstimatorResult r;
  r.failure_rate = static_cast<double>(failures) / static_cast<double>(trials);
  r.bound = static_cast<double>(p_value) / (eps * eps * static_cast<double>(mu));
  r.limit = r.bound + 3.0 * binomial_sigma(r.bound, trials);
  r.pass = r.failure_rate <= r.limit;
  return r;
}

double weighted_jaccard(const Histogram& a, const Histogram& b) {
  size_t n = std::max(a.weights.size(), b.weights.size());
  u64 num = 0, den = 0;
  for (size_t i = 0; i < n; ++i) {
    u64 x = i < a.weights.size() ? a.weights[i] : 0;
    u64 y = i < b.weights.size() ? b.weights[i] : 0;
    num += std::min(x, y);
    den += std::max(x, y);
  }
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

double set_jaccard(std::vector<GridPoint> a, std::vector<GridPoint> b) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  std::vector<GridPoint> inter;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
  double u = static_cast<double>(a.size() + b.size() - inter.size());
  return u == 0 ? 0.0 : static_cast<double>(inter.size()) / u;
}

double polygon_valid_jaccard(const GridPolygon& a, const GridPolygon& b, double phi,
                             const GridSpec& grid) {
  double ra = phi * a.diameter() / 2.0;
  double rb = phi * b.diameter() / 2.0;
  auto box_of = [&](const GridPolygon& poly, double r) {
    GridRect box = poly.bounding_box();
    i64 pad = static_cast<i64>(std::ceil(r)) + 1;
    return GridRect{std::max<i64>(0, box.x_lo - pad), std::min<i64>(grid.side - 1, box.x_hi + pad),
                    std::max<i64>(0, box.y_lo - pad), std::min<i64>(grid.side - 1, box.y_hi + pad)};
  };
  GridRect ba = box_of(a, ra), bb = box_of(b, rb);
  GridRect box{std::min(ba.x_lo, bb.x_lo), std::max(ba.x_hi, bb.x_hi),
               std::min(ba.y_lo, bb.y_lo), std::max(ba.y_hi, bb.y_hi)};
  u64 inter = 0, uni = 0;
  for (i64 y = box.y_lo; y <= box.y_hi; ++y) {
    for (i64 x = box.x_lo; x <= box.x_hi; ++x) {
      bool in_a = in_dilation(a, {x, y}, ra);
      bool in_b = in_dilation(b, {x, y}, rb);
      if (in_a || in_b) ++uni;
      if (in_a && in_b) ++inter;
    }
  }
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace gridlsh::cli
