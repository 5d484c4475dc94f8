#include "gridlsh/minwise_lsh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gridlsh/interval_sampler.hpp"

namespace gridlsh {

namespace {

// p* = smallest prime >= eps^3 * density / 24. Rounding up to a prime at
// most doubles the target (Bertrand), which keeps p* below eps^3*density/12
// and thereby inside the transform's hypothesis whenever the target is >= 2.
Prime sampling_prime_for(double eps, double density) {
  double target = eps * eps * eps * density / 24.0;
  u64 t = target <= 2.0 ? 2 : static_cast<u64>(std::ceil(target));
  return next_prime_at_least(t);
}

// Field prime for the threshold flavors: large enough that tau = round(p/p*)
// approximates 1/p* to relative error well below eps, and that packed keys
// stay inside the PolyHash field.
Prime field_prime_for(u64 pstar, u64 min_value) {
  u64 need = std::max(pstar * 4096, min_value);
  unsigned level = 2;
  while ((1ull << (level - 1)) < need && level < 62) ++level;
  return prime_in_dyadic(level);
}

u64 round_div(u64 num, u64 den) { return (num + den / 2) / den; }

}  // namespace

Histogram Histogram::from_weights(std::vector<u64> w) {
  Histogram h;
  h.weights = std::move(w);
  if (h.total() == 0)
    throw std::invalid_argument("Histogram: total weight must be positive");
  return h;
}

u64 Histogram::total() const {
  u64 sum = 0;
  for (u64 v : weights) {
    if (sum + v < sum) throw std::overflow_error("Histogram: weight overflow");
    sum += v;
  }
  return sum;
}

LshFunction LshFunction::for_histograms(u64 seed, double eps, u64 max_index, u64 weight) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("LshFunction: eps must be in (0,1)");
  if (max_index == 0 || weight == 0)
    throw std::invalid_argument("LshFunction: max_index and weight must be positive");
  LshFunction F;
  F.flavor_ = Flavor::kHistogram;
  F.seed_ = seed;
  F.eps_ = eps;
  F.max_index_ = max_index;
  F.weight_ = weight;
  F.sampling_prime_ = sampling_prime_for(eps, static_cast<double>(weight));
  Prime p = field_prime_for(F.sampling_prime_.value(), std::max(max_index, weight) + 2);
  F.pack_base_ = p.value();
  u64 key_bound = (max_index + 1) * p.value() + p.value();
  if (key_bound >= PolyHash::kField || (max_index + 1) > PolyHash::kField / p.value())
    throw std::invalid_argument("LshFunction: packed key universe exceeds the minwise field");
  SeededRng rng(seed);
  F.point_hash_.p = p;
  F.point_hash_.a = rng.next_below(p.value());
  F.point_hash_.b = rng.next_below(p.value());
  F.point_hash_.c = rng.next_below(p.value());
  F.threshold_ = round_div(p.value(), F.sampling_prime_.value());
  F.minwise_ = PolyHash::for_minwise(rng.next_u64(), eps / 4.0, key_bound);
  return F;
}

LshFunction LshFunction::for_polygons(u64 seed, double eps, double alpha, double phi,
                                      const GridSpec& grid) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("LshFunction: eps must be in (0,1)");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("LshFunction: alpha must be in (0,1]");
  if (!(phi > 0.0 && phi <= 1.0))
    throw std::invalid_argument("LshFunction: phi must be in (0,1]");
  if (grid.side < 2) throw std::invalid_argument("LshFunction: grid too small");
  LshFunction F;
  F.flavor_ = Flavor::kPolygon;
  F.seed_ = seed;
  F.eps_ = eps;
  F.alpha_ = alpha;
  F.phi_ = phi;
  F.grid_side_ = grid.side;
  double points = static_cast<double>(grid.point_count());
  F.sampling_prime_ = sampling_prime_for(eps, alpha * points);
  u64 pstar = F.sampling_prime_.value();
  // Transform hypothesis |I| > 12 p* / (eps^3 alpha), plus the zero-set
  // field must be able to address every grid coordinate.
  if (!(points > 12.0 * static_cast<double>(pstar) / (eps * eps * eps * alpha)))
    throw std::domain_error(
        "LshFunction: grid too small for eps/alpha (needs |I| > 12 p*/(eps^3 alpha))");
  if (pstar <= static_cast<u64>(grid.side - 1))
    throw std::domain_error("LshFunction: sampling prime below grid coordinates");
  F.pack_base_ = pstar;
  u64 key_bound = static_cast<u64>(grid.side) * pstar + pstar;
  if (key_bound >= PolyHash::kField)
    throw std::invalid_argument("LshFunction: packed key universe exceeds the minwise field");
  SeededRng rng(seed);
  F.point_hash_.p = F.sampling_prime_;
  F.point_hash_.a = rng.next_below(pstar);
  F.point_hash_.b = rng.next_below(pstar);
  F.point_hash_.c = rng.next_below(pstar);
  F.minwise_ = PolyHash::for_minwise(rng.next_u64(), eps / 4.0, key_bound);
  return F;
}

LshFunction LshFunction::for_point_sets(u64 seed, double eps, double alpha,
                                        const GridSpec& grid) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("LshFunction: eps must be in (0,1)");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("LshFunction: alpha must be in (0,1]");
  if (grid.side < 2) throw std::invalid_argument("LshFunction: grid too small");
  LshFunction F;
  F.flavor_ = Flavor::kPointSet;
  F.seed_ = seed;
  F.eps_ = eps;
  F.alpha_ = alpha;
  F.grid_side_ = grid.side;
  double points = static_cast<double>(grid.point_count());
  F.sampling_prime_ = sampling_prime_for(eps, alpha * points);
  Prime p = field_prime_for(F.sampling_prime_.value(), static_cast<u64>(grid.side) + 2);
  F.pack_base_ = p.value();
  u64 key_bound = static_cast<u64>(grid.side + 1) * p.value() + p.value();
  if (key_bound >= PolyHash::kField)
    throw std::invalid_argument("LshFunction: packed key universe exceeds the minwise field");
  SeededRng rng(seed);
  F.point_hash_.p = p;
  F.point_hash_.a = rng.next_below(p.value());
  F.point_hash_.b = rng.next_below(p.value());
  F.point_hash_.c = rng.next_below(p.value());
  F.threshold_ = round_div(p.value(), F.sampling_prime_.value());
  F.minwise_ = PolyHash::for_minwise(rng.next_u64(), eps / 4.0, key_bound);
  return F;
}

u64 lsh_from_sample(std::span<const u64> sample_keys, const PolyHash& f, u64 fallback) {
  if (sample_keys.empty()) return fallback;
  u64 best_key = 0;
  u64 best_value = 0;
  bool first = true;
  for (u64 key : sample_keys) {
    u64 v = f(key);
    if (first || v < best_value || (v == best_value && key < best_key)) {
      best_key = key;
      best_value = v;
      first = false;
    }
  }
  return best_key;
}

std::vector<GridPoint> histogram_sample(const Histogram& x, const LshFunction& F) {
  if (F.flavor() != LshFunction::Flavor::kHistogram)
    throw std::domain_error("histogram_sample: function not built for histograms");
  if (x.total() != F.weight())
    throw std::domain_error("histogram_sample: histogram weight differs from the function's");
  if (x.weights.size() > F.max_index())
    throw std::domain_error("histogram_sample: histogram longer than the function's index range");
  const u64 p = F.point_hash().p.value();
  std::vector<GridPoint> sample;
  for (size_t idx = 0; idx < x.weights.size(); ++idx) {
    u64 column = static_cast<u64>(idx) + 1;
    u64 count = x.weights[idx];
    if (count == 0) continue;
    if (count >= p)
      throw std::domain_error("histogram_sample: weight entry must be below the field prime");
    LinearHash1D col = F.point_hash().column(column);
    IntervalSample s = threshold_sample(col, 1, static_cast<i64>(count), F.threshold());
    for (const auto& e : s.entries)
      sample.push_back({static_cast<i64>(column), e.x});
  }
  std::sort(sample.begin(), sample.end());
  return sample;
}

u64 histogram_hash(const Histogram& x, const LshFunction& F) {
  if (F.flavor() != LshFunction::Flavor::kHistogram)
    throw std::domain_error("histogram_hash: function not built for histograms");
  if (x.total() != F.weight())
    throw std::domain_error("histogram_hash: histogram weight differs from the function's");
  if (x.weights.size() > F.max_index())
    throw std::domain_error("histogram_hash: histogram longer than the function's index range");
  const u64 p = F.point_hash().p.value();
  // Worst-case cap: 64x the expected work (one pop per column plus the
  // expected sample size); exceeding it falls back to the sentinel.
  u64 expected = F.weight() / F.sampling_prime().value() + 1;
  u64 cap = 64 * (expected + static_cast<u64>(x.weights.size()) + 1);
  SamplerStats st;
  std::vector<u64> keys;
  for (size_t idx = 0; idx < x.weights.size(); ++idx) {
    u64 column = static_cast<u64>(idx) + 1;
    u64 count = x.weights[idx];
    if (count == 0) continue;
    if (count >= p)
      throw std::domain_error("histogram_hash: weight entry must be below the field prime");
    LinearHash1D col = F.point_hash().column(column);
    IntervalSample s = threshold_sample(col, 1, static_cast<i64>(count), F.threshold(), &st);
    for (const auto& e : s.entries)
      keys.push_back(F.pack(static_cast<i64>(column), e.x));
    if (st.heap_pops > cap) return F.fallback_value();
  }
  return lsh_from_sample(keys, F.minwise(), F.fallback_value());
}

u64 polygon_hash(const GridPolygon& poly, const LshFunction& F, const GridSpec& grid) {
  if (F.flavor() != LshFunction::Flavor::kPolygon)
    throw std::domain_error("polygon_hash: function not built for polygons");
  if (grid.side != F.grid_side())
    throw std::domain_error("polygon_hash: grid differs from the function's");
  GridRect box = poly.bounding_box();
  if (box.x_lo < 0 || box.y_lo < 0 || box.x_hi >= grid.side || box.y_hi >= grid.side)
    throw std::domain_error("polygon_hash: polygon must lie inside the grid square");
  double w = F.phi() * poly.diameter();
  if (w * w < 8.0 * (1.0 - 1e-12))
    throw std::domain_error("polygon_hash: dilation radius below sqrt(8) grid units");
  double r = w / 2.0;

  i64 pad = static_cast<i64>(std::ceil(r)) + 1;
  GridRect sample_box{std::max<i64>(0, box.x_lo - pad),
                      std::min<i64>(grid.side - 1, box.x_hi + pad),
                      std::max<i64>(0, box.y_lo - pad),
                      std::min<i64>(grid.side - 1, box.y_hi + pad)};
  RectSample zs = zero_set(F.point_hash(), sample_box);
  u64 expected = sample_box.point_count() / F.sampling_prime().value() + 1;
  if (zs.points.size() > 64 * expected) return F.fallback_value();

  std::vector<u64> keys;
  keys.reserve(zs.points.size());
  for (const auto& q : zs.points) {
    if (in_dilation(poly, q, r)) keys.push_back(F.pack(q.x, q.y));
  }
  return lsh_from_sample(keys, F.minwise(), F.fallback_value());
}

u64 point_set_hash(std::span<const GridPoint> points, const LshFunction& F) {
  if (F.flavor() != LshFunction::Flavor::kPointSet)
    throw std::domain_error("point_set_hash: function not built for point sets");
  u64 best_key = 0;
  u64 best_value = 0;
  bool first = true;
  for (const auto& q : points) {
    if (q.x < 0 || q.y < 0 || q.x >= F.grid_side() || q.y >= F.grid_side())
      throw std::domain_error("point_set_hash: point outside the grid square");
    if (eval_2d(F.point_hash(), static_cast<u64>(q.x), static_cast<u64>(q.y)) >= F.threshold())
      continue;
    u64 key = F.pack(q.x, q.y);
    u64 v = F.minwise()(key);
    if (first || v < best_value || (v == best_value && key < best_key)) {
      best_key = key;
      best_value = v;
      first = false;
    }
  }
  return first ? F.fallback_value() : best_key;
}

}  // namespace gridlsh
