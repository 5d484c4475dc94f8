#pragma once

#include <span>
#include <vector>

#include "gridlsh/field_hash.hpp"
#include "gridlsh/polygon_geom.hpp"

namespace gridlsh {

/// Histogram of non-negative integer weights with positive total.
struct Histogram {
  std::vector<u64> weights;

  static Histogram from_weights(std::vector<u64> w);
  u64 total() const;
};

/// The transform from a 2-independent consistent sample to an LSH value:
/// hash a point set by taking the argmin of an eps/4-minwise polynomial f
/// over a consistent sample of the set. Collision probability is the
/// Jaccard similarity up to an additive eps.
///
/// Two instantiations share the machinery:
///  - histograms sample the column decomposition of P_x with a threshold
///    tau = round(p / p*) on a large field prime p (probability 1/p*);
///  - polygons sample the grid zero-set of a hash over the field p* itself.
///
/// Immutable after construction; safe for concurrent hashing.
class LshFunction {
 public:
  enum class Flavor { kHistogram, kPolygon, kPointSet };

  static constexpr u64 kEmptyFallback = ~u64{0};

  /// Shared function for histograms with index range [1, max_index] and
  /// common weight `weight`.
  static LshFunction for_histograms(u64 seed, double eps, u64 max_index, u64 weight);

  /// Shared function for polygons snapped to `grid`, each alpha-dense and
  /// fuzzy with parameter phi. Refuses grids too small for the sampling
  /// prime rule (the transform needs |I| > 12 p* / (eps^3 alpha), and the
  /// zero-set field must exceed every coordinate).
  static LshFunction for_polygons(u64 seed, double eps, double alpha, double phi,
                                  const GridSpec& grid);

  /// Shared function for explicit point sets on `grid` (threshold sampling;
  /// the desk-scale reference path used by experiments).
  static LshFunction for_point_sets(u64 seed, double eps, double alpha,
                                    const GridSpec& grid);

  Flavor flavor() const { return flavor_; }
  u64 seed() const { return seed_; }
  double eps() const { return eps_; }
  double alpha() const { return alpha_; }
  double phi() const { return phi_; }
  Prime sampling_prime() const { return sampling_prime_; }  // p*
  const PolyHash& minwise() const { return minwise_; }
  u64 fallback_value() const { return kEmptyFallback; }
  const LinearHash2D& point_hash() const { return point_hash_; }
  u64 threshold() const { return threshold_; }
  u64 weight() const { return weight_; }
  u64 max_index() const { return max_index_; }
  i64 grid_side() const { return grid_side_; }

  /// Injective packing of a sampled grid point into the scalar domain of f.
  u64 pack(i64 x, i64 y) const {
    return static_cast<u64>(x) * pack_base_ + static_cast<u64>(y);
  }

 private:
  LshFunction() = default;

  Flavor flavor_ = Flavor::kPointSet;
  u64 seed_ = 0;
  double eps_ = 0.0;
  double alpha_ = 0.0;
  double phi_ = 0.0;
  Prime sampling_prime_;      // p*
  LinearHash2D point_hash_;   // H2 over the sampling field
  PolyHash minwise_;          // f
  u64 threshold_ = 0;         // tau (threshold flavors)
  u64 weight_ = 0;            // N (histograms)
  u64 max_index_ = 0;         // n (histograms)
  i64 grid_side_ = 0;
  u64 pack_base_ = 1;
};

/// argmin of f over the sample keys, ties toward the smallest key;
/// `fallback` when the sample is empty.
u64 lsh_from_sample(std::span<const u64> sample_keys, const PolyHash& f, u64 fallback);

/// Debug enumeration of the consistent sample of P_x = {(i, j) : j <= x_i}:
/// exactly the (i, j) with h2(i, j) < tau, sorted by (i, j).
std::vector<GridPoint> histogram_sample(const Histogram& x, const LshFunction& F);

/// LSH value of a histogram: collision probability across two histograms of
/// equal weight approximates their weighted Jaccard similarity within eps.
/// Histograms compared under one F must share its configured weight.
u64 histogram_hash(const Histogram& x, const LshFunction& F);

/// LSH value of a polygon contained in the grid square: collision
/// probability approximates a valid fuzzy-model Jaccard similarity.
u64 polygon_hash(const GridPolygon& poly, const LshFunction& F, const GridSpec& grid);

/// Hash of an explicit point set (desk-scale path).
u64 point_set_hash(std::span<const GridPoint> points, const LshFunction& F);

}  // namespace gridlsh
