#include "gridlsh/area_summary.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "gridlsh/rect_sampler.hpp"

namespace gridlsh {

namespace {

constexpr char kMagic[8] = {'G', 'L', 'S', 'H', 'S', 'U', 'M', '1'};
constexpr u32 kVersion = 1;

u64 pack_point(GridPoint q) {
  return (static_cast<u64>(static_cast<u32>(q.x)) << 32) |
         static_cast<u64>(static_cast<u32>(q.y));
}

GridRect padded_box(const GridPolygon& poly, double radius, i64 side) {
  GridRect box = poly.bounding_box();
  i64 pad = static_cast<i64>(std::ceil(radius)) + 1;
  return {std::max<i64>(0, box.x_lo - pad), std::min<i64>(side - 1, box.x_hi + pad),
          std::max<i64>(0, box.y_lo - pad), std::min<i64>(side - 1, box.y_hi + pad)};
}

// Little-endian fixed-width primitives.
void put_u32(std::ostream& out, u32 v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 4);
}
void put_u64(std::ostream& out, u64 v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 8);
}
void put_i64(std::ostream& out, i64 v) { put_u64(out, static_cast<u64>(v)); }
void put_f64(std::ostream& out, double v) {
  u64 bits;
  std::memcpy(&bits, &v, 8);
  put_u64(out, bits);
}
u32 get_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  if (!in) throw std::runtime_error("summary: truncated file");
  u32 v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<u32>(b[i]) << (8 * i);
  return v;
}
u64 get_u64(std::istream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  if (!in) throw std::runtime_error("summary: truncated file");
  u64 v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<u64>(b[i]) << (8 * i);
  return v;
}
i64 get_i64(std::istream& in) { return static_cast<i64>(get_u64(in)); }
double get_f64(std::istream& in) {
  u64 bits = get_u64(in);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

}  // namespace

Prime AreaSummary::level_prime(unsigned level) const {
  if (level < level_min_ || level > level_max_)
    throw std::domain_error("AreaSummary: level out of range");
  return Prime(primes_[level - level_min_]);
}

LinearHash2D AreaSummary::level_hash(unsigned level) const {
  return LinearHash2D::from_seed(derive_seed(params_.seed, level), level_prime(level));
}

double AreaSummary::sample_radius(size_t id) const {
  return params_.phi * polygons_[id].polygon.diameter() / 2.0;
}

unsigned AreaSummary::start_level(double f_max) const {
  // 2^(j-1) <= c * delta * eps^2 * f_max <= 2^j with c = 4.
  double target = 4.0 * params_.delta * params_.eps * params_.eps * f_max;
  unsigned j = level_min_;
  if (target > 1.0)
    j = static_cast<unsigned>(std::ceil(std::log2(target)));
  return std::clamp(j, level_min_, level_max_);
}

u64 AreaSummary::required_samples() const {
  return static_cast<u64>(
      std::ceil(1.0 / (params_.delta * params_.eps * params_.eps)));
}

void AreaSummary::build_lookup_sets() {
  lookup_.clear();
  lookup_.resize(polygons_.size());
  for (size_t i = 0; i < polygons_.size(); ++i) {
    lookup_[i].resize(polygons_[i].samples.size());
    for (size_t l = 0; l < polygons_[i].samples.size(); ++l) {
      auto& set = lookup_[i][l];
      set.reserve(polygons_[i].samples[l].size() * 2);
      for (const auto& q : polygons_[i].samples[l]) set.insert(pack_point(q));
    }
  }
}

namespace {

std::vector<u32> checked_unique_ids(std::span<const u32> ids, size_t n) {
  if (ids.empty()) throw std::domain_error("query: empty id list");
  std::vector<u32> out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (u32 id : out) {
    if (id >= n) throw std::domain_error("query: unknown polygon id");
  }
  return out;
}

}  // namespace

AreaSummary::QueryResult AreaSummary::fallback_union(std::span<const u32> ids,
                                                     u64 inspections) const {
  GridRect box = padded_box(polygons_[ids[0]].polygon, sample_radius(ids[0]), grid_side_);
  for (size_t i = 1; i < ids.size(); ++i) {
    GridRect b = padded_box(polygons_[ids[i]].polygon, sample_radius(ids[i]), grid_side_);
    box.x_lo = std::min(box.x_lo, b.x_lo);
    box.x_hi = std::max(box.x_hi, b.x_hi);
    box.y_lo = std::min(box.y_lo, b.y_lo);
    box.y_hi = std::max(box.y_hi, b.y_hi);
  }
  u64 count = 0;
  for (i64 y = box.y_lo; y <= box.y_hi; ++y) {
    for (i64 x = box.x_lo; x <= box.x_hi; ++x) {
      for (u32 id : ids) {
        if (in_dilation(polygons_[id].polygon, {x, y}, sample_radius(id))) {
          ++count;
          break;
        }
      }
    }
  }
  return {count, 0, 1, count, inspections};
}

AreaSummary::QueryResult AreaSummary::fallback_intersection(std::span<const u32> ids,
                                                            u64 inspections) const {
  u32 base = ids[0];
  for (u32 id : ids) {
    if (polygons_[id].count < polygons_[base].count) base = id;
  }
  GridRect box = padded_box(polygons_[base].polygon, sample_radius(base), grid_side_);
  u64 count = 0;
  for (i64 y = box.y_lo; y <= box.y_hi; ++y) {
    for (i64 x = box.x_lo; x <= box.x_hi; ++x) {
      bool all = true;
      for (u32 id : ids) {
        if (!in_dilation(polygons_[id].polygon, {x, y}, sample_radius(id))) {
          all = false;
          break;
        }
      }
      if (all) ++count;
    }
  }
  return {count, 0, 1, count, inspections};
}

AreaSummary::QueryResult AreaSummary::query_union(std::span<const u32> raw_ids) const {
  auto ids = checked_unique_ids(raw_ids, polygons_.size());
  u64 max_count = 0;
  for (u32 id : ids) max_count = std::max(max_count, polygons_[id].count);
  double f_max = static_cast<double>(ids.size()) * static_cast<double>(max_count);
  const u64 need = required_samples();
  u64 inspections = 0;
  unsigned j = start_level(f_max);
  while (true) {
    std::vector<GridPoint> merged;
    for (u32 id : ids) {
      const auto& s = polygons_[id].samples[j - level_min_];
      inspections += s.size();
      merged.insert(merged.end(), s.begin(), s.end());
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    u64 unique_count = merged.size();
    if (unique_count >= need)
      return {unique_count * primes_[j - level_min_], j, primes_[j - level_min_],
              unique_count, inspections};
    if (j == level_min_) break;
    --j;
  }
  return fallback_union(ids, inspections);
}

AreaSummary::QueryResult AreaSummary::query_intersection(
    std::span<const u32> raw_ids) const {
  auto ids = checked_unique_ids(raw_ids, polygons_.size());
  u32 base = ids[0];
  for (u32 id : ids) {
    if (polygons_[id].count < polygons_[base].count) base = id;
  }
  double f_max = static_cast<double>(polygons_[base].count);
  const u64 need = required_samples();
  u64 inspections = 0;
  unsigned j = start_level(f_max);
  while (true) {
    const auto& s = polygons_[base].samples[j - level_min_];
    inspections += s.size();
    u64 count = 0;
    for (const auto& q : s) {
      bool all = true;
      for (u32 id : ids) {
        if (id == base) continue;
        ++inspections;
        if (!lookup_[id][j - level_min_].contains(pack_point(q))) {
          all = false;
          break;
        }
      }
      if (all) ++count;
    }
    if (count >= need)
      return {count * primes_[j - level_min_], j, primes_[j - level_min_], count,
              inspections};
    if (j == level_min_) break;
    --j;
  }
  return fallback_intersection(ids, inspections);
}

AreaSummary build_summary(std::vector<GridPolygon> polygons,
                          const SummaryParams& params, const GridSpec& grid) {
  if (!(params.phi > 0.0 && params.phi <= 1.0))
    throw std::invalid_argument("build_summary: phi must be in (0,1]");
  if (!(params.eps > 0.0 && params.eps < 1.0) || !(params.delta > 0.0 && params.delta < 1.0))
    throw std::invalid_argument("build_summary: eps and delta must be in (0,1)");
  if (grid.side < 2) throw std::invalid_argument("build_summary: grid too small");

  AreaSummary s;
  s.params_ = params;
  s.grid_side_ = grid.side;

  for (size_t i = 0; i < polygons.size(); ++i) {
    const GridPolygon& poly = polygons[i];
    double w = params.phi * poly.diameter();
    if (w * w < 8.0 * (1.0 - 1e-12))
      throw std::domain_error("build_summary: polygon " + std::to_string(i) +
                              " violates phi*d(P) >= sqrt(8)");
    GridRect box = poly.bounding_box();
    if (box.x_lo < 0 || box.y_lo < 0 || box.x_hi >= grid.side || box.y_hi >= grid.side)
      throw std::domain_error("build_summary: polygon " + std::to_string(i) +
                              " lies outside the grid square");
  }

  if (polygons.empty()) {
    s.level_min_ = s.level_max_ = 0;
    return s;
  }

  // Exact |P+(w/2)| per polygon; these pick the level range.
  std::vector<u64> counts(polygons.size());
  u64 min_count = ~u64{0}, max_count = 0;
  for (size_t i = 0; i < polygons.size(); ++i) {
    double r = params.phi * polygons[i].diameter() / 2.0;
    counts[i] = grid_count(polygons[i], r, grid);
    min_count = std::min(min_count, counts[i]);
    max_count = std::max(max_count, counts[i]);
  }
  double de2 = params.delta * params.eps * params.eps;
  double f_min = params.phi * params.phi / 2.0 * static_cast<double>(min_count);
  double f_max = static_cast<double>(polygons.size()) * static_cast<double>(max_count);

  // Finest level: two levels of slack below the rate matched to the smallest
  // query, but never below the level whose prime covers the grid
  // coordinates (the level hash must be able to address every point).
  unsigned coord_level = 2;
  while (prime_in_dyadic(coord_level).value() <= static_cast<u64>(grid.side - 1))
    ++coord_level;
  double fine_target = 4.0 * de2 * std::max(f_min, 1.0);
  unsigned fine_level = fine_target > 1.0
                            ? static_cast<unsigned>(std::ceil(std::log2(fine_target)))
                            : 2;
  fine_level = (fine_level > 4) ? fine_level - 2 : 2;
  s.level_min_ = std::max(coord_level, fine_level);

  double coarse_target = 4.0 * de2 * std::max(f_max, 1.0);
  unsigned coarse_level = coarse_target > 1.0
                              ? static_cast<unsigned>(std::ceil(std::log2(coarse_target)))
                              : 2;
  s.level_max_ = std::max(s.level_min_, coarse_level);
  if (s.level_max_ > 62)
    throw std::domain_error("build_summary: level range exceeds 62 bits");

  for (unsigned l = s.level_min_; l <= s.level_max_; ++l)
    s.primes_.push_back(prime_in_dyadic(l).value());

  for (size_t i = 0; i < polygons.size(); ++i) {
    AreaSummary::PolygonEntry entry;
    entry.polygon = std::move(polygons[i]);
    entry.count = counts[i];
    double r = params.phi * entry.polygon.diameter() / 2.0;
    GridRect box = padded_box(entry.polygon, r, grid.side);
    for (unsigned l = s.level_min_; l <= s.level_max_; ++l) {
      LinearHash2D h = LinearHash2D::from_seed(derive_seed(params.seed, l),
                                               Prime(s.primes_[l - s.level_min_]));
      RectSample zs = zero_set(h, box);
      std::vector<GridPoint> kept;
      for (const auto& q : zs.points) {
        if (in_dilation(entry.polygon, q, r)) kept.push_back(q);
      }
      entry.samples.push_back(std::move(kept));
    }
    s.polygons_.push_back(std::move(entry));
  }
  s.build_lookup_sets();
  return s;
}

void AreaSummary::write(std::ostream& out) const {
  out.write(kMagic, 8);
  put_u32(out, kVersion);
  put_u32(out, level_min_);
  put_u32(out, level_max_);
  put_u32(out, static_cast<u32>(polygons_.size()));
  put_u64(out, params_.seed);
  put_f64(out, params_.phi);
  put_f64(out, params_.eps);
  put_f64(out, params_.delta);
  put_i64(out, grid_side_);
  for (u64 p : primes_) put_u64(out, p);
  for (const auto& entry : polygons_) {
    put_u64(out, entry.count);
    put_u32(out, static_cast<u32>(entry.polygon.vertices().size()));
    put_u32(out, 0);
    for (const auto& v : entry.polygon.vertices()) {
      put_i64(out, v.x);
      put_i64(out, v.y);
    }
    for (const auto& level : entry.samples) {
      put_u64(out, level.size());
      for (const auto& q : level) {
        put_i64(out, q.x);
        put_i64(out, q.y);
      }
    }
  }
}

AreaSummary AreaSummary::read(std::istream& in) {
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kMagic, 8) != 0)
    throw std::runtime_error("summary: bad magic");
  if (get_u32(in) != kVersion) throw std::runtime_error("summary: unsupported version");
  AreaSummary s;
  s.level_min_ = get_u32(in);
  s.level_max_ = get_u32(in);
  u32 n_polys = get_u32(in);
  s.params_.seed = get_u64(in);
  s.params_.phi = get_f64(in);
  s.params_.eps = get_f64(in);
  s.params_.delta = get_f64(in);
  s.grid_side_ = get_i64(in);
  if (n_polys > 0 || s.level_max_ > 0) {
    if (s.level_min_ > s.level_max_ || s.level_max_ > 62)
      throw std::runtime_error("summary: bad level range");
  }
  for (unsigned l = s.level_min_; n_polys > 0 && l <= s.level_max_; ++l) {
    u64 p = get_u64(in);
    if (p != prime_in_dyadic(l).value())
      throw std::runtime_error("summary: prime table mismatch");
    s.primes_.push_back(p);
  }
  for (u32 i = 0; i < n_polys; ++i) {
    PolygonEntry entry;
    entry.count = get_u64(in);
    u32 n_verts = get_u32(in);
    get_u32(in);
    std::vector<GridPoint> verts(n_verts);
    for (auto& v : verts) {
      v.x = get_i64(in);
      v.y = get_i64(in);
    }
    entry.polygon = GridPolygon::from_vertices(std::move(verts));
    for (unsigned l = s.level_min_; l <= s.level_max_; ++l) {
      u64 count = get_u64(in);
      std::vector<GridPoint> pts(count);
      for (auto& q : pts) {
        q.x = get_i64(in);
        q.y = get_i64(in);
      }
      entry.samples.push_back(std::move(pts));
    }
    s.polygons_.push_back(std::move(entry));
  }
  s.build_lookup_sets();
  return s;
}

}  // namespace gridlsh
