#include "gridlsh/rect_sampler.hpp"

#include <algorithm>
#include <stdexcept>

#include "gridlsh/integer_hull.hpp"

namespace gridlsh {

namespace detail {

RectSample zero_set_oriented(const LinearHash2D& h, const GridRect& r,
                             bool iterate_y, SamplerStats* stats) {
  const u64 p = h.p.value();
  RectSample out;
  out.hash = h;

  // (u, v) axes: u is iterated; ua, va are the hash coefficients on them.
  i64 u_lo = r.x_lo, u_hi = r.x_hi, v_lo = r.y_lo, v_hi = r.y_hi;
  u64 ua = h.a, va = h.b;
  if (iterate_y) {
    std::swap(u_lo, v_lo);
    std::swap(u_hi, v_hi);
    std::swap(ua, va);
  }
  auto emit = [&](i64 u, i64 v) {
    if (iterate_y) out.points.push_back({v, u});
    else out.points.push_back({u, v});
  };

  if (ua == 0 && va == 0) {
    if (h.c % p == 0) {
      for (i64 u = u_lo; u <= u_hi; ++u)
        for (i64 v = v_lo; v <= v_hi; ++v) emit(u, v);
    }
  } else if (va == 0) {
    // ua*u + c = 0 has a unique root column.
    u64 root = mul_mod(p - h.c % p, mod_inverse(ua, h.p), p);
    if (h.c % p == 0) root = 0;
    i64 u0 = static_cast<i64>(root);
    if (u0 >= u_lo && u0 <= u_hi) {
      for (i64 v = v_lo; v <= v_hi; ++v) emit(u0, v);
    }
  } else {
    // Translate v to [0, v_hi - v_lo] and solve for it:
    // v' = (-va^-1 ua u - va^-1 c') mod p with c' = c + va*v_lo.
    u64 c_shift = static_cast<u64>(((u128)va * static_cast<u64>(v_lo) + h.c) % p);
    u64 inv = mod_inverse(va, h.p);
    u64 t1 = mul_mod(inv, ua, p);
    u64 t2 = mul_mod(inv, c_shift, p);
    u64 q = (t1 == 0) ? 0 : p - t1;
    u64 s = (t2 == 0) ? 0 : p - t2;

    PolyHashLine line;
    line.slope_num = q;
    line.intercept_num = static_cast<i64>(s);
    line.denom = h.p;
    line.x_lo = u_lo;
    line.x_hi = u_hi;
    u64 band = static_cast<u64>(v_hi - v_lo);
    HullStats* hs = stats ? &stats->hull : nullptr;
    for (const auto& bp : band_points(line, band, hs)) {
      i64 v_off = static_cast<i64>(((i128)q * bp.x + s) % p);
      emit(bp.x, v_lo + v_off);
    }
  }

  std::sort(out.points.begin(), out.points.end());
  return out;
}

}  // namespace detail

RectSample zero_set(const LinearHash2D& h, const GridRect& r,
                    SamplerStats* stats) {
  const i64 p = static_cast<i64>(h.p.value());
  if (r.x_lo < 0 || r.x_lo > r.x_hi || r.x_hi >= p || r.y_lo < 0 ||
      r.y_lo > r.y_hi || r.y_hi >= p)
    throw std::domain_error("zero_set: rectangle must lie within [0, p)^2");
  if (h.a >= h.p.value() || h.b >= h.p.value() || h.c >= h.p.value())
    throw std::domain_error("zero_set: hash parameters not in [0, p)");
  // Iterate the shorter axis; decided by the rectangle alone.
  bool iterate_y = r.width() > r.height();
  return detail::zero_set_oriented(h, r, iterate_y, stats);
}

}  // namespace gridlsh
