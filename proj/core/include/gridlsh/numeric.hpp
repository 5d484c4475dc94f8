#pragma once

#include <cstdint>
#include <stdexcept>

namespace gridlsh {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u32 = std::uint32_t;
using u8 = std::uint8_t;
using i128 = __int128;
using u128 = unsigned __int128;

/// Floor division for signed operands, divisor > 0.
constexpr i64 floor_div(i64 num, i64 den) {
  i64 q = num / den;
  if ((num % den) != 0 && ((num < 0) != (den < 0))) --q;
  return q;
}

constexpr i64 floor_div128(i128 num, i128 den) {
  i128 q = num / den;
  if ((num % den) != 0 && ((num < 0) != (den < 0))) --q;
  return static_cast<i64>(q);
}

/// Non-negative remainder, divisor > 0.
constexpr u64 floor_mod128(i128 num, i128 den) {
  i128 r = num % den;
  if (r < 0) r += den;
  return static_cast<u64>(r);
}

inline u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  if (s >= m || s < a) s -= m;
  return s;
}

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((u128)a * b % m);
}

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

/// Deterministic generator with splitmix64 state transition. One 64-bit
/// seed fully determines every value drawn from it, so hash parameters
/// derived through it are reproducible across processes.
class SeededRng {
 public:
  explicit SeededRng(u64 seed) : state_(seed) {}

  u64 next_u64() {
    u64 z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Unbiased draw from [0, bound) via bitmask rejection.
  u64 next_below(u64 bound) {
    if (bound == 0) throw std::domain_error("next_below: bound must be positive");
    if (bound == 1) return 0;
    u64 mask = ~0ull >> __builtin_clzll(bound - 1);
    u64 v;
    do {
      v = next_u64() & mask;
    } while (v >= bound);
    return v;
  }

  double next_unit() {  // [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  u64 state_;
};

/// splitmix64 finalizer; used to derive independent per-trial or per-level
/// seeds from (seed, counter) pairs.
inline u64 mix_u64(u64 x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline u64 derive_seed(u64 seed, u64 counter) {
  return mix_u64(seed + 0x9e3779b97f4a7c15ull * (counter + 1));
}

}  // namespace gridlsh
