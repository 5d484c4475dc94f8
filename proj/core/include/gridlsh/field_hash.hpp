#pragma once

#include <string>
#include <vector>

#include "gridlsh/numeric.hpp"

namespace gridlsh {

/// A prime modulus below 2^62, so that products of two field elements fit
/// 128-bit intermediates. Primality is checked with deterministic
/// Miller-Rabin (the witness set that is exact for 64-bit inputs).
class Prime {
 public:
  Prime() : value_(2) {}
  explicit Prime(u64 value);

  u64 value() const { return value_; }
  operator u64() const { return value_; }

 private:
  u64 value_;
};

bool is_prime(u64 n);

/// Smallest prime in the dyadic interval [2^(level-1), 2^level].
/// level must be in [2, 62].
Prime prime_in_dyadic(unsigned level);

/// Smallest prime >= n (n >= 2, result must stay below 2^62).
Prime next_prime_at_least(u64 n);

/// h(x) = (a*x + b) mod p, the Carter-Wegman 2-independent family H1.
struct LinearHash1D {
  u64 a = 0;
  u64 b = 0;
  Prime p;

  static LinearHash1D from_seed(u64 seed, Prime p);
};

/// h(x,y) = (a*x + b*y + c) mod p, the 2-independent family H2.
struct LinearHash2D {
  u64 a = 0;
  u64 b = 0;
  u64 c = 0;
  Prime p;

  static LinearHash2D from_seed(u64 seed, Prime p);

  /// The 1D hash of a fixed column x: j -> (b*j + (a*x + c)) mod p.
  LinearHash1D column(u64 x) const;
};

u64 eval_1d(const LinearHash1D& h, u64 x);
u64 eval_2d(const LinearHash2D& h, u64 x, u64 y);

/// Multiplicative inverse of q modulo the prime p (extended Euclid).
/// q = 0 raises std::domain_error.
u64 mod_inverse(u64 q, Prime p);

/// Polynomial hash (sum c_i x^i mod q) div r. Drawing all coefficients
/// uniformly gives a d-independent family; with d = ceil(log2(1/eps)) + 4
/// the family is eps-minwise independent on the ranges used here. The
/// production instances all use the Mersenne field q = 2^61 - 1, which
/// exceeds every sampling field in play and has a branch-free reduction.
class PolyHash {
 public:
  static constexpr u64 kField = (1ull << 61) - 1;

  PolyHash() = default;
  PolyHash(std::vector<u64> coefficients, u64 range_reduction, Prime field = Prime(kField));

  /// Independence degree and range sized for minwise parameter eps over a
  /// key universe bounded by universe_bound.
  static PolyHash for_minwise(u64 seed, double eps, u64 universe_bound);

  u64 operator()(u64 x) const;

  const std::vector<u64>& coefficients() const { return coefficients_; }
  u64 range_reduction() const { return range_reduction_; }
  u64 field() const { return field_; }
  size_t degree_count() const { return coefficients_.size(); }

 private:
  std::vector<u64> coefficients_;  // c0 + c1*x + c2*x^2 + ...
  u64 range_reduction_ = 1;
  u64 field_ = kField;
};

inline u64 eval_minwise(const PolyHash& f, u64 x) { return f(x); }

/// Canonical decimal text form "a,b@p" / "a,b,c@p" for audit logs.
std::string to_text(const LinearHash1D& h);
std::string to_text(const LinearHash2D& h);
LinearHash1D parse_hash_1d(const std::string& text);
LinearHash2D parse_hash_2d(const std::string& text);

}  // namespace gridlsh
