#include "gridlsh/field_hash.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gridlsh {

namespace {

constexpr u64 kMaxPrime = 1ull << 62;

bool miller_rabin(u64 n, u64 witness) {
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  u64 x = pow_mod(witness % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == small) return true;
    if (n % small == 0) return false;
  }
  // Exact for all 64-bit inputs with this witness set.
  for (u64 w : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin(n, w)) return false;
  }
  return true;
}

Prime::Prime(u64 value) : value_(value) {
  if (value >= kMaxPrime)
    throw std::invalid_argument("Prime: value must be below 2^62");
  if (!is_prime(value))
    throw std::invalid_argument("Prime: value is not prime");
}

Prime prime_in_dyadic(unsigned level) {
  if (level < 2) throw std::invalid_argument("prime_in_dyadic: level must be >= 2");
  if (level > 62) throw std::overflow_error("prime_in_dyadic: level must be <= 62");
  u64 lo = 1ull << (level - 1);
  u64 hi = 1ull << level;
  for (u64 n = lo; n <= hi; ++n) {
    if (is_prime(n)) return Prime(n);
  }
  throw std::logic_error("prime_in_dyadic: no prime found (unreachable)");
}

Prime next_prime_at_least(u64 n) {
  if (n < 2) n = 2;
  for (u64 v = n;; ++v) {
    if (v >= kMaxPrime)
      throw std::overflow_error("next_prime_at_least: exceeds 2^62");
    if (is_prime(v)) return Prime(v);
  }
}

LinearHash1D LinearHash1D::from_seed(u64 seed, Prime p) {
  SeededRng rng(seed);
  LinearHash1D h;
  h.p = p;
  h.a = rng.next_below(p.value());
  h.b = rng.next_below(p.value());
  return h;
}

LinearHash2D LinearHash2D::from_seed(u64 seed, Prime p) {
  SeededRng rng(seed);
  LinearHash2D h;
  h.p = p;
  h.a = rng.next_below(p.value());
  h.b = rng.next_below(p.value());
  h.c = rng.next_below(p.value());
  return h;
}

LinearHash1D LinearHash2D::column(u64 x) const {
  LinearHash1D h;
  h.p = p;
  h.a = b;
  h.b = static_cast<u64>(((u128)a * x + c) % p.value());
  return h;
}

u64 eval_1d(const LinearHash1D& h, u64 x) {
  return static_cast<u64>(((u128)h.a * x + h.b) % h.p.value());
}

u64 eval_2d(const LinearHash2D& h, u64 x, u64 y) {
  u128 acc = (u128)h.a * x + (u128)h.b * y + h.c;
  return static_cast<u64>(acc % h.p.value());
}

u64 mod_inverse(u64 q, Prime p) {
  if (q == 0) throw std::domain_error("mod_inverse: q must be nonzero");
  q %= p.value();
  if (q == 0) throw std::domain_error("mod_inverse: q must be nonzero mod p");
  // Extended Euclid on (q, p).
  i64 old_r = static_cast<i64>(q), r = static_cast<i64>(p.value());
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 quot = old_r / r;
    i64 tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  i64 inv = old_s % static_cast<i64>(p.value());
  if (inv < 0) inv += static_cast<i64>(p.value());
  return static_cast<u64>(inv);
}

namespace {

// Reduction modulo 2^61 - 1.
inline u64 mersenne_reduce(u128 v) {
  u64 lo = static_cast<u64>(v & PolyHash::kField);
  u64 hi = static_cast<u64>(v >> 61);
  u64 r = lo + hi;
  if (r >= PolyHash::kField) r -= PolyHash::kField;
  return r;
}

}  // namespace

PolyHash::PolyHash(std::vector<u64> coefficients, u64 range_reduction, Prime field)
    : coefficients_(std::move(coefficients)), range_reduction_(range_reduction),
      field_(field.value()) {
  if (coefficients_.empty())
    throw std::invalid_argument("PolyHash: needs at least one coefficient");
  if (range_reduction_ == 0)
    throw std::invalid_argument("PolyHash: range_reduction must be >= 1");
  for (u64 c : coefficients_) {
    if (c >= field_) throw std::invalid_argument("PolyHash: coefficient out of field");
  }
}

PolyHash PolyHash::for_minwise(u64 seed, double eps, u64 universe_bound) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("PolyHash::for_minwise: eps must be in (0,1)");
  if (universe_bound == 0 || universe_bound >= kField)
    throw std::invalid_argument("PolyHash::for_minwise: universe bound out of range");
  size_t degree = static_cast<size_t>(std::ceil(std::log2(1.0 / eps))) + 4;
  if (degree < 2) degree = 2;
  SeededRng rng(seed);
  std::vector<u64> coeffs(degree);
  for (auto& c : coeffs) c = rng.next_below(kField);
  // Output range approximately universe_bound / eps.
  long double target_range = static_cast<long double>(universe_bound) / eps;
  u64 reduction = 1;
  if (target_range < static_cast<long double>(kField)) {
    reduction = static_cast<u64>(static_cast<long double>(kField) / target_range);
    if (reduction == 0) reduction = 1;
  }
  return PolyHash(std::move(coeffs), reduction);
}

u64 PolyHash::operator()(u64 x) const {
  if (x >= field_) throw std::domain_error("PolyHash: key outside field");
  u64 acc = 0;
  if (field_ == kField) {
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
      acc = mersenne_reduce((u128)acc * x + *it);
    }
  } else {
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
      acc = static_cast<u64>(((u128)acc * x + *it) % field_);
    }
  }
  return acc / range_reduction_;
}

std::string to_text(const LinearHash1D& h) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "%llu,%llu@%llu",
                (unsigned long long)h.a, (unsigned long long)h.b,
                (unsigned long long)h.p.value());
  return buf;
}

std::string to_text(const LinearHash2D& h) {
  char buf[110];
  std::snprintf(buf, sizeof(buf), "%llu,%llu,%llu@%llu",
                (unsigned long long)h.a, (unsigned long long)h.b,
                (unsigned long long)h.c, (unsigned long long)h.p.value());
  return buf;
}

namespace {

std::vector<u64> parse_hash_fields(const std::string& text, size_t n_params) {
  std::vector<u64> out;
  size_t at = text.find('@');
  if (at == std::string::npos)
    throw std::invalid_argument("hash text form: missing '@'");
  std::string params = text.substr(0, at);
  std::string modulus = text.substr(at + 1);
  size_t pos = 0;
  while (true) {
    size_t comma = params.find(',', pos);
    std::string tok = params.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) throw std::invalid_argument("hash text form: empty field");
    out.push_back(std::stoull(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != n_params)
    throw std::invalid_argument("hash text form: wrong number of parameters");
  out.push_back(std::stoull(modulus));
  return out;
}

}  // namespace

LinearHash1D parse_hash_1d(const std::string& text) {
  auto f = parse_hash_fields(text, 2);
  LinearHash1D h;
  h.p = Prime(f[2]);
  if (f[0] >= h.p.value() || f[1] >= h.p.value())
    throw std::invalid_argument("hash text form: parameter not below modulus");
  h.a = f[0];
  h.b = f[1];
  return h;
}

LinearHash2D parse_hash_2d(const std::string& text) {
  auto f = parse_hash_fields(text, 3);
  LinearHash2D h;
  h.p = Prime(f[3]);
  if (f[0] >= h.p.value() || f[1] >= h.p.value() || f[2] >= h.p.value())
    throw std::invalid_argument("hash text form: parameter not below modulus");
  h.a = f[0];
  h.b = f[1];
  h.c = f[2];
  return h;
}

}  // namespace gridlsh
