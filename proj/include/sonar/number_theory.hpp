#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace sonar::nt {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Least nonnegative residue.
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// Floor of the square root, exact for every nonnegative 64-bit input.
inline std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t lo = 0, hi = std::uint64_t{1} << 32;
  while (lo + 1 < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (static_cast<unsigned __int128>(mid) * mid <= n)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

/// Distinct prime factors in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

struct PrimePower {
  std::int64_t p;
  int r;
};

/// Decomposes q = p^r with p prime, r >= 1.
inline std::optional<PrimePower> prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  const auto factors = prime_factors(static_cast<std::uint64_t>(q));
  if (factors.size() != 1) return std::nullopt;
  const auto p = static_cast<std::int64_t>(factors.front());
  int r = 0;
  while (q > 1) {
    q /= p;
    ++r;
  }
  return PrimePower{p, r};
}

inline bool is_prime_power(std::int64_t q) { return prime_power(q).has_value(); }

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (auto f : prime_factors(static_cast<std::uint64_t>(n)))
    result = result / static_cast<std::int64_t>(f) * (static_cast<std::int64_t>(f) - 1);
  return result;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, old_g = mod(a, m), old_x = 1;
  while (g != 0) {
    const std::int64_t quot = old_g / g;
    std::int64_t t = old_g - quot * g;
    old_g = g;
    g = t;
    t = old_x - quot * x;
    old_x = x;
    x = t;
  }
  return mod(old_x, m);
}

}  // namespace sonar::nt
