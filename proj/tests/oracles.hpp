#pragma once

// Brute-force reference implementations for the test suites. Nothing here
// calls into the library: each routine recomputes its answer from the
// definitions so it can check the library independently.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

inline std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

/// Compares every pair of positions for every shift (O(n^3)). m = 0: plain.
/// Returns the lexicographically least violating (h, i, j), 1-based.
inline std::optional<std::tuple<std::int64_t, std::int64_t, std::int64_t>> first_violation(
    const std::vector<std::int64_t>& f, std::int64_t m) {
  const auto n = static_cast<std::int64_t>(f.size());
  for (std::int64_t h = 1; h < n; ++h)
    for (std::int64_t i = 0; i + h < n; ++i)
      for (std::int64_t j = i + 1; j + h < n; ++j) {
        const auto a = f[i + h] - f[i];
        const auto b = f[j + h] - f[j];
        if (m == 0 ? a == b : mod(a - b, m) == 0) return std::tuple{h, i + 1, j + 1};
      }
  return std::nullopt;
}

inline bool is_modular_sonar(const std::vector<std::int64_t>& f, std::int64_t m) {
  return !first_violation(f, m).has_value();
}

inline bool is_plain_sonar(const std::vector<std::int64_t>& f) { return !first_violation(f, 0).has_value(); }

/// Sidon by the difference formulation: all a - b (a != b) distinct mod N.
inline bool is_sidon_by_differences(const std::vector<std::int64_t>& a, std::int64_t N) {
  std::set<std::int64_t> diffs;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i == j) continue;
      if (!diffs.insert(mod(a[i] - a[j], N)).second) return false;
    }
  return true;
}

/// Largest k with k^2 - k + 1 <= N: the bound floor((1 + sqrt(4N - 3)) / 2).
inline std::int64_t sidon_bound(std::int64_t N) {
  std::int64_t k = 0;
  while ((k + 1) * (k + 1) - (k + 1) + 1 <= N) ++k;
  return k;
}

/// Multiplicative order of g mod p by repeated multiplication.
inline std::int64_t order_mod(std::int64_t g, std::int64_t p) {
  std::int64_t x = g % p, k = 1;
  while (x != 1) {
    x = x * g % p;
    ++k;
  }
  return k;
}

inline std::vector<std::int64_t> primitive_roots(std::int64_t p) {
  std::vector<std::int64_t> out;
  for (std::int64_t g = 1; g < p; ++g)
    if (order_mod(g, p) == p - 1) out.push_back(g);
  return out;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// G(mod m) or G(m) by enumerating all sequences of each length until none
/// passes. Values range over [0, m-1] (modular) or [1, m] (plain).
inline std::int64_t max_length_by_enumeration(std::int64_t m, bool modular, std::int64_t cap) {
  std::int64_t best = 0;
  for (std::int64_t n = 1; n <= cap; ++n) {
    std::vector<std::int64_t> f(static_cast<std::size_t>(n), modular ? 0 : 1);
    bool found = false;
    for (;;) {
      if (modular ? is_modular_sonar(f, m) : is_plain_sonar(f)) {
        found = true;
        break;
      }
      std::size_t k = 0;
      const std::int64_t lo = modular ? 0 : 1, hi = modular ? m - 1 : m;
      while (k < f.size() && f[k] == hi) f[k++] = lo;
      if (k == f.size()) break;
      ++f[k];
    }
    if (!found) return best;
    best = n;
  }
  return best;
}

}  // namespace oracle
