#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "sonar/error.hpp"
#include "sonar/number_theory.hpp"
#include "sonar/sequence.hpp"

namespace sonar {

enum class Mode { Plain, Modular };

/// Violation of the distinct-differences property:
/// f(i+h) - f(i) = f(j+h) - f(j) with i < j (1-based).
struct Witness {
  std::int64_t h;
  std::int64_t i;
  std::int64_t j;

  friend auto operator<=>(const Witness&, const Witness&) = default;
};

struct VerifyReport {
  bool pass = true;
  std::optional<Witness> witness;
  Mode mode = Mode::Plain;
  std::int64_t m = 0;  // 0 in plain mode

  explicit operator bool() const { return pass; }
};

/// Row h (1-based shift) holds the n-h differences f(i+h) - f(i).
struct DifferenceTriangle {
  std::vector<std::vector<std::int64_t>> rows;

  const std::vector<std::int64_t>& row(std::int64_t h) const {
    return rows.at(static_cast<std::size_t>(h - 1));
  }
};

namespace detail {

inline std::int64_t difference(std::int64_t a, std::int64_t b, std::int64_t m) {
  return m > 0 ? nt::mod(a - b, m) : a - b;
}

// Lexicographically least (h, i, j) violation; m = 0 means plain.
inline VerifyReport scan(std::span<const std::int64_t> f, std::int64_t m) {
  if (f.empty()) throw Error(Errc::EmptySequence, "cannot verify an empty sequence");
  VerifyReport report{true, std::nullopt, m > 0 ? Mode::Modular : Mode::Plain, m};
  const auto n = static_cast<std::int64_t>(f.size());
  std::unordered_map<std::int64_t, std::int64_t> first;
  for (std::int64_t h = 1; h < n; ++h) {
    first.clear();
    std::optional<Witness> best;
    for (std::int64_t j = 0; j + h < n; ++j) {
      const auto d = difference(f[j + h], f[j], m);
      auto [it, inserted] = first.try_emplace(d, j);
      if (!inserted) {
        const Witness w{h, it->second + 1, j + 1};
        if (!best || w < *best) best = w;
      }
    }
    if (best) {
      report.pass = false;
      report.witness = best;
      return report;
    }
  }
  return report;
}

}  // namespace detail

inline VerifyReport check_plain(std::span<const std::int64_t> f) { return detail::scan(f, 0); }

inline VerifyReport check_plain(const SonarSeq& seq) { return check_plain(seq.values()); }

inline VerifyReport check_modular(std::span<const std::int64_t> f, std::int64_t m) {
  if (m < 1) throw Error(Errc::InvalidArgument, "modulus must be >= 1");
  return detail::scan(f, m);
}

inline VerifyReport check_modular(const SonarSeq& seq, std::int64_t m) {
  return check_modular(seq.values(), m);
}

/// Modular check against the sequence's own modulus, plain otherwise.
inline VerifyReport check(const SonarSeq& seq) {
  return seq.modular() ? check_modular(seq, seq.m()) : check_plain(seq);
}

/// Pass m = 0 for plain differences; otherwise entries are reduced to [0, m-1].
inline DifferenceTriangle difference_triangle(std::span<const std::int64_t> f, std::int64_t m = 0) {
  if (f.empty()) throw Error(Errc::EmptySequence, "cannot triangulate an empty sequence");
  const auto n = static_cast<std::int64_t>(f.size());
  DifferenceTriangle tri;
  for (std::int64_t h = 1; h < n; ++h) {
    auto& row = tri.rows.emplace_back();
    row.reserve(static_cast<std::size_t>(n - h));
    for (std::int64_t i = 0; i + h < n; ++i) row.push_back(detail::difference(f[i + h], f[i], m));
  }
  return tri;
}

inline DifferenceTriangle difference_triangle(const SonarSeq& seq, Mode mode) {
  return difference_triangle(seq.values(), mode == Mode::Modular ? seq.m() : 0);
}

/// Second route to the same decision: every triangle row duplicate-free.
inline bool triangle_rows_distinct(const DifferenceTriangle& tri) {
  for (auto row : tri.rows) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) return false;
  }
  return true;
}

}  // namespace sonar
