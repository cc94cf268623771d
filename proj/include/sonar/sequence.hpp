#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sonar/error.hpp"

namespace sonar {

/// Where a set or sequence came from: a construction name plus its
/// parameters in a fixed order (element parameters use the field encoding).
struct Provenance {
  std::string construction;
  std::vector<std::pair<std::string, std::int64_t>> params;

  std::optional<std::int64_t> param(std::string_view key) const {
    for (const auto& [k, v] : params)
      if (k == key) return v;
    return std::nullopt;
  }

  /// "k1=v1;k2=v2"
  std::string params_string() const {
    std::string out;
    for (const auto& [k, v] : params) {
      if (!out.empty()) out += ';';
      out += k + "=" + std::to_string(v);
    }
    return out;
  }

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// An m x n sonar sequence. Modular sequences take values in [0, m-1],
/// plain ones in [1, m]. Positions are 1-based at the API surface.
class SonarSeq {
 public:
  SonarSeq(std::vector<std::int64_t> values, std::int64_t m, bool modular,
           Provenance provenance = {})
      : values_(std::move(values)), m_(m), modular_(modular), provenance_(std::move(provenance)) {
    if (values_.empty()) throw Error(Errc::EmptySequence, "a sonar sequence needs n >= 1");
    if (m_ < 1) throw Error(Errc::InvalidArgument, "m must be >= 1");
    const std::int64_t lo = modular_ ? 0 : 1;
    const std::int64_t hi = modular_ ? m_ - 1 : m_;
    for (auto v : values_)
      if (v < lo || v > hi)
        throw Error(Errc::InvalidArgument, "value " + std::to_string(v) + " outside [" +
                                               std::to_string(lo) + ", " + std::to_string(hi) +
                                               "]");
  }

  std::int64_t n() const { return static_cast<std::int64_t>(values_.size()); }
  std::int64_t m() const { return m_; }
  bool modular() const { return modular_; }
  const std::vector<std::int64_t>& values() const { return values_; }
  const Provenance& provenance() const { return provenance_; }

  std::int64_t operator()(std::int64_t i) const { return values_.at(static_cast<std::size_t>(i - 1)); }

  friend bool operator==(const SonarSeq&, const SonarSeq&) = default;

 private:
  std::vector<std::int64_t> values_;
  std::int64_t m_;
  bool modular_;
  Provenance provenance_;
};

}  // namespace sonar
