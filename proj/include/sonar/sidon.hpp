#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sonar/error.hpp"
#include "sonar/field.hpp"
#include "sonar/number_theory.hpp"
#include "sonar/sequence.hpp"

namespace sonar {

/// A subset of Z_N. Elements are kept sorted and distinct.
class SidonSet {
 public:
  SidonSet(std::int64_t modulus, std::vector<std::int64_t> elements, Provenance provenance = {})
      : modulus_(modulus), elements_(std::move(elements)), provenance_(std::move(provenance)) {
    if (modulus_ < 1) throw Error(Errc::InvalidArgument, "group order must be >= 1");
    for (auto a : elements_)
      if (a < 0 || a >= modulus_)
        throw Error(Errc::InvalidArgument,
                    std::to_string(a) + " is not a residue mod " + std::to_string(modulus_));
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
      throw Error(Errc::InvalidArgument, "duplicate elements");
    if (provenance_.construction.empty()) provenance_.construction = "external";
  }

  std::int64_t modulus() const { return modulus_; }
  const std::vector<std::int64_t>& elements() const { return elements_; }
  std::int64_t size() const { return static_cast<std::int64_t>(elements_.size()); }
  const Provenance& provenance() const { return provenance_; }

  friend bool operator==(const SidonSet&, const SidonSet&) = default;

 private:
  std::int64_t modulus_;
  std::vector<std::int64_t> elements_;
  Provenance provenance_;
};

/// On failure, a + b = c + d (mod N) with {a, b} != {c, d}.
struct SidonReport {
  bool pass = true;
  std::optional<std::array<std::int64_t, 4>> witness;

  explicit operator bool() const { return pass; }
};

/// All sums a_i + a_j (i <= j) must be distinct mod N. The witness is the
/// first collision in (i, j) order, paired with the earlier sum it repeats.
inline SidonReport verify_sidon(const SidonSet& s) {
  const auto& a = s.elements();
  const auto N = s.modulus();
  std::unordered_map<std::int64_t, std::pair<std::int64_t, std::int64_t>> seen;
  seen.reserve(a.size() * (a.size() + 1) / 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) {
      auto [it, inserted] = seen.try_emplace((a[i] + a[j]) % N, a[i], a[j]);
      if (!inserted)
        return {false, std::array{it->second.first, it->second.second, a[i], a[j]}};
    }
  }
  return {};
}

/// floor((1 + sqrt(4N - 3)) / 2) in integer arithmetic: an upper bound on
/// the size of any Sidon set in a group of order N.
inline std::int64_t max_sidon_bound(std::int64_t N) {
  if (N < 1) throw Error(Errc::InvalidArgument, "group order must be >= 1");
  // floor((1 + sqrt(x)) / 2) == floor((1 + isqrt(x)) / 2) for integer x.
  return static_cast<std::int64_t>((1 + nt::isqrt(static_cast<std::uint64_t>(4 * N - 3))) / 2);
}

/// Multiset {a mod b}, sorted.
inline std::vector<std::int64_t> residues(const SidonSet& s, std::int64_t b) {
  if (b < 1) throw Error(Errc::InvalidArgument, "b must be >= 1");
  std::vector<std::int64_t> out;
  out.reserve(s.elements().size());
  for (auto a : s.elements()) out.push_back(a % b);
  std::sort(out.begin(), out.end());
  return out;
}

/// True iff the residues mod b hit each class represented by [1, n] exactly
/// once and nothing else. Class 0 is represented by n when b divides n.
inline bool coverage_check(const SidonSet& s, std::int64_t b, std::int64_t n) {
  if (b < 1 || n < 0) throw Error(Errc::InvalidArgument, "need b >= 1 and n >= 0");
  if (s.size() != n) return false;
  std::vector<std::int64_t> expected;
  for (std::int64_t i = 1; i <= n; ++i) expected.push_back(i % b);
  std::sort(expected.begin(), expected.end());
  return residues(s, b) == expected;
}

/// log_theta(alpha + F_q) in Z_{q^2-1}, computed inside the given GF(q^2).
inline SidonSet bose(const Field& big, FieldElem theta, FieldElem alpha) {
  const std::int64_t Q = big.order();
  const auto q = static_cast<std::int64_t>(nt::isqrt(static_cast<std::uint64_t>(Q)));
  if (q * q != Q || big.degree() % 2 != 0)
    throw Error(Errc::InvalidArgument, "GF(" + std::to_string(Q) + ") is not GF(q^2)");
  if (!big.is_primitive(theta))
    throw Error(Errc::NotPrimitive, "theta=" + std::to_string(theta.value) + " is not primitive");
  big.element(alpha.value);
  if (big.in_subfield(alpha, q))
    throw Error(Errc::AlphaInBaseField,
                "alpha=" + std::to_string(alpha.value) + " lies in GF(" + std::to_string(q) + ")");
  std::vector<std::int64_t> logs;
  logs.reserve(static_cast<std::size_t>(q));
  for (auto a : big.subfield_elements(q)) logs.push_back(big.discrete_log(theta, big.add(alpha, a)));
  return SidonSet(Q - 1, std::move(logs),
                  Provenance{"bose",
                             {{"q", q},
                              {"theta", static_cast<std::int64_t>(theta.value)},
                              {"alpha", static_cast<std::int64_t>(alpha.value)}}});
}

inline SidonSet bose(std::int64_t q, FieldElem theta, FieldElem alpha) {
  const auto pp = nt::prime_power(q);
  if (!pp) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  return bose(Field(pp->p, 2 * pp->r), theta, alpha);
}

/// Smallest element of GF(q^2) outside the subfield GF(q).
inline FieldElem canonical_bose_alpha(const Field& big) {
  const auto q = static_cast<std::int64_t>(nt::isqrt(static_cast<std::uint64_t>(big.order())));
  for (std::int64_t v = 0; v < big.order(); ++v) {
    const FieldElem x{static_cast<std::uint64_t>(v)};
    if (!big.in_subfield(x, q)) return x;
  }
  throw Error(Errc::InternalInvariant, "no element outside the base field");
}

/// {i p - theta^i (p - 1) mod (p^2 - p) : 1 <= i <= p - 1}.
inline SidonSet ruzsa(std::int64_t p, std::int64_t theta) {
  if (!nt::is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(Errc::NotOddPrime, "the Ruzsa construction needs an odd prime");
  if (theta < 0 || theta >= p || !Field(p, 1).is_primitive(FieldElem{static_cast<std::uint64_t>(theta)}))
    throw Error(Errc::NotPrimitive, std::to_string(theta) + " is not a primitive root mod " +
                                        std::to_string(p));
  const std::int64_t N = p * p - p;
  std::vector<std::int64_t> out;
  std::int64_t power = 1;
  for (std::int64_t i = 1; i <= p - 1; ++i) {
    power = power * theta % p;
    out.push_back(nt::mod(i * p - power * (p - 1), N));
  }
  return SidonSet(N, std::move(out), Provenance{"ruzsa", {{"p", p}, {"theta", theta}}});
}

}  // namespace sonar
