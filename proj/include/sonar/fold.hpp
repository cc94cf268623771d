#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "sonar/error.hpp"
#include "sonar/field.hpp"
#include "sonar/sequence.hpp"
#include "sonar/sidon.hpp"

namespace sonar {

/// Folds a Sidon set in Z_{m b} whose residues mod b cover [1, n] into an
/// m x n modular sonar sequence with f = floor(a / b).
///
/// Positions follow the least nonnegative residue of each element. When
/// n < b those residues are 1..n; when n = b the element in class 0 comes
/// first and the provenance records index_origin = 0, since a = f b + k
/// only holds with k in [0, b-1].
inline SonarSeq fold_sidon(const SidonSet& s, std::int64_t m, std::int64_t b) {
  if (m < 1 || b < 1) throw Error(Errc::InvalidArgument, "m and b must be >= 1");
  if (s.modulus() != m * b)
    throw Error(Errc::ModulusMismatch, "set lives in Z_" + std::to_string(s.modulus()) +
                                           ", not Z_" + std::to_string(m * b));
  const std::int64_t n = s.size();
  if (n < 1) throw Error(Errc::CoverageFailure, "empty set");
  if (n > b || !coverage_check(s, b, n))
    throw Error(Errc::CoverageFailure, "residues mod " + std::to_string(b) +
                                           " are not one per class of [1, " + std::to_string(n) +
                                           "]");
  if (auto report = verify_sidon(s); !report)
    throw Error(Errc::NotSidon, "set fails the Sidon property");

  std::vector<std::int64_t> by_residue(s.elements());
  std::sort(by_residue.begin(), by_residue.end(),
            [b](std::int64_t x, std::int64_t y) { return x % b < y % b; });
  std::vector<std::int64_t> values;
  values.reserve(by_residue.size());
  for (auto a : by_residue) values.push_back(a / b);

  Provenance prov{"fold", {}};
  if (s.provenance().construction != "external") prov.construction = s.provenance().construction + "-fold";
  prov.params = s.provenance().params;
  prov.params.emplace_back("m", m);
  prov.params.emplace_back("b", b);
  prov.params.emplace_back("index_origin", n == b ? 0 : 1);
  return SonarSeq(std::move(values), m, true, std::move(prov));
}

/// Inverse of fold_sidon: a = f b + k, k the least nonnegative residue of
/// the position (position - index_origin + 1 mapped into [0, b-1]).
inline std::vector<std::int64_t> unfold(const SonarSeq& seq, std::int64_t b) {
  const auto origin = seq.provenance().param("index_origin").value_or(1);
  std::vector<std::int64_t> out;
  for (std::int64_t pos = 0; pos < seq.n(); ++pos) {
    const std::int64_t k = (pos + origin) % b;
    out.push_back(seq.values()[static_cast<std::size_t>(pos)] * b + k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// (q-1) x q modular sonar sequence from a Bose set, folded by q+1.
inline SonarSeq sonar_from_bose(const Field& big, FieldElem theta, FieldElem alpha) {
  const auto set = bose(big, theta, alpha);
  const auto q = *set.provenance().param("q");
  return fold_sidon(set, q - 1, q + 1);
}

inline SonarSeq sonar_from_bose(std::int64_t q, FieldElem theta, FieldElem alpha) {
  const auto set = bose(q, theta, alpha);
  return fold_sidon(set, q - 1, q + 1);
}

/// (p-1) x (p-1) modular sonar sequence from a Ruzsa set, folded by p.
inline SonarSeq sonar_from_ruzsa_mod_p(std::int64_t p, std::int64_t theta) {
  auto seq = fold_sidon(ruzsa(p, theta), p - 1, p);
  auto prov = seq.provenance();
  prov.construction = "ruzsa-fold-mod-p";
  return SonarSeq(seq.values(), seq.m(), true, std::move(prov));
}

/// p x (p-1) modular sonar sequence from a Ruzsa set, folded by p-1.
inline SonarSeq sonar_from_ruzsa_mod_p_minus_1(std::int64_t p, std::int64_t theta) {
  auto seq = fold_sidon(ruzsa(p, theta), p, p - 1);
  auto prov = seq.provenance();
  prov.construction = "ruzsa-fold-mod-p-minus-1";
  return SonarSeq(seq.values(), seq.m(), true, std::move(prov));
}

}  // namespace sonar
