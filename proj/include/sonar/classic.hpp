#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sonar/error.hpp"
#include "sonar/field.hpp"
#include "sonar/number_theory.hpp"
#include "sonar/sequence.hpp"

namespace sonar {

namespace detail {

inline std::int64_t enc(FieldElem x) { return static_cast<std::int64_t>(x.value); }

inline void require_primitive(const Field& f, FieldElem x, const char* name) {
  if (!f.contains(x) || !f.is_primitive(x))
    throw Error(Errc::NotPrimitive, std::string(name) + "=" + std::to_string(x.value) +
                                        " is not primitive in GF(" + std::to_string(f.order()) +
                                        ")");
}

inline Field prime_field(std::int64_t p) {
  if (!nt::is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  return Field(p, 1);
}

}  // namespace detail

/// f_i = a i^2 + b i + c (mod p), i = 1..p+1: a p x (p+1) modular sonar sequence.
inline SonarSeq quadratic(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t c) {
  if (p == 2 || !nt::is_prime(p))
    throw Error(Errc::NotOddPrime, std::to_string(p) + " is not an odd prime");
  if (nt::mod(a, p) == 0)
    throw Error(Errc::ANotInvertible, "a=" + std::to_string(a) + " vanishes mod " + std::to_string(p));
  std::vector<std::int64_t> f;
  for (std::int64_t i = 1; i <= p + 1; ++i) {
    const std::int64_t ii = i % p;
    f.push_back(nt::mod(nt::mod(a, p) * ii % p * ii + nt::mod(b, p) * ii + nt::mod(c, p), p));
  }
  return SonarSeq(std::move(f), p, true, Provenance{"quadratic", {{"p", p}, {"a", a}, {"b", b}, {"c", c}}});
}

/// f_i = log_beta(alpha^{iq} + alpha^i): a (q-1) x q modular sonar
/// sequence. alpha lives in GF(q^2), beta in GF(q); the sum lies in the
/// image of GF(q) because it is fixed by x -> x^q.
///
/// The sum vanishes exactly when alpha^{i(q-1)} = -1, i.e. once in every
/// q+1 consecutive indices (i = (q+1)/2 mod q+1 for odd q, i = 0 mod q+1
/// for even q). The sequence uses the q indices following that zero, which
/// is i = 1..q in characteristic 2; index_start records the first one.
inline SonarSeq shift(const Embedding& emb, FieldElem alpha, FieldElem beta) {
  const Field& small = emb.small();
  const Field& big = emb.big();
  const std::int64_t q = small.order();
  if (big.order() != q * q)
    throw Error(Errc::InvalidArgument, "shift needs GF(q) inside GF(q^2)");
  detail::require_primitive(big, alpha, "alpha");
  detail::require_primitive(small, beta, "beta");
  auto term = [&](std::int64_t i) { return big.add(big.pow(alpha, i * q), big.pow(alpha, i)); };

  std::int64_t zero_at = -1;
  for (std::int64_t i = 0; i <= q; ++i) {
    if (term(i) == big.zero()) {
      zero_at = i;
      break;
    }
  }
  if (zero_at < 0)
    throw Error(Errc::InternalInvariant, "alpha^(iq) + alpha^i has no zero in [0, q]");

  std::vector<std::int64_t> f;
  for (std::int64_t i = zero_at + 1; i <= zero_at + q; ++i) {
    const auto base = emb.to_small(term(i));
    if (!base || *base == small.zero())
      throw Error(Errc::InternalInvariant,
                  "alpha^(iq) + alpha^i is zero or outside GF(q) at i=" + std::to_string(i));
    f.push_back(small.discrete_log(beta, *base));
  }
  return SonarSeq(std::move(f), q - 1, true,
                  Provenance{"shift",
                             {{"q", q},
                              {"alpha", detail::enc(alpha)},
                              {"beta", detail::enc(beta)},
                              {"index_start", zero_at + 1}}});
}

inline SonarSeq shift(std::int64_t q, FieldElem alpha, FieldElem beta) {
  const auto pp = nt::prime_power(q);
  if (!pp) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  return shift(Embedding(Field(pp->p, pp->r), Field(pp->p, 2 * pp->r)), alpha, beta);
}

/// f_i = alpha^{i+s} mod p for i = 0..p-1: a p x p modular sonar sequence.
/// Position 1 holds i = 0 (index_origin = 0 in the provenance).
inline SonarSeq welch_exp(std::int64_t p, std::int64_t alpha, std::int64_t s) {
  const Field f = detail::prime_field(p);
  if (alpha < 0 || alpha >= p) throw Error(Errc::NotPrimitive, "alpha outside [0, p-1]");
  const FieldElem a{static_cast<std::uint64_t>(alpha)};
  detail::require_primitive(f, a, "alpha");
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i <= p - 1; ++i) out.push_back(detail::enc(f.pow(a, nt::mod(i + s, p - 1))));
  return SonarSeq(std::move(out), p, true,
                  Provenance{"welch-exp", {{"p", p}, {"alpha", alpha}, {"s", s}, {"index_origin", 0}}});
}

/// s = 0 with i = 1..p-1: a p x (p-1) modular sonar sequence.
inline SonarSeq welch_exp_short(std::int64_t p, std::int64_t alpha) {
  const Field f = detail::prime_field(p);
  if (alpha < 0 || alpha >= p) throw Error(Errc::NotPrimitive, "alpha outside [0, p-1]");
  const FieldElem a{static_cast<std::uint64_t>(alpha)};
  detail::require_primitive(f, a, "alpha");
  std::vector<std::int64_t> out;
  for (std::int64_t i = 1; i <= p - 1; ++i) out.push_back(detail::enc(f.pow(a, i)));
  return SonarSeq(std::move(out), p, true, Provenance{"welch-exp-short", {{"p", p}, {"alpha", alpha}}});
}

/// f_i = log_alpha(i), i = 1..p-1: a (p-1) x (p-1) modular sonar sequence.
inline SonarSeq welch_log(std::int64_t p, std::int64_t alpha) {
  const Field f = detail::prime_field(p);
  if (alpha < 0 || alpha >= p) throw Error(Errc::NotPrimitive, "alpha outside [0, p-1]");
  const FieldElem a{static_cast<std::uint64_t>(alpha)};
  detail::require_primitive(f, a, "alpha");
  std::vector<std::int64_t> out;
  for (std::int64_t i = 1; i <= p - 1; ++i) out.push_back(f.discrete_log(a, f.from_int(i)));
  return SonarSeq(std::move(out), p - 1, true, Provenance{"welch-log", {{"p", p}, {"alpha", alpha}}});
}

/// f_i = j where alpha^i + beta^j = 1, i = 1..q-2: a (q-1) x (q-2)
/// modular sonar sequence. alpha = beta is the Lempel construction.
inline SonarSeq golomb(const Field& f, FieldElem alpha, FieldElem beta) {
  const std::int64_t q = f.order();
  if (q <= 2) throw Error(Errc::QTooSmall, "the Golomb construction needs q > 2");
  detail::require_primitive(f, alpha, "alpha");
  detail::require_primitive(f, beta, "beta");
  std::vector<std::int64_t> out;
  for (std::int64_t i = 1; i <= q - 2; ++i) {
    const FieldElem rest = f.sub(f.one(), f.pow(alpha, i));
    out.push_back(f.discrete_log(beta, rest));
  }
  return SonarSeq(std::move(out), q - 1, true,
                  Provenance{"golomb", {{"q", q}, {"alpha", detail::enc(alpha)}, {"beta", detail::enc(beta)}}});
}

inline SonarSeq golomb(std::int64_t q, FieldElem alpha, FieldElem beta) {
  if (q <= 2) throw Error(Errc::QTooSmall, "the Golomb construction needs q > 2");
  return golomb(Field::of_order(q), alpha, beta);
}

}  // namespace sonar
