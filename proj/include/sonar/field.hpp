#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sonar/error.hpp"
#include "sonar/number_theory.hpp"

namespace sonar {

/// An element of GF(p^r), encoded as the integer sum c_k p^k of its
/// coefficient vector in the polynomial basis. The encoding doubles as the
/// canonical element order.
struct FieldElem {
  std::uint64_t value = 0;

  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

/// Finite field GF(p^r) represented as GF(p)[x] / (modulus).
///
/// The modulus is the smallest monic irreducible polynomial of degree r and
/// the distinguished primitive element is the smallest generator of the
/// multiplicative group, both in the integer-encoding order. Instances are
/// immutable; copies share their tables.
class Field {
 public:
  /// Fields at most this large get exp/log tables; larger ones fall back to
  /// square-and-multiply and baby-step giant-step logarithms.
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;
  /// Largest order whose square minus one still fits in int64.
  static constexpr std::uint64_t kMaxOrder = 3037000499ULL;

  Field(std::int64_t p, int r) {
    if (r < 1) throw Error(Errc::DegreeZero, "extension degree must be >= 1");
    if (!nt::is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    std::uint64_t q = 1;
    for (int i = 0; i < r; ++i) {
      if (q > kMaxOrder / static_cast<std::uint64_t>(p))
        throw Error(Errc::OrderOverflow,
                    std::to_string(p) + "^" + std::to_string(r) + " is too large");
      q *= static_cast<std::uint64_t>(p);
    }
    auto impl = std::make_shared<Impl>();
    impl->p = static_cast<std::uint64_t>(p);
    impl->r = r;
    impl->q = q;
    impl_ = impl;
    impl->modulus = find_modulus();
    impl->group_factors = nt::prime_factors(q - 1);
    impl->primitive = find_primitive();
    if (q <= kTableLimit) build_tables(*impl);
  }

  /// GF(q) for a prime power q.
  static Field of_order(std::int64_t q) {
    const auto pp = nt::prime_power(q);
    if (!pp) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
    return Field(pp->p, pp->r);
  }

  std::int64_t characteristic() const { return static_cast<std::int64_t>(impl_->p); }
  int degree() const { return impl_->r; }
  std::int64_t order() const { return static_cast<std::int64_t>(impl_->q); }
  /// Monic modulus, coefficients from x^0 up to x^r.
  const std::vector<std::uint64_t>& modulus() const { return impl_->modulus; }
  FieldElem primitive() const { return impl_->primitive; }
  bool has_tables() const { return !impl_->log.empty(); }

  FieldElem zero() const { return FieldElem{0}; }
  FieldElem one() const { return FieldElem{1}; }

  /// Checked conversion from the integer encoding.
  FieldElem element(std::uint64_t v) const {
    if (v >= impl_->q)
      throw Error(Errc::NotInField,
                  std::to_string(v) + " is not an element of GF(" + std::to_string(impl_->q) + ")");
    return FieldElem{v};
  }

  /// Image of an integer in the prime subfield.
  FieldElem from_int(std::int64_t n) const {
    return FieldElem{static_cast<std::uint64_t>(nt::mod(n, characteristic()))};
  }

  bool contains(FieldElem x) const { return x.value < impl_->q; }

  std::vector<std::uint64_t> coeffs(FieldElem x) const {
    check(x);
    std::vector<std::uint64_t> c(impl_->r);
    for (auto& ci : c) {
      ci = x.value % impl_->p;
      x.value /= impl_->p;
    }
    return c;
  }

  FieldElem from_coeffs(const std::vector<std::uint64_t>& c) const {
    std::uint64_t v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * impl_->p + (*it % impl_->p);
    return FieldElem{v};
  }

  FieldElem add(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    if (impl_->r == 1) return FieldElem{(a.value + b.value) % impl_->p};
    std::uint64_t out = 0, scale = 1;
    for (int k = 0; k < impl_->r; ++k) {
      out += ((a.value % impl_->p + b.value % impl_->p) % impl_->p) * scale;
      a.value /= impl_->p;
      b.value /= impl_->p;
      scale *= impl_->p;
    }
    return FieldElem{out};
  }

  FieldElem neg(FieldElem a) const {
    check(a);
    std::uint64_t out = 0, scale = 1;
    for (int k = 0; k < impl_->r; ++k) {
      const std::uint64_t c = a.value % impl_->p;
      out += ((impl_->p - c) % impl_->p) * scale;
      a.value /= impl_->p;
      scale *= impl_->p;
    }
    return FieldElem{out};
  }

  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

  FieldElem mul(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    if (a.value == 0 || b.value == 0) return zero();
    if (has_tables()) {
      const auto& I = *impl_;
      return FieldElem{I.exp[(I.log[a.value] + I.log[b.value]) % (I.q - 1)]};
    }
    return poly_mul(*impl_, a, b);
  }

  FieldElem inv(FieldElem a) const {
    check(a);
    if (a.value == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (has_tables()) {
      const auto& I = *impl_;
      return FieldElem{I.exp[(I.q - 1 - I.log[a.value]) % (I.q - 1)]};
    }
    return pow(a, static_cast<std::int64_t>(impl_->q - 2));
  }

  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

  /// x^e; negative exponents invert first. 0^0 = 1.
  FieldElem pow(FieldElem x, std::int64_t e) const {
    check(x);
    if (e < 0) {
      x = inv(x);
      e = -e;
    }
    if (x.value == 0) return e == 0 ? one() : zero();
    const std::uint64_t group = impl_->q - 1;
    std::uint64_t ue = static_cast<std::uint64_t>(e) % group;
    if (has_tables()) {
      const auto& I = *impl_;
      return FieldElem{I.exp[nt::mulmod(I.log[x.value], ue, group)]};
    }
    FieldElem result = one();
    while (ue > 0) {
      if (ue & 1) result = poly_mul(*impl_, result, x);
      x = poly_mul(*impl_, x, x);
      ue >>= 1;
    }
    return result;
  }

  /// Multiplicative order of a nonzero element.
  std::int64_t element_order(FieldElem x) const {
    check(x);
    if (x.value == 0) throw Error(Errc::ZeroElement, "order of zero is undefined");
    std::uint64_t ord = impl_->q - 1;
    if (has_tables()) return static_cast<std::int64_t>(ord / std::gcd(ord, impl_->log[x.value]));
    for (auto f : impl_->group_factors) {
      while (ord % f == 0 && pow(x, static_cast<std::int64_t>(ord / f)) == one()) ord /= f;
    }
    return static_cast<std::int64_t>(ord);
  }

  bool is_primitive(FieldElem x) const {
    return contains(x) && x.value != 0 &&
           element_order(x) == static_cast<std::int64_t>(impl_->q - 1);
  }

  /// All generators of the multiplicative group, in canonical element order.
  std::vector<FieldElem> primitive_elements() const {
    std::vector<FieldElem> out;
    for (std::uint64_t v = 1; v < impl_->q; ++v)
      if (is_primitive(FieldElem{v})) out.push_back(FieldElem{v});
    return out;
  }

  /// Exponent k in [0, q-2] with theta^k = x.
  std::int64_t discrete_log(FieldElem theta, FieldElem x) const {
    check(x);
    if (x.value == 0) throw Error(Errc::LogOfZero, "logarithm of zero");
    if (!is_primitive(theta))
      throw Error(Errc::NotPrimitive, std::to_string(theta.value) + " is not primitive");
    const std::uint64_t group = impl_->q - 1;
    if (has_tables()) {
      const auto& I = *impl_;
      // log_theta(x) = log_g(x) / log_g(theta) in Z_{q-1}.
      const auto inv_base = static_cast<std::uint64_t>(
          nt::inverse_mod(static_cast<std::int64_t>(I.log[theta.value]),
                          static_cast<std::int64_t>(group)));
      return static_cast<std::int64_t>(nt::mulmod(I.log[x.value], inv_base, group));
    }
    return baby_step_giant_step(theta, x);
  }

  /// x lies in the subfield of order sub_order iff x^sub_order = x.
  bool in_subfield(FieldElem x, std::int64_t sub_order) const {
    return pow(x, sub_order) == x;
  }

  /// The subfield of order sub_order as {0} together with the powers of
  /// primitive^((q-1)/(sub_order-1)), sorted.
  std::vector<FieldElem> subfield_elements(std::int64_t sub_order) const {
    const auto group = static_cast<std::int64_t>(impl_->q - 1);
    const auto pp = nt::prime_power(sub_order);
    if (!pp || pp->p != characteristic() || impl_->r % pp->r != 0)
      throw Error(Errc::InvalidArgument,
                  "GF(" + std::to_string(impl_->q) + ") has no subfield of order " +
                      std::to_string(sub_order));
    const FieldElem step = pow(primitive(), group / (sub_order - 1));
    std::vector<FieldElem> out{zero()};
    FieldElem x = one();
    for (std::int64_t k = 0; k < sub_order - 1; ++k) {
      out.push_back(x);
      x = mul(x, step);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Evaluates a polynomial with GF(p) coefficients (x^0 first) at x.
  FieldElem eval(const std::vector<std::uint64_t>& poly, FieldElem x) const {
    FieldElem acc = zero();
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
      acc = add(mul(acc, x), from_int(static_cast<std::int64_t>(*it % impl_->p)));
    return acc;
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.impl_->p == b.impl_->p && a.impl_->r == b.impl_->r &&
           a.impl_->modulus == b.impl_->modulus;
  }

 private:
  struct Impl {
    std::uint64_t p = 0;
    int r = 0;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> modulus;
    std::vector<std::uint64_t> group_factors;
    FieldElem primitive;
    std::vector<std::uint64_t> exp;
    std::vector<std::uint64_t> log;
  };

  void check(FieldElem x) const {
    if (x.value >= impl_->q)
      throw Error(Errc::NotInField,
                  std::to_string(x.value) + " is not an element of GF(" +
                      std::to_string(impl_->q) + ")");
  }

  static FieldElem poly_mul(const Impl& I, FieldElem a, FieldElem b) {
    const int r = I.r;
    const std::uint64_t p = I.p;
    std::vector<std::uint64_t> ca(r), cb(r), prod(2 * r - 1, 0);
    for (int k = 0; k < r; ++k) {
      ca[k] = a.value % p;
      a.value /= p;
      cb[k] = b.value % p;
      b.value /= p;
    }
    for (int i = 0; i < r; ++i) {
      if (ca[i] == 0) continue;
      for (int j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j] % p) % p;
    }
    for (int d = 2 * r - 2; d >= r; --d) {
      const std::uint64_t c = prod[d];
      if (c == 0) continue;
      for (int k = 0; k <= r; ++k)
        prod[d - r + k] = (prod[d - r + k] + (p - c) * I.modulus[k] % p) % p;
    }
    std::uint64_t v = 0;
    for (int k = r - 1; k >= 0; --k) v = v * p + prod[k];
    return FieldElem{v};
  }

  // Remainder of f modulo the monic polynomial g, both over GF(p).
  static bool divides(std::vector<std::uint64_t> f, const std::vector<std::uint64_t>& g,
                      std::uint64_t p) {
    const std::size_t dg = g.size() - 1;
    for (std::size_t d = f.size() - 1; d >= dg; --d) {
      const std::uint64_t c = f[d];
      if (c != 0)
        for (std::size_t k = 0; k <= dg; ++k)
          f[d - dg + k] = (f[d - dg + k] + (p - c) * g[k] % p) % p;
      if (d == 0) break;
    }
    for (std::size_t k = 0; k < dg; ++k)
      if (f[k] != 0) return false;
    return true;
  }

  static std::vector<std::uint64_t> monic_from_index(std::uint64_t idx, int deg,
                                                     std::uint64_t p) {
    std::vector<std::uint64_t> poly(deg + 1);
    for (int k = 0; k < deg; ++k) {
      poly[k] = idx % p;
      idx /= p;
    }
    poly[deg] = 1;
    return poly;
  }

  /// Irreducibility by trial division against every monic polynomial of
  /// degree at most deg/2.
  static bool irreducible(const std::vector<std::uint64_t>& f, std::uint64_t p) {
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; d <= deg / 2; ++d) {
      std::uint64_t count = 1;
      for (int k = 0; k < d; ++k) count *= p;
      for (std::uint64_t idx = 0; idx < count; ++idx)
        if (divides(f, monic_from_index(idx, d, p), p)) return false;
    }
    return true;
  }

  std::vector<std::uint64_t> find_modulus() const {
    const auto& I = *impl_;
    for (std::uint64_t idx = 0; idx < I.q; ++idx) {
      auto poly = monic_from_index(idx, I.r, I.p);
      if (irreducible(poly, I.p)) return poly;
    }
    throw Error(Errc::InternalInvariant, "no irreducible polynomial found");
  }

  FieldElem find_primitive() const {
    const auto& I = *impl_;
    for (std::uint64_t v = 1; v < I.q; ++v) {
      bool generator = true;
      for (auto f : I.group_factors) {
        if (slow_pow(I, FieldElem{v}, (I.q - 1) / f) == one()) {
          generator = false;
          break;
        }
      }
      if (generator) return FieldElem{v};
    }
    throw Error(Errc::InternalInvariant, "no primitive element found");
  }

  static FieldElem slow_pow(const Impl& I, FieldElem x, std::uint64_t e) {
    FieldElem result{1};
    while (e > 0) {
      if (e & 1) result = poly_mul(I, result, x);
      x = poly_mul(I, x, x);
      e >>= 1;
    }
    return result;
  }

  static void build_tables(Impl& I) {
    I.exp.resize(I.q - 1);
    I.log.assign(I.q, 0);
    FieldElem x{1};
    for (std::uint64_t k = 0; k + 1 < I.q; ++k) {
      I.exp[k] = x.value;
      I.log[x.value] = k;
      x = poly_mul(I, x, I.primitive);
    }
  }

  std::int64_t baby_step_giant_step(FieldElem theta, FieldElem x) const {
    const std::uint64_t group = impl_->q - 1;
    const auto steps = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(group))));
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(steps);
    FieldElem y = one();
    for (std::uint64_t j = 0; j < steps; ++j) {
      baby.emplace(y.value, j);
      y = mul(y, theta);
    }
    const FieldElem giant = inv(pow(theta, static_cast<std::int64_t>(steps)));
    FieldElem cur = x;
    for (std::uint64_t i = 0; i <= steps; ++i) {
      if (auto it = baby.find(cur.value); it != baby.end())
        return static_cast<std::int64_t>((i * steps + it->second) % group);
      cur = mul(cur, giant);
    }
    throw Error(Errc::InternalInvariant, "discrete logarithm not found");
  }

  std::shared_ptr<const Impl> impl_;
};

/// The canonical embedding of a subfield GF(p^s) into GF(p^r), s | r,
/// sending the generator of the small field to the smallest root of its
/// modulus in the big field.
class Embedding {
 public:
  Embedding(Field small, Field big) : small_(std::move(small)), big_(std::move(big)) {
    if (small_.characteristic() != big_.characteristic() ||
        big_.degree() % small_.degree() != 0)
      throw Error(Errc::InvalidArgument, "GF(" + std::to_string(small_.order()) +
                                             ") is not a subfield of GF(" +
                                             std::to_string(big_.order()) + ")");
    std::optional<FieldElem> root;
    for (std::int64_t v = 0; v < big_.order(); ++v) {
      const FieldElem x{static_cast<std::uint64_t>(v)};
      if (big_.eval(small_.modulus(), x) == big_.zero()) {
        root = x;
        break;
      }
    }
    if (!root) throw Error(Errc::InternalInvariant, "modulus has no root in extension");
    FieldElem pw = big_.one();
    for (int k = 0; k < small_.degree(); ++k) {
      basis_.push_back(pw);
      pw = big_.mul(pw, *root);
    }
    for (std::int64_t v = 0; v < small_.order(); ++v) {
      const FieldElem s{static_cast<std::uint64_t>(v)};
      preimage_.emplace(to_big(s).value, s);
    }
  }

  const Field& small() const { return small_; }
  const Field& big() const { return big_; }

  FieldElem to_big(FieldElem x) const {
    const auto c = small_.coeffs(x);
    FieldElem acc = big_.zero();
    for (std::size_t k = 0; k < c.size(); ++k)
      acc = big_.add(acc, big_.mul(big_.from_int(static_cast<std::int64_t>(c[k])), basis_[k]));
    return acc;
  }

  /// Preimage in the small field, if x lies in the embedded image.
  std::optional<FieldElem> to_small(FieldElem x) const {
    if (auto it = preimage_.find(x.value); it != preimage_.end()) return it->second;
    return std::nullopt;
  }

 private:
  Field small_;
  Field big_;
  std::vector<FieldElem> basis_;
  std::unordered_map<std::uint64_t, FieldElem> preimage_;
};

}  // namespace sonar
