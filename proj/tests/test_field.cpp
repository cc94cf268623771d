#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "sonar/field.hpp"

using sonar::Embedding;
using sonar::Errc;
using sonar::Error;
using sonar::Field;
using sonar::FieldElem;

namespace {

FieldElem E(std::uint64_t v) { return FieldElem{v}; }

template <class F>
void expect_error(Errc code, F&& f) {
  try {
    f();
    FAIL() << "expected " << sonar::errc_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

// Schoolbook product of two polynomials over GF(p) reduced by a monic
// modulus, on coefficient vectors.
std::vector<std::uint64_t> ref_mulmod(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                      const std::vector<std::uint64_t>& modulus, std::uint64_t p) {
  const std::size_t r = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = 2 * r - 1; d >= r; --d) {
    const auto c = prod[d];
    for (std::size_t k = 0; k <= r; ++k) prod[d - r + k] = (prod[d - r + k] + (p - c) * modulus[k]) % p;
  }
  prod.resize(r);
  return prod;
}

}  // namespace

TEST(Field, PrimeFieldOfOrderThree) {
  const Field f(3, 1);
  EXPECT_EQ(f.order(), 3);
  EXPECT_EQ(f.modulus(), (std::vector<std::uint64_t>{0, 1}));  // x
  EXPECT_EQ(f.primitive(), E(2));
  EXPECT_EQ(oracle::order_mod(2, 3), 2);
}

TEST(Field, ExtensionOfOrderNine) {
  const Field f(3, 2);
  EXPECT_EQ(f.order(), 9);
  EXPECT_EQ(f.element_order(f.primitive()), 8);
}

TEST(Field, ConstructionErrors) {
  expect_error(Errc::NotPrime, [] { Field(4, 1); });
  expect_error(Errc::DegreeZero, [] { Field(3, 0); });
  expect_error(Errc::OrderOverflow, [] { Field(2, 40); });
  expect_error(Errc::NotPrimePower, [] { Field::of_order(12); });
}

TEST(Field, ModulusIsSmallestIrreducible) {
  // x^4 + x + 2 over GF(3); every smaller monic quartic has a root or a
  // quadratic factor.
  EXPECT_EQ(Field(3, 4).modulus(), (std::vector<std::uint64_t>{2, 1, 0, 0, 1}));
  EXPECT_EQ(Field(2, 2).modulus(), (std::vector<std::uint64_t>{1, 1, 1}));
  EXPECT_EQ(Field(2, 3).modulus(), (std::vector<std::uint64_t>{1, 1, 0, 1}));
}

TEST(Field, PrimitivePowersCoverTheGroup) {
  // Only a field has a cyclic unit group of order q - 1, so this also
  // certifies the modulus is irreducible.
  for (auto [p, r] : {std::pair{2, 4}, {3, 3}, {5, 2}, {7, 2}, {3, 4}, {2, 6}}) {
    const Field f(p, r);
    std::set<std::uint64_t> seen;
    FieldElem x = f.one();
    for (std::int64_t k = 0; k < f.order() - 1; ++k) {
      seen.insert(x.value);
      x = f.mul(x, f.primitive());
    }
    EXPECT_EQ(static_cast<std::int64_t>(seen.size()), f.order() - 1) << p << "^" << r;
    EXPECT_EQ(seen.count(0), 0u);
  }
}

TEST(Field, BasicArithmetic) {
  const Field gf5(5, 1);
  EXPECT_EQ(gf5.mul(E(2), E(3)), E(1));
  const Field gf9(3, 2);
  for (std::uint64_t v = 0; v < 9; ++v) {
    EXPECT_EQ(gf9.add(E(v), gf9.zero()), E(v));
    EXPECT_EQ(gf9.add(E(v), gf9.neg(E(v))), gf9.zero());
    if (v != 0) {
      EXPECT_EQ(gf9.mul(E(v), gf9.inv(E(v))), gf9.one());
    }
  }
  expect_error(Errc::DivisionByZero, [&] { gf9.inv(gf9.zero()); });
  expect_error(Errc::NotInField, [&] { gf9.element(9); });
}

TEST(Field, AxiomsOnSmallFields) {
  for (auto [p, r] : {std::pair{2, 3}, {3, 2}, {2, 4}, {5, 1}}) {
    const Field f(p, r);
    const auto q = static_cast<std::uint64_t>(f.order());
    for (std::uint64_t a = 0; a < q; ++a)
      for (std::uint64_t b = 0; b < q; ++b) {
        EXPECT_EQ(f.mul(E(a), E(b)), f.mul(E(b), E(a)));
        EXPECT_EQ(f.add(E(a), E(b)), f.add(E(b), E(a)));
        for (std::uint64_t c = 0; c < q; ++c) {
          EXPECT_EQ(f.mul(E(a), f.add(E(b), E(c))), f.add(f.mul(E(a), E(b)), f.mul(E(a), E(c))));
          EXPECT_EQ(f.mul(f.mul(E(a), E(b)), E(c)), f.mul(E(a), f.mul(E(b), E(c))));
        }
      }
  }
}

TEST(Field, TableProductMatchesSchoolbookProduct) {
  for (auto [p, r] : {std::pair{3, 4}, {2, 8}, {7, 2}, {5, 3}}) {
    const Field f(p, r);
    ASSERT_TRUE(f.has_tables());
    std::mt19937_64 rng(p * 100 + r);
    std::uniform_int_distribution<std::uint64_t> pick(0, static_cast<std::uint64_t>(f.order() - 1));
    for (int t = 0; t < 500; ++t) {
      const auto a = E(pick(rng)), b = E(pick(rng));
      const auto expected = ref_mulmod(f.coeffs(a), f.coeffs(b), f.modulus(), static_cast<std::uint64_t>(p));
      EXPECT_EQ(f.mul(a, b), f.from_coeffs(expected));
    }
  }
}

TEST(Field, ElementOrder) {
  const Field gf7(7, 1);
  EXPECT_EQ(gf7.element_order(E(3)), 6);
  EXPECT_EQ(gf7.element_order(E(1)), 1);
  EXPECT_EQ(gf7.element_order(E(2)), oracle::order_mod(2, 7));
  expect_error(Errc::ZeroElement, [&] { gf7.element_order(gf7.zero()); });
  for (std::int64_t g = 1; g < 31; ++g) EXPECT_EQ(Field(31, 1).element_order(E(g)), oracle::order_mod(g, 31));
}

TEST(Field, PrimitiveElements) {
  EXPECT_EQ(Field(7, 1).primitive_elements(), (std::vector<FieldElem>{E(3), E(5)}));
  const auto gf13 = Field(13, 1).primitive_elements();
  EXPECT_NE(std::find(gf13.begin(), gf13.end(), E(2)), gf13.end());
  EXPECT_EQ(Field(2, 1).primitive_elements(), (std::vector<FieldElem>{E(1)}));
  for (std::int64_t p : {3, 5, 11, 13, 17, 23, 29, 31, 37, 41, 43, 47}) {
    std::vector<FieldElem> expected;
    for (auto g : oracle::primitive_roots(p)) expected.push_back(E(static_cast<std::uint64_t>(g)));
    EXPECT_EQ(Field(p, 1).primitive_elements(), expected) << p;
  }
  EXPECT_EQ(static_cast<std::int64_t>(Field(2, 4).primitive_elements().size()), sonar::nt::euler_phi(15));
  EXPECT_EQ(static_cast<std::int64_t>(Field(3, 4).primitive_elements().size()), sonar::nt::euler_phi(80));
}

TEST(Field, DiscreteLog) {
  const Field gf7(7, 1);
  EXPECT_EQ(gf7.discrete_log(E(3), E(6)), 3);
  for (auto f : {Field(7, 1), Field(3, 2), Field(2, 5)}) {
    for (auto theta : f.primitive_elements()) {
      EXPECT_EQ(f.discrete_log(theta, f.one()), 0);
      EXPECT_EQ(f.discrete_log(theta, theta), 1);
    }
  }
  expect_error(Errc::LogOfZero, [&] { gf7.discrete_log(E(3), gf7.zero()); });
  expect_error(Errc::NotPrimitive, [&] { gf7.discrete_log(E(2), E(4)); });
}

TEST(Field, LogRoundTripAndHomomorphism) {
  for (auto [p, r] : {std::pair{3, 4}, {2, 6}, {13, 2}, {47, 1}}) {
    const Field f(p, r);
    const auto group = f.order() - 1;
    for (auto theta : {f.primitive(), f.primitive_elements().back()}) {
      for (std::int64_t v = 1; v < f.order(); ++v) {
        const auto k = f.discrete_log(theta, E(static_cast<std::uint64_t>(v)));
        ASSERT_GE(k, 0);
        ASSERT_LT(k, group);
        EXPECT_EQ(f.pow(theta, k), E(static_cast<std::uint64_t>(v)));
      }
      for (std::int64_t a = 1; a < f.order(); a += 7)
        for (std::int64_t b = 1; b < f.order(); b += 5) {
          const auto ea = E(static_cast<std::uint64_t>(a)), eb = E(static_cast<std::uint64_t>(b));
          EXPECT_EQ(f.discrete_log(theta, f.mul(ea, eb)),
                    (f.discrete_log(theta, ea) + f.discrete_log(theta, eb)) % group);
        }
    }
  }
}

TEST(Field, BabyStepGiantStepAboveTableLimit) {
  std::int64_t p = (1 << 20) + 1;
  while (!oracle::is_prime(p)) ++p;
  for (auto f : {Field(p, 1), Field(1031, 2)}) {
    ASSERT_FALSE(f.has_tables());
    const auto theta = f.primitive();
    EXPECT_EQ(f.element_order(theta), f.order() - 1);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> pick(1, static_cast<std::uint64_t>(f.order() - 1));
    for (int t = 0; t < 20; ++t) {
      const auto x = E(pick(rng));
      EXPECT_EQ(f.pow(theta, f.discrete_log(theta, x)), x);
      EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
    }
  }
}

TEST(Field, SubfieldIsFixedByFrobenius) {
  // {0} together with the powers of theta^(q+1) is exactly {x : x^q = x}.
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    const auto pp = *sonar::nt::prime_power(q);
    const Field big(pp.p, 2 * pp.r);
    std::vector<FieldElem> fixed;
    for (std::int64_t v = 0; v < big.order(); ++v) {
      const auto x = E(static_cast<std::uint64_t>(v));
      if (big.pow(x, q) == x) fixed.push_back(x);
    }
    EXPECT_EQ(big.subfield_elements(q), fixed) << q;
    std::set<FieldElem> powers{big.zero()};
    for (std::int64_t k = 0; k <= q - 2; ++k) powers.insert(big.pow(big.primitive(), k * (q + 1)));
    EXPECT_EQ(std::vector<FieldElem>(powers.begin(), powers.end()), fixed) << q;
  }
  expect_error(Errc::InvalidArgument, [] { Field(2, 3).subfield_elements(4); });
}

TEST(Field, EmbeddingIsARingHomomorphism) {
  for (std::int64_t q : {3, 4, 8, 9}) {
    const auto pp = *sonar::nt::prime_power(q);
    const Embedding emb(Field(pp.p, pp.r), Field(pp.p, 2 * pp.r));
    const auto& s = emb.small();
    const auto& b = emb.big();
    std::set<FieldElem> image;
    for (std::int64_t x = 0; x < q; ++x)
      for (std::int64_t y = 0; y < q; ++y) {
        const auto ex = E(static_cast<std::uint64_t>(x)), ey = E(static_cast<std::uint64_t>(y));
        EXPECT_EQ(emb.to_big(s.mul(ex, ey)), b.mul(emb.to_big(ex), emb.to_big(ey)));
        EXPECT_EQ(emb.to_big(s.add(ex, ey)), b.add(emb.to_big(ex), emb.to_big(ey)));
        image.insert(emb.to_big(ex));
      }
    EXPECT_EQ(static_cast<std::int64_t>(image.size()), q);
    for (auto x : image) EXPECT_TRUE(b.in_subfield(x, q));
    for (std::int64_t x = 0; x < q; ++x)
      EXPECT_EQ(emb.to_small(emb.to_big(E(static_cast<std::uint64_t>(x)))), E(static_cast<std::uint64_t>(x)));
  }
}
