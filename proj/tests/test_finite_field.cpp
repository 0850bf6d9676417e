#include <gtest/gtest.h>

#include <set>

#include "gagola/error.hpp"
#include "gagola/finite_field.hpp"
#include "gagola/number_theory.hpp"

namespace gagola {
namespace {

template <class F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::InvalidArgument;
}

// Carry-less product reduced by long division: the schoolbook oracle.
std::uint64_t poly_mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus, unsigned n) {
  std::uint64_t r = 0;
  for (unsigned i = 0; i < 64; ++i) {
    if ((b >> i) & 1) r ^= a << i;
  }
  for (int d = 63; d >= static_cast<int>(n); --d) {
    if ((r >> d) & 1) r ^= modulus << (d - n);
  }
  return r;
}

TEST(Field, Creation) {
  auto f = create_field(2, 3, std::vector<std::uint64_t>{1, 1, 0, 1});
  EXPECT_EQ(f->cardinality(), 8u);
  EXPECT_EQ(f->modulus_code(), 0xBu);
  EXPECT_EQ(error_of([] { create_field(2, 3, std::vector<std::uint64_t>{1, 0, 0, 1}); }), Errc::ReduciblePolynomial);
  EXPECT_EQ(error_of([] { create_field(4, 2); }), Errc::NonPrimeCharacteristic);
  auto gf2 = create_field(2, 1);
  EXPECT_EQ(gf2->cardinality(), 2u);
  EXPECT_EQ(gf2->mul(1, 1), 1u);
}

TEST(Field, DefaultModulusIsLeastIrreducible) {
  EXPECT_EQ(create_field(2, 3)->modulus_code(), 0xBu);   // x^3 + x + 1
  EXPECT_EQ(create_field(2, 4)->modulus_code(), 0x13u);  // x^4 + x + 1
  EXPECT_EQ(create_field(2, 8)->modulus_code(), 0x11Bu);
  // Oracle: no smaller monic degree-n polynomial is irreducible, by
  // exhausting all products of two lower-degree polynomials.
  for (unsigned n = 2; n <= 8; ++n) {
    const std::uint64_t chosen = create_field(2, n)->modulus_code();
    std::set<std::uint64_t> reducible;
    for (std::uint64_t a = 2; a < (std::uint64_t{1} << n); ++a) {
      for (std::uint64_t b = 2; b < (std::uint64_t{1} << n); ++b) {
        std::uint64_t r = 0;
        for (unsigned i = 0; i < 64; ++i) {
          if ((b >> i) & 1) r ^= a << i;
        }
        reducible.insert(r);
      }
    }
    EXPECT_FALSE(reducible.count(chosen)) << n;
    for (std::uint64_t m = std::uint64_t{1} << n; m < chosen; ++m) EXPECT_TRUE(reducible.count(m));
  }
}

TEST(Field, ArithmeticMatchesPolynomialOracle) {
  auto f = create_field(2, 8);
  for (std::uint64_t a = 0; a < 256; ++a) {
    for (std::uint64_t b = 0; b < 256; ++b) {
      ASSERT_EQ(f->mul(a, b), poly_mul_mod(a, b, f->modulus_code(), 8));
      ASSERT_EQ(f->add(a, b), a ^ b);
    }
  }
}

TEST(Field, Examples) {
  auto f = create_field(2, 3, std::vector<std::uint64_t>{1, 1, 0, 1});
  const FieldElement g = FieldElement::x(f);
  EXPECT_EQ((g * g.pow(2)).value(), 0x3u);  // g^3 = g + 1
  for (std::uint64_t a = 0; a < 8; ++a) EXPECT_EQ(f->add(a, a), 0u);
  EXPECT_EQ(error_of([&] { f->inv(0); }), Errc::ZeroInverse);
  EXPECT_EQ(error_of([&] { f->order(0); }), Errc::ZeroElement);
  auto other = create_field(2, 4);
  EXPECT_EQ(error_of([&] { (void)(g + FieldElement::one(other)); }), Errc::MixedFields);
  EXPECT_EQ(g.pow(-1) * g, FieldElement::one(f));
  EXPECT_EQ(g.frobenius(0), g);
  EXPECT_EQ(g.frobenius(3), g);
  EXPECT_EQ(g.frobenius(1), g * g);
  EXPECT_EQ(FieldElement::one(f).order(), 1u);
  EXPECT_EQ(g.order(), 7u);
  auto f16 = create_field(2, 4);
  EXPECT_EQ(FieldElement(f16, f16->primitive_element()).pow(3).order(), 5u);
  EXPECT_EQ(FieldElement(f, 5).to_string(), "0x5@GF(2^3,0xB)");
  EXPECT_EQ(parse_field_element("0x5@GF(2^3,0xB)"), FieldElement(f, 5));
}

TEST(Field, FermatProperty) {
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 1}, {2, 5}, {2, 10}, {2, 16}, {3, 4}, {5, 3}, {7, 2}, {13, 1}}) {
    auto f = create_field(p, n);
    const std::uint64_t q = f->cardinality();
    for (std::uint64_t a = 1; a < q; ++a) {
      ASSERT_EQ(f->pow(a, static_cast<std::int64_t>(q - 1)), 1u) << p << "^" << n << " " << a;
      ASSERT_EQ(f->mul(a, f->inv(a)), 1u);
    }
  }
}

TEST(Field, OrderDividesAndIsLeast) {
  auto f = create_field(2, 6);
  for (std::uint64_t a = 1; a < 64; ++a) {
    const auto o = f->order(a);
    EXPECT_EQ(63 % o, 0u);
    std::uint64_t k = 1, x = a;
    while (x != 1) {
      x = f->mul(x, a);
      ++k;
    }
    EXPECT_EQ(o, k);
  }
}

TEST(Field, FrobeniusIsAFieldAutomorphism) {
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 6}, {3, 3}}) {
    auto f = create_field(p, n);
    const std::uint64_t q = f->cardinality();
    for (unsigned h = 0; h <= n; ++h) {
      for (std::uint64_t a = 0; a < q; ++a) {
        EXPECT_EQ(f->frobenius(a, h), f->pow(a, static_cast<std::int64_t>(nt::checked_pow(p, h))));
        for (std::uint64_t b = 0; b < q; b += 5) {
          EXPECT_EQ(f->frobenius(f->add(a, b), h), f->add(f->frobenius(a, h), f->frobenius(b, h)));
          EXPECT_EQ(f->frobenius(f->mul(a, b), h), f->mul(f->frobenius(a, h), f->frobenius(b, h)));
        }
      }
      if (h == n) {
        for (std::uint64_t a = 0; a < q; ++a) EXPECT_EQ(f->frobenius(a, h), a);
      }
    }
  }
}

// a -> a Theta(a) is a bijection whenever Theta has odd order > 1.
TEST(Field, ThetaProductBijection) {
  int cases = 0;
  for (unsigned n = 2; n <= 12; ++n) {
    auto f = create_field(2, n);
    for (unsigned h = 1; h < n; ++h) {
      const unsigned order = n / static_cast<unsigned>(nt::gcd(n, h));
      if (order % 2 == 0) continue;
      std::set<std::uint64_t> image;
      for (std::uint64_t a = 0; a < f->cardinality(); ++a) image.insert(f->mul(a, f->frobenius(a, h)));
      EXPECT_EQ(image.size(), f->cardinality()) << n << "," << h;
      ++cases;
    }
  }
  EXPECT_GT(cases, 20);
}

}  // namespace
}  // namespace gagola
