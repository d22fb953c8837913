#include <gtest/gtest.h>

#include <random>

#include "eulerzeros/polynomial.hpp"

namespace eulerzeros {
namespace {

Rational q(long num, long den = 1) { return {BigInt(num), BigInt(den)}; }

// Small random polynomials with small rational coefficients.
class PolyGen {
 public:
  explicit PolyGen(unsigned seed) : rng_(seed) {}

  Rational rational() {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    return q(num(rng_), den(rng_));
  }

  Polynomial poly(std::size_t max_degree = 5) {
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::vector<Rational> c(deg(rng_) + 1);
    for (auto& x : c) x = rational();
    return Polynomial(std::move(c));
  }

  Polynomial nonzero_poly(std::size_t max_degree = 5) {
    for (;;) {
      Polynomial p = poly(max_degree);
      if (!p.is_zero()) return p;
    }
  }

 private:
  std::mt19937 rng_;
};

TEST(Rational, NormalizedOnConstruction) {
  const Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), DomainError);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("1/10^12"), Rational(BigInt(1), pow(BigInt(10), 12)));
  EXPECT_EQ(Rational::parse("-6/4"), q(-3, 2));
  EXPECT_EQ(Rational::parse("2^10"), Rational(1024));
  EXPECT_EQ(Rational::parse("1e-3"), q(1, 1000));
  EXPECT_EQ(Rational::parse("-1.25"), q(-5, 4));
  EXPECT_THROW(Rational::parse(""), DomainError);
  EXPECT_THROW(Rational::parse("1/0"), DomainError);
  EXPECT_THROW(Rational::parse("abc"), DomainError);
  EXPECT_THROW(Rational::parse("1/2/3"), DomainError);
}

TEST(Rational, DirectedDecimal) {
  const Rational third = q(1, 3);
  EXPECT_EQ(third.to_decimal(5, false), "3.3333e-1");
  EXPECT_EQ(third.to_decimal(5, true), "3.3334e-1");
  EXPECT_EQ(q(-1, 3).to_decimal(5, false), "-3.3334e-1");
  EXPECT_EQ(q(-1, 3).to_decimal(5, true), "-3.3333e-1");
  EXPECT_EQ(Rational(1234).to_decimal(10, false), "1.234e3");
  EXPECT_EQ(Rational(5).to_decimal(3, true), "5");
  EXPECT_EQ(Rational().to_decimal(3, true), "0");
  // Rounding up may carry into a new leading digit.
  EXPECT_EQ(q(9999, 1000).to_decimal(2, true), "1e1");
}

TEST(Rational, DirectedDecimalBracketsValue) {
  PolyGen gen(11);
  for (int i = 0; i < 200; ++i) {
    const Rational r = gen.rational() / Rational(pow(BigInt(7), i % 40));
    if (r.is_zero()) continue;
    EXPECT_LE(Rational::parse(r.to_decimal(8, false)), r);
    EXPECT_GE(Rational::parse(r.to_decimal(8, true)), r);
  }
}

TEST(Rational, LogHandlesTinyValues) {
  const Rational tiny(BigInt(3), pow(BigInt(10), 400));
  EXPECT_NEAR(tiny.log(), std::log(3.0) - 400 * std::log(10.0), 1e-9);
  EXPECT_NEAR(q(1, 3).log(), -std::log(3.0), 1e-15);
  EXPECT_THROW(Rational().log(), DomainError);
}

TEST(Polynomial, ZeroHasNoDegree) {
  const Polynomial zero;
  EXPECT_TRUE(zero.is_zero());
  EXPECT_FALSE(zero.degree().has_value());
  EXPECT_EQ(Polynomial({1, 0, 0}).degree(), std::optional<std::size_t>(0));
  EXPECT_EQ(Polynomial({0, 0}), zero);
}

TEST(PolyAdd, Examples) {
  EXPECT_EQ(poly_add({1, 1}, {1, -1}), Polynomial{2});
  const Polynomial p{3, q(1, 2), 7};
  EXPECT_EQ(poly_add({}, p), p);
  EXPECT_EQ(poly_add({1, 4, 1}, {0, 3}), Polynomial({1, 7, 1}));
  EXPECT_TRUE(poly_add({1, 2}, {-1, -2}).is_zero());
}

TEST(PolyMul, Examples) {
  EXPECT_EQ(poly_mul({1, 1}, {1, 2}), Polynomial({1, 3, 2}));
  EXPECT_TRUE(poly_mul({1, 2, 3}, {}).is_zero());
  EXPECT_EQ(poly_mul({1, 1}, {1, 1}), Polynomial({1, 2, 1}));
}

TEST(PolyEval, Examples) {
  EXPECT_EQ(poly_eval({1, 4, 1}, -1), Rational(-2));
  EXPECT_EQ(poly_eval({q(5, 7), 3, 9}, 0), q(5, 7));
  // Odd-degree palindrome vanishes at -1; cross-check by expansion
  // 1 + 11(-1) + 11(1) + (-1) = 0.
  const Polynomial a4{1, 11, 11, 1};
  EXPECT_EQ(poly_eval(a4, -1), Rational(0));
  EXPECT_EQ(Rational(1) - 11 + 11 - 1, Rational(0));
  EXPECT_EQ(poly_eval({}, q(3, 2)), Rational(0));
}

TEST(PolyDerivative, Examples) {
  EXPECT_EQ(poly_derivative({1, 3, 2}), Polynomial({3, 4}));
  EXPECT_TRUE(poly_derivative({q(7, 3)}).is_zero());
  EXPECT_EQ(poly_derivative({1, 23, 23, 1}), Polynomial({23, 46, 3}));
}

TEST(PolyDivexactMonomial, Examples) {
  EXPECT_EQ(poly_divexact_monomial({0, 1, 1}), Polynomial({1, 1}));
  EXPECT_TRUE(poly_divexact_monomial({}).is_zero());
  EXPECT_THROW(poly_divexact_monomial({1, 1}), NotDivisibleError);
}

TEST(PolyContentPrimitive, Examples) {
  EXPECT_EQ(poly_content_primitive({2, 6}), Polynomial({1, 3}));
  EXPECT_EQ(poly_content_primitive({-1, -1}), Polynomial({1, 1}));
  EXPECT_EQ(poly_content_primitive({q(1, 2), q(3, 2)}), Polynomial({1, 3}));
  EXPECT_THROW(poly_content_primitive({}), DomainError);
}

TEST(PolynomialProperties, RingLaws) {
  PolyGen gen(2024);
  for (int i = 0; i < 100; ++i) {
    const Polynomial a = gen.poly();
    const Polynomial b = gen.poly();
    const Polynomial c = gen.poly();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(PolynomialProperties, DegreeOfProduct) {
  PolyGen gen(7);
  for (int i = 0; i < 100; ++i) {
    const Polynomial a = gen.nonzero_poly();
    const Polynomial b = gen.nonzero_poly();
    EXPECT_EQ(*(a * b).degree(), *a.degree() + *b.degree());
  }
}

TEST(PolynomialProperties, EvalIsMultiplicative) {
  PolyGen gen(99);
  for (int i = 0; i < 100; ++i) {
    const Polynomial a = gen.poly();
    const Polynomial b = gen.poly();
    const Rational t = gen.rational();
    EXPECT_EQ(poly_eval(a * b, t), poly_eval(a, t) * poly_eval(b, t));
  }
}

TEST(PolynomialProperties, DivexactUndoesShift) {
  PolyGen gen(5);
  for (int i = 0; i < 50; ++i) {
    const Polynomial a = gen.poly();
    EXPECT_EQ(poly_divexact_monomial(poly_shift_up(a)), a);
    EXPECT_EQ(poly_divexact_monomial(Polynomial{0, 1} * a), a);
  }
}

TEST(PolynomialProperties, PrimitiveKeepsSignUpToOrientation) {
  PolyGen gen(314);
  for (int i = 0; i < 50; ++i) {
    const Polynomial a = gen.nonzero_poly();
    const Polynomial p = poly_content_primitive(a);
    // Positive leading coefficient: p = a / c with sign(c) = sign(lc(a)).
    const int orientation = a.leading().sign();
    for (int j = 0; j < 10; ++j) {
      const Rational t = gen.rational();
      EXPECT_EQ(poly_eval(p, t).sign(), orientation * poly_eval(a, t).sign());
    }
    for (const auto& c : p.coefficients()) EXPECT_TRUE(c.is_integer());
    EXPECT_GT(p.leading().sign(), 0);
  }
}

}  // namespace
}  // namespace eulerzeros
