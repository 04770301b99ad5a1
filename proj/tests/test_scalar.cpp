#include <gtest/gtest.h>

#include <random>

#include "ssgamma/scalar.hpp"

using namespace ssgamma;

namespace {

ExactScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3), h(-2, 2), k(-1, 2), m(0, 3), e(0, 11);
  const unsigned orders[] = {1, 3, 4, 6};
  ExactScalar r;
  const int terms = 1 + rng() % 3;
  for (int t = 0; t < terms; ++t)
    r += ExactScalar::monomial(CyclotomicNumber::root_of_unity(orders[m(rng)], e(rng)).scaled(c(rng)), h(rng), k(rng));
  return r;
}

}  // namespace

TEST(ExactScalar, ArithExamples) {
  const ExactScalar g = q_half_minus_s();
  EXPECT_EQ(g * g, ExactScalar::rational(1, 2, 2));
  const ExactScalar x = ExactScalar::rational(5, 1, -1);
  EXPECT_EQ(x + ExactScalar::zero(), x);
  const ExactScalar a = ExactScalar::monomial(CyclotomicNumber::root_of_unity(3, 1), -1, 0);
  const ExactScalar b = ExactScalar::monomial(CyclotomicNumber::root_of_unity(3, 2), 1, 0);
  EXPECT_EQ(a * b, ExactScalar::one());
}

TEST(ExactScalar, DivExamples) {
  const ExactScalar g = q_half_minus_s();
  EXPECT_EQ((-g) / ExactScalar::one(), -g);
  EXPECT_EQ(ExactScalar::rational(1, 2, 2) / g, g);
  const ExactScalar m = ExactScalar::monomial(CyclotomicNumber::root_of_unity(5, 2).scaled(7), -1, 3);
  EXPECT_EQ(m / m, ExactScalar::one());
  EXPECT_THROW(g / (g + ExactScalar::one()), NonMonomialDivisor);
  EXPECT_THROW(g / ExactScalar::zero(), ZeroDivisor);
}

TEST(ExactScalar, NoZeroTermsStored) {
  const ExactScalar g = q_half_minus_s();
  EXPECT_TRUE((g - g).is_zero());
  EXPECT_TRUE((g - g).terms().empty());
}

TEST(ExactScalar, RingAxioms) {
  std::mt19937 rng(3);
  for (int it = 0; it < 100; ++it) {
    const ExactScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
  }
}

TEST(ExactScalar, NumericCrossCheck) {
  std::mt19937 rng(4);
  for (int it = 0; it < 40; ++it) {
    const ExactScalar a = random_scalar(rng), b = random_scalar(rng);
    const ExactScalar prod = a * b, sum = a + b;
    for (unsigned emb : {1u, 5u, 7u, 11u, 13u})
      for (double s : {0.0, 1.0, 0.5}) {
        const auto ea = a.evaluate(3.0, s, emb), eb = b.evaluate(3.0, s, emb);
        EXPECT_NEAR(std::abs(prod.evaluate(3.0, s, emb) - ea * eb), 0.0, 1e-9);
        EXPECT_NEAR(std::abs(sum.evaluate(3.0, s, emb) - (ea + eb)), 0.0, 1e-9);
      }
  }
}

TEST(ExactScalar, ConjugationIsRingInvolution) {
  std::mt19937 rng(6);
  for (int it = 0; it < 50; ++it) {
    const ExactScalar a = random_scalar(rng), b = random_scalar(rng);
    EXPECT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
    EXPECT_EQ((a + b).conjugate(), a.conjugate() + b.conjugate());
    EXPECT_EQ(a.conjugate().conjugate(), a);
  }
}

TEST(ExactScalar, BoundQIsCanonical) {
  // 3/2 q^{-3/2} and 1/2 q^{-1/2} agree once q = 3
  mpq_class three_halves(3);
  three_halves /= 2;
  mpq_class half(1);
  half /= 2;
  const ExactScalar a = ExactScalar::rational(three_halves, -3, 0).with_q(3);
  const ExactScalar b = ExactScalar::rational(half, -1, 0);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.to_string(), "1/2*q^(-1/2)");
  // q^{1/2} + q^{3/2} collapses to one term (1 + p) q^{1/2}
  const ExactScalar c = (ExactScalar::rational(1, 1, 0) + ExactScalar::rational(1, 3, 0)).with_q(5);
  EXPECT_EQ(c.terms().size(), 1u);
  EXPECT_EQ(c, ExactScalar::rational(6, 1, 0));
  EXPECT_FALSE(ExactScalar::rational(1, 2, 0) == ExactScalar::rational(3, 0, 0));
  EXPECT_TRUE(ExactScalar::rational(1, 2, 0).with_q(3) == ExactScalar::rational(3, 0, 0));
  EXPECT_THROW(a + ExactScalar::one().with_q(5), InvalidArgument);
}
