#include "cyclo/laurent.hpp"

#include <gtest/gtest.h>

#include <random>

namespace cyclo {
namespace {

Ring ring3{3};

LaurentPoly q(int e = 1) { return LaurentPoly::q_power(ring3, e); }
LaurentPoly Q(int i) { return LaurentPoly::q_param(ring3, i); }
LaurentPoly c(long v) { return LaurentPoly(ring3, Integer(v)); }

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> qe(-3, 3);
  std::uniform_int_distribution<int> qbe(0, 2);
  std::uniform_int_distribution<int> terms(0, 4);
  LaurentPoly p(ring3);
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    Monomial m{qe(rng), {qbe(rng), qbe(rng), qbe(rng)}};
    p.add_term(m, coeff(rng));
  }
  return p;
}

TEST(Laurent, DifferenceOfSquares) {
  EXPECT_EQ((q() - c(1)) * (q() + c(1)), q(2) - c(1));
}

TEST(Laurent, UnitInverse) { EXPECT_EQ(q(1) * q(-1), c(1)); }

TEST(Laurent, CharFactorExpansion) {
  // (X - Q1)(X - Q2) has coefficient table {X^2: 1, X: -(Q1+Q2), 1: Q1 Q2}
  // tracked through a convolution in an extra indeterminate X
  std::vector<LaurentPoly> coeffs{c(1)};  // polynomial "1" in X
  for (int j = 1; j <= 2; ++j) {
    std::vector<LaurentPoly> next(coeffs.size() + 1, LaurentPoly::zero(ring3));
    for (size_t d = 0; d < coeffs.size(); ++d) {
      next[d + 1] += coeffs[d];
      next[d] -= coeffs[d] * Q(j);
    }
    coeffs = std::move(next);
  }
  ASSERT_EQ(coeffs.size(), 3u);
  EXPECT_EQ(coeffs[2], c(1));
  EXPECT_EQ(coeffs[1], -(Q(1) + Q(2)));
  EXPECT_EQ(coeffs[0], Q(1) * Q(2));
}

TEST(Laurent, MismatchedRingsRejected) {
  LaurentPoly a(Ring{2}, 1);
  LaurentPoly b(Ring{3}, 1);
  EXPECT_THROW(a * b, ConfigError);
  EXPECT_THROW(a + b, ConfigError);
}

TEST(Laurent, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_poly(rng);
    const LaurentPoly b = random_poly(rng);
    const LaurentPoly cc = random_poly(rng);
    EXPECT_EQ((a * b) * cc, a * (b * cc));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + cc), a * b + a * cc);
  }
}

TEST(Laurent, CanonicalZero) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const LaurentPoly p = random_poly(rng);
    EXPECT_TRUE((p + (-p)).is_zero());
    EXPECT_TRUE((p - p).terms().empty());
  }
}

TEST(Laurent, SpecializeExamples) {
  EXPECT_EQ((q(2) - c(1)).specialize(Rational(2), {Rational(3), Rational(5), Rational(7)}),
            Rational(3));
  EXPECT_EQ(q(-1).specialize(Rational(2), {Rational(3), Rational(5), Rational(7)}),
            Rational(1, 2));
  EXPECT_THROW(q().specialize(Rational(0), {Rational(3), Rational(5), Rational(7)}),
               DomainError);
}

TEST(Laurent, SpecializeIsHomomorphism) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentPoly a = random_poly(rng);
    const LaurentPoly b = random_poly(rng);
    int qn = 0;
    while (qn == 0) qn = num(rng);
    Rational qv(qn, 1 + std::abs(num(rng)));
    qv.canonicalize();
    std::vector<Rational> qs{Rational(num(rng)), Rational(num(rng)), Rational(num(rng))};
    EXPECT_EQ((a * b).specialize(qv, qs), a.specialize(qv, qs) * b.specialize(qv, qs));
    EXPECT_EQ((a + b).specialize(qv, qs), a.specialize(qv, qs) + b.specialize(qv, qs));
  }
}

TEST(Laurent, RenderParseRoundTrip) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly p = random_poly(rng);
    EXPECT_EQ(LaurentPoly::parse(ring3, p.str()), p) << p.str();
  }
  const LaurentPoly p = c(3) * q(-2) * Q(1) * Q(3) * Q(3) + q() - Q(2);
  EXPECT_EQ(p.str(), "3*q^-2*Q1*Q3^2 - Q2 + q");
  EXPECT_EQ(LaurentPoly::parse(ring3, p.str()), p);
}

TEST(Laurent, ElementarySymmetric) {
  EXPECT_EQ(elementary_symmetric(ring3, 0), c(1));
  EXPECT_EQ(elementary_symmetric(ring3, 1), Q(1) + Q(2) + Q(3));
  EXPECT_EQ(elementary_symmetric(ring3, 2), Q(1) * Q(2) + Q(1) * Q(3) + Q(2) * Q(3));
  EXPECT_EQ(elementary_symmetric(ring3, 3), Q(1) * Q(2) * Q(3));
}

}  // namespace
}  // namespace cyclo
