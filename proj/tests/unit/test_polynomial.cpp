#include <gtest/gtest.h>

#include "wz/symcore/polynomial.hpp"
#include "wz/symcore/rational_function.hpp"

using namespace wz::sym;

namespace {

const VarList kVars{"k", "n", "m"};

Polynomial K() { return Polynomial::variable(kVars, "k"); }
Polynomial N() { return Polynomial::variable(kVars, "n"); }
Polynomial M() { return Polynomial::variable(kVars, "m"); }
Polynomial C(long c) { return Polynomial::constant(kVars, c); }

}  // namespace

TEST(Polynomial, ArithmeticAndRendering) {
  Polynomial p = (N() - K() + C(1)) * (N() - K() + C(1));
  EXPECT_EQ(p.degree(0), 2);
  EXPECT_EQ(p.total_degree(), 2);
  EXPECT_EQ((p - p).is_zero(), true);
  std::vector<std::string> order{"n", "k"};
  EXPECT_EQ((N() - K() + C(1)).to_string(order), "n - k + 1");
  EXPECT_EQ((N() * C(2) + C(1)).to_string(order, true), "2*n+1");
}

TEST(Polynomial, EvaluateAndShift) {
  Polynomial p = K() * K() * N() - C(3);
  std::vector<Rational> pt{Rational(2), Rational(5), Rational(0)};
  EXPECT_EQ(p.evaluate(pt), Rational(17));
  Polynomial s = p.shift(0, 1);
  EXPECT_EQ(s.evaluate(pt), Rational(42));
}

TEST(Polynomial, ExactDivision) {
  Polynomial a = (K() + C(1)) * (K() - C(1));
  auto q = a.divide_exact(K() + C(1));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, K() - C(1));
  EXPECT_FALSE(a.divide_exact(K() + C(2)).has_value());
}

TEST(Polynomial, GcdUnivariate) {
  Polynomial a = K() * K() - C(1);
  Polynomial g = gcd(a, K() + C(1));
  EXPECT_EQ(g, K() + C(1));
  EXPECT_EQ(gcd(K() + C(2), K() + C(3)), C(1));
}

TEST(Polynomial, GcdMultivariate) {
  Polynomial f = N() - K() + C(1);
  Polynomial a = f * f;
  Polynomial b = f * (N() * C(2) + C(1));
  Polynomial g = gcd(a, b);
  // Oracle: g must divide both and be associate to f.
  ASSERT_TRUE(a.divide_exact(g).has_value());
  ASSERT_TRUE(b.divide_exact(g).has_value());
  EXPECT_EQ(g.total_degree(), 1);
  EXPECT_TRUE(f.divide_exact(g).has_value());
}

TEST(Polynomial, GcdWithParams) {
  Polynomial f = K() + M();
  Polynomial a = f * (K() + C(1)) * (N() + C(2));
  Polynomial b = f * f * (N() + C(2));
  Polynomial g = gcd(a, b);
  EXPECT_EQ(g.total_degree(), 2);
  EXPECT_TRUE(g.divide_exact(f).has_value());
  EXPECT_TRUE(g.divide_exact(N() + C(2)).has_value());
}

TEST(Polynomial, Resultant) {
  // Res_k(k - a, k - b) = a - b up to sign.
  Polynomial r = resultant(K() - N(), K() - M(), 0);
  EXPECT_TRUE(r == N() - M() || r == M() - N());
  EXPECT_TRUE(resultant(K() * K() - C(1), K() - C(1), 0).is_zero());
  EXPECT_EQ(resultant(K() * K() + C(1), K(), 0).constant_value(), Rational(1));
}

TEST(RationalFunction, CanonicalForm) {
  RationalFunction r((K() + C(1)) * N(), (K() + C(1)) * C(2));
  EXPECT_EQ(r, RationalFunction(N().scaled(Rational(1, 2)), C(1)));
  RationalFunction a(K(), K() + C(1));
  RationalFunction b(C(1), K() + C(1));
  EXPECT_EQ(a + b, RationalFunction(C(1)));
  EXPECT_EQ((a * a.inverse()), RationalFunction(C(1)));
  RationalFunction c(C(-2) * K(), C(-4) * N() + C(6));
  EXPECT_EQ(c.den().leading_coefficient(), Rational(1));
}

TEST(RationalFunction, EvaluatePole) {
  RationalFunction a(K(), K() - N());
  Assignment pt{{"k", 2}, {"n", 2}, {"m", 0}};
  EXPECT_THROW(a.evaluate(pt), wz::PoleError);
  pt["n"] = 3;
  EXPECT_EQ(a.evaluate(pt), Rational(-2));
}
