#include <gtest/gtest.h>

#include "wz/parser/identity.hpp"

using namespace wz::parse;
using wz::sym::Assignment;
using wz::sym::Rational;

namespace {

const char* kCentral = "params n; sum(k, 0, n, binom(n,k)^2) = binom(2*n,n)";
const char* kReciprocal =
    "params n m; assume m >= 1; sum(k, 0, n, (-1)^k * binom(n,k) * m/(m+k)) = 1/binom(m+n,n)";

Rational brute_sum(const Identity& id, long n) {
  Assignment pt{{id.main_var(), n}};
  const Rational lo = id.lo.evaluate(pt), hi = id.hi.evaluate(pt);
  Rational s = 0;
  for (long k = lo.get_num().get_si(); k <= hi.get_num().get_si(); ++k) {
    pt[id.sum_var] = k;
    s += id.summand.evaluate(pt);
  }
  return s;
}

}  // namespace

TEST(Parser, PaperIdentities) {
  Identity a = parse_identity(kCentral);
  EXPECT_EQ(a.summand.to_string(), "binom(n,k)^2");
  EXPECT_EQ(a.rhs.to_string(), "binom(2*n,n)");
  EXPECT_EQ(print_identity(a), "params n;\nsum(k, 0, n, binom(n,k)^2) = binom(2*n,n)\n");

  Identity b = parse_identity(kReciprocal);
  EXPECT_EQ(b.params, (VarList{"n", "m"}));
  ASSERT_EQ(b.assumptions.size(), 1u);
  EXPECT_EQ(print_identity(b),
            "params n m;\nassume m >= 1;\nsum(k, 0, n, (-1)^k * binom(n,k) * m / (k+m)) = 1 / binom(m+n,n)\n");
}

TEST(Parser, RoundTripAndWhitespace) {
  for (const char* src : {kCentral, kReciprocal}) {
    Identity a = parse_identity(src);
    const std::string text = print_identity(a);
    Identity b = parse_identity(text);
    EXPECT_EQ(a, b);
    EXPECT_EQ(print_identity(b), text);
  }
  Identity c = parse_identity("# comment\nparams   n ;\n sum( k,0 , n,binom( n , k )^ 2 )=binom(2 * n, n) # tail");
  EXPECT_EQ(print_identity(c), print_identity(parse_identity(kCentral)));
}

TEST(Parser, MoreForms) {
  Identity a = parse_identity("params n; assume n > 0; sum(k, 1, n+1, k*binom(n,k)*2^k / fact(k)) = 3^n*n/2");
  EXPECT_EQ(a.assumptions.front().to_string(), "n-1");
  Identity b = parse_identity(print_identity(a));
  EXPECT_EQ(a, b);
  Identity c = parse_identity("params n m; assume 2*m - 3 >= n; sum(k, 0, n, (m+1)^k) = 1");
  EXPECT_EQ(constraint_to_string(c.assumptions.front()), "2*m >= n + 3");
  EXPECT_EQ(parse_identity(print_identity(c)), c);
}

TEST(Parser, Errors) {
  EXPECT_THROW(parse_identity("sum(k, 0, n, binom(n,k))"), wz::ParseError);
  try {
    parse_identity("params n;\nsum(k, 0, n, binom(n,k)) = binom(n,k)");
    FAIL();
  } catch (const wz::ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("right-hand side"), std::string::npos);
  }
  EXPECT_THROW(parse_identity("sum(k, 0, n, binom(n*k,k)) = 1"), wz::ParseError);
  EXPECT_THROW(parse_identity("sum(k, 0, n, fact(k)^k) = 1"), wz::ParseError);
  EXPECT_THROW(parse_identity("sum(k, 0, n, binom(n,k) + fact(k)) = 1"), wz::ParseError);
  EXPECT_THROW(parse_identity("sum(k, 0, n, x) = 1"), wz::ParseError);
  EXPECT_THROW(parse_identity("sum(k, 0, n, 1) = 1 extra"), wz::ParseError);
  EXPECT_THROW(parse_identity("sum(k, 0, n, 1 $ 2) = 1"), wz::ParseError);
  EXPECT_TRUE(parse_identity("sum(k, 0, n, 0) = 0").zero_rhs());
}

TEST(Parser, RangeNormalize) {
  Identity a = parse_identity(kCentral);
  auto [same, none] = range_normalize(a);
  EXPECT_TRUE(none.empty());
  EXPECT_EQ(same, a);

  Identity b = parse_identity("sum(k, 1, n+1, binom(n,k-1)) = 2^n");
  auto [nb, obs] = range_normalize(b);
  EXPECT_EQ(obs.size(), 1u);
  EXPECT_TRUE(nb.lo.is_zero());
  EXPECT_EQ(nb.hi.to_string(), "n");

  Identity c = parse_identity("sum(k, 2, 2*n, k*binom(2*n,k)) = 1");
  auto [nc, oc] = range_normalize(c);
  EXPECT_EQ(nc.hi.to_string(), "2*n-2");
  ASSERT_EQ(oc.size(), 1u);
  for (long n = 1; n <= 10; ++n) EXPECT_EQ(brute_sum(c, n), brute_sum(nc, n)) << n;
}

TEST(Parser, CaseTag) {
  Identity a = parse_identity("params n; case even(n); sum(k, 0, n, binom(n,k)) = 2^n");
  EXPECT_EQ(a.case_tag, CaseTag::Even);
  EXPECT_EQ(parse_identity(print_identity(a)), a);
  Identity t = instantiate_case(a);
  EXPECT_EQ(t.main_var(), "t");
  EXPECT_EQ(t.hi.to_string(), "2*t");
  EXPECT_EQ(t.rhs.to_string(), "2^(2*t)");
}
