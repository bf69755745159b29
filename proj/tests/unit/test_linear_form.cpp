#include <gtest/gtest.h>

#include "wz/symcore/linear_form.hpp"

using namespace wz::sym;

namespace {
LinearForm V(const char* name) { return LinearForm::var(name); }
LinearForm C(long c) { return LinearForm(Rational(c)); }
}  // namespace

TEST(LinearForm, Rendering) {
  EXPECT_EQ((V("n") - V("k") + C(1)).to_string(), "n-k+1");
  EXPECT_EQ((V("n") + V("m")).to_string(), "m+n");
  EXPECT_EQ(V("n").scaled(2).to_string(), "2*n");
  EXPECT_EQ(C(0).to_string(), "0");
  EXPECT_EQ((C(-3) - V("k")).to_string(), "-k-3");
}

TEST(LinearForm, SubstituteAndEvaluate) {
  LinearForm f = V("n") - V("k").scaled(2);
  LinearForm g = f.substitute("k", V("k") + C(1));
  EXPECT_EQ(g, V("n") - V("k").scaled(2) - C(2));
  EXPECT_EQ(g.evaluate({{"n", 7}, {"k", 1}}), Rational(3));
  EXPECT_THROW(g.evaluate({{"n", 7}}), wz::Error);
  EXPECT_EQ(*LinearForm::from_polynomial(f.to_polynomial({"k", "n"})), f);
}

TEST(Facts, NaturalsAreNonnegative) {
  Facts none;
  EXPECT_TRUE(none.proves_nonneg(V("n") + V("k")));
  EXPECT_FALSE(none.proves_nonneg(V("n") - V("k")));
  EXPECT_TRUE(none.proves_positive(V("n") + C(1)));
  EXPECT_FALSE(none.proves_positive(V("m")));
}

TEST(Facts, UsesAssumptions) {
  Facts range({V("n") - V("k")});  // k <= n
  EXPECT_TRUE(range.proves_positive(V("n") - V("k") + C(1)));
  EXPECT_FALSE(range.proves_positive(V("n") - V("k")));
  Facts m1({V("m") - C(1)});
  EXPECT_TRUE(m1.proves_positive(V("m") + V("k")));
  EXPECT_TRUE(m1.proves_outside(C(0) - V("m"), C(0), V("n")));
  EXPECT_FALSE(Facts().proves_outside(C(0) - V("m"), C(0), V("n")));
  // Two facts combined: k <= n and n <= m - 1 give m - k - 1 >= 0.
  Facts two({V("n") - V("k"), V("m") - V("n") - C(1)});
  EXPECT_TRUE(two.proves_nonneg(V("m") - V("k") - C(1)));
}
