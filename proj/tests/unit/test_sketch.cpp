#include <gtest/gtest.h>

#include <map>

#include "wz/sketch/lean_expr.hpp"
#include "wz/sketch/sketch.hpp"

using namespace wz::sketch;
using wz::parse::parse_identity;
using wz::sym::Rational;

namespace {

const char* kCentral = "params n; sum(k, 0, n, binom(n,k)^2) = binom(2*n,n)";
const char* kReciprocal = "params n m; assume m >= 1; sum(k, 0, n, (-1)^k * binom(n,k) * m/(m+k)) = 1/binom(m+n,n)";

std::map<std::string, int> kinds(const ProofSketch& sk) {
  std::map<std::string, int> out;
  for (const auto& o : sk.obligations) ++out[std::string(kind_name(o.kind))];
  return out;
}

const Obligation* named(const ProofSketch& sk, std::string_view name) {
  for (const auto& o : sk.obligations)
    if (o.name == name) return &o;
  return nullptr;
}

}  // namespace

TEST(Sketch, CentralBinomialPoolShape) {
  const auto sk = build_sketch(parse_identity(kCentral));
  ASSERT_FALSE(sk.uncovered);
  auto c = kinds(sk);
  EXPECT_EQ(c["rec"], 1);
  EXPECT_EQ(c["bd"], 2);
  EXPECT_EQ(c["norm"], 1);
  EXPECT_GE(c["side"], 2);
  EXPECT_EQ(c["case"], 0);
  EXPECT_EQ(sk.base_case.n0, 0);
  ASSERT_TRUE(sk.base_case.value);
  EXPECT_EQ(*sk.base_case.value, 1);
  EXPECT_EQ(sk.certificate_text(), "-k^2*(3*n - 2*k + 3)/(2*(n - k + 1)^2*(2*n + 1))");
  EXPECT_TRUE(sk.diagnostics.empty());
  ASSERT_NE(named(sk, "bd_lower"), nullptr);
  EXPECT_EQ(named(sk, "bd_lower")->goal_lean, "∀ n : ℕ, G n 0 = 0");
  EXPECT_EQ(named(sk, "bd_upper")->goal_lean, "∀ n : ℕ, G n (n + 1) = 0");
  EXPECT_EQ(named(sk, "Step2")->goal_lean, "∀ n : ℕ, f (n + 1) - f n = 0");
  EXPECT_EQ(named(sk, "base_case")->goal_lean, "f 0 = 1");
}

TEST(Sketch, CentralBinomialSideGoalsCoverCertificateDenominator) {
  const auto sk = build_sketch(parse_identity(kCentral));
  bool nk = false, two_n = false, choose = false;
  for (const auto& o : sk.obligations) {
    if (o.goal_lean == "∀ n k : ℕ, k ≤ n → (↑n - ↑k + 1 : ℝ) ≠ 0") nk = true;
    if (o.goal_lean == "∀ n : ℕ, (2 * ↑n + 1 : ℝ) ≠ 0") two_n = true;
    if (o.goal_internal.find("binom(2*n,n) != 0") != std::string::npos) choose = true;
  }
  EXPECT_TRUE(nk);
  EXPECT_TRUE(two_n);
  EXPECT_TRUE(choose);
}

TEST(Sketch, ReciprocalRatioLemmasAndCertificate) {
  const auto sk = build_sketch(parse_identity(kReciprocal));
  ASSERT_FALSE(sk.uncovered);
  EXPECT_EQ(sk.certificate_text(), "-(k + m)*k/((n - k + 1)*(n + 1))");
  EXPECT_EQ(named(sk, "aux₁")->goal_lean,
            "∀ n k : ℕ, k < n → A n (k + 1) / A n k = -(n - k)*(k + m)/((k + m + 1)*(k + 1))");
  EXPECT_EQ(named(sk, "aux₂")->goal_lean, "∀ n k : ℕ, k < n → A (n + 1) k / A n k = (n + 1)/(n - k + 1)");
  EXPECT_EQ(named(sk, "aux₃")->goal_lean, "∀ n : ℕ, B (n + 1) / B n = (n + 1)/(n + m + 1)");
  EXPECT_EQ(named(sk, "Step2")->goal_lean, "∀ n : ℕ, f (n + 1) - f n = 0");
  ASSERT_TRUE(sk.base_case.value);
  EXPECT_EQ(*sk.base_case.value, 1);
  bool m_nonzero = false, mk = false;
  for (const auto& o : sk.obligations) {
    if (o.goal_lean == "(↑m : ℝ) ≠ 0") m_nonzero = true;
    if (o.goal_lean == "∀ n k : ℕ, k ≤ n → (↑k + ↑m : ℝ) ≠ 0") mk = true;
  }
  EXPECT_TRUE(m_nonzero);
  EXPECT_TRUE(mk);
}

TEST(Sketch, ZeroRhsIsUncovered) {
  const auto sk = build_sketch(parse_identity("params n; assume n >= 1; sum(k, 0, n, (-1)^k*binom(n,k)) = 0"));
  EXPECT_TRUE(sk.uncovered);
  EXPECT_TRUE(sk.obligations.empty());
  ASSERT_FALSE(sk.diagnostics.empty());
  EXPECT_EQ(sk.diagnostics.front(), "zero-RHS not normalizable");
  EXPECT_THROW(normalize_identity(parse_identity("params n; sum(k, 0, n, binom(n,k)) = 0")), wz::PreconditionError);
}

TEST(Sketch, TrivialRhsNormalization) {
  const auto [F, obs] = normalize_identity(parse_identity("params n; sum(k, 0, n, binom(n,k)/2^n) = 1"));
  EXPECT_EQ(F.to_string(), "binom(n,k) / 2^n");
  ASSERT_EQ(obs.size(), 2u);
  EXPECT_EQ(obs[0].kind, Kind::Norm);
  EXPECT_EQ(obs[1].kind, Kind::Side);
}

TEST(Sketch, RangeShiftAddsNormObligation) {
  const auto sk = build_sketch(parse_identity("params n; sum(k, 1, n+1, binom(n,k-1)) = 2^n"));
  ASSERT_FALSE(sk.uncovered);
  EXPECT_EQ(kinds(sk)["norm"], 2);
  ASSERT_NE(named(sk, "range_shift_1"), nullptr);
}

TEST(Sketch, ParityRootSplitsCases) {
  ProofSketch sk = build_sketch(parse_identity("params n; sum(k, 0, n, binom(n,k)) = 2^n"));
  sk.identity = parse_identity("params n; sum(k, 0, n, (n-2*k) * binom(n,k)) = 2^n");
  const auto obs = infer_side_conditions(sk);
  int cases = 0;
  for (const auto& o : obs)
    if (o.kind == Kind::Case) ++cases;
  EXPECT_EQ(cases, 2);
}

TEST(Sketch, ObligationIdsAreStableHashes) {
  const auto a = build_sketch(parse_identity(kCentral));
  const auto b = build_sketch(parse_identity(kCentral));
  ASSERT_EQ(a.obligations, b.obligations);
  for (const auto& o : a.obligations) EXPECT_EQ(o.id, fnv1a_hex(o.goal_internal));
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(Sketch, NormalizationLemmaSharedAcrossIdentities) {
  const auto a = build_sketch(parse_identity(kCentral));
  const auto b = build_sketch(parse_identity(kReciprocal));
  EXPECT_EQ(named(a, "WZ_aux")->id, named(b, "WZ_aux")->id);
}

TEST(Sketch, BaseValueReportsStatementErrors) {
  const auto sk = build_sketch(parse_identity("params n; sum(k, 0, n, binom(n,k)) = 2^(n+1)"));
  ASSERT_TRUE(sk.base_case.value);
  EXPECT_EQ(*sk.base_case.value, Rational(1, 2));
  EXPECT_FALSE(sk.diagnostics.empty());
}

TEST(SketchLean, TermRendering) {
  const auto id = parse_identity(kReciprocal);
  const auto order = display_order(id);
  EXPECT_EQ(lean_term(id.summand, order), "(-1 : ℝ) ^ k * (Nat.choose n k : ℝ) * (↑m : ℝ) / (↑k + ↑m : ℝ)");
  EXPECT_EQ(lean_term(id.rhs, order), "1 / (Nat.choose (m + n) n : ℝ)");
  EXPECT_EQ(lean_binders(id), "(n m : ℕ) (h₀ : m ≥ 1)");
  EXPECT_EQ(lean_statement(parse_identity(kCentral)),
            "∑ k ∈ Finset.range (n + 1), (Nat.choose n k : ℝ) ^ 2 = (Nat.choose (2 * n) n : ℝ)");
  EXPECT_EQ(lean_nat(wz::sym::LinearForm::var("n") - wz::sym::LinearForm::var("k") + wz::sym::LinearForm(1)),
            "n + 1 - k");
  EXPECT_EQ(lean_ident("1-foo.bar"), "wz_1_foo_bar");
}

TEST(Sketch, RhsVanishingAtBasePointIsReported) {
  const auto sk = build_sketch(parse_identity("params n; sum(k, 0, n, k^2 * binom(n,k)) = n * (n+1) * 2^(n-2)"));
  EXPECT_FALSE(sk.base_case.value);
  ASSERT_FALSE(sk.diagnostics.empty());
  EXPECT_NE(sk.diagnostics.front().find("rhs vanishes at n = 0"), std::string::npos);
  const auto fixed =
      build_sketch(parse_identity("params n; assume n >= 1; sum(k, 0, n, k^2 * binom(n,k)) = n * (n+1) * 2^(n-2)"));
  EXPECT_EQ(fixed.base_case.n0, 1);
  ASSERT_TRUE(fixed.base_case.value);
  EXPECT_EQ(*fixed.base_case.value, 1);
  EXPECT_TRUE(fixed.diagnostics.empty());
}
