// Acceptance checks 1-8; one PASS/FAIL line each, nonzero exit if any fails.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "wz/gosper/gosper.hpp"
#include "wz/orchestrator/pipeline.hpp"

namespace fs = std::filesystem;
using namespace wz;
using sym::Assignment;
using sym::LinearForm;
using sym::Polynomial;
using sym::Rational;
using sym::RationalFunction;
using sym::VarList;

namespace {

const char* kCentral = "params n; sum(k, 0, n, binom(n,k)^2) = binom(2*n,n)";
const char* kReciprocal = "params n m; assume m >= 1; sum(k, 0, n, (-1)^k * binom(n,k) * m/(m+k)) = 1/binom(m+n,n)";

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::pair<std::string, parse::Identity>> suite() {
  std::vector<std::pair<std::string, parse::Identity>> out;
  for (const auto& p : orch::list_inputs(WZ_IDENTITY_DIR))
    out.emplace_back(p.stem().string(), parse::parse_identity(slurp(p)));
  return out;
}

// F(n+1,k) - F(n,k) == G(n,k+1) - G(n,k) at integer points, by direct evaluation.
bool wz_equation_holds_numerically(const sketch::ProofSketch& sk, const RationalFunction& R) {
  const auto v = sk.vars();
  int checked = 0;
  for (long n = 0; n <= 8; ++n) {
    for (long k = 0; k <= n + 1; ++k) {
      Assignment at{{v.n, n}, {v.k, k}};
      for (const auto& p : sk.identity.params)
        if (p != v.n) at[p] = 3;
      try {
        auto shift = [&](long dn, long dk) {
          Assignment a = at;
          a[v.n] = n + dn;
          a[v.k] = k + dk;
          return a;
        };
        const Rational lhs = sk.F.evaluate(shift(1, 0)) - sk.F.evaluate(at);
        const Rational rhs = R.evaluate(shift(0, 1)) * sk.F.evaluate(shift(0, 1)) - R.evaluate(at) * sk.F.evaluate(at);
        if (lhs != rhs) return false;
        ++checked;
      } catch (const Error&) {
      }
    }
  }
  return checked > 0;
}

Outcome criterion1() {
  Outcome o;
  const auto id = parse::parse_identity(kCentral);
  const auto start = std::chrono::steady_clock::now();
  const auto sk = sketch::certify(id);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  o.require(!sk.uncovered && sk.pair.has_value(), "no WZ pair");
  if (!o.ok) return o;
  const VarList u = sk.vars().universe;
  const Polynomial k = Polynomial::variable(u, "k"), n = Polynomial::variable(u, "n");
  auto c = [&](long x) { return Polynomial::constant(u, x); };
  const RationalFunction expected(-(k * k) * (c(3) * n - c(2) * k + c(3)),
                                  c(2) * (n - k + c(1)).pow(2) * (c(2) * n + c(1)));
  const bool zero = tele::verify_wz_equation(sk.F, sk.pair->R, sk.vars()).is_zero();
  o.require(zero, "nonzero residual");
  o.require(sk.pair->R == expected, "certificate differs from the expected one: " + sk.certificate_text());
  o.require(wz_equation_holds_numerically(sk, sk.pair->R), "WZ equation fails at a sample point");
  o.require(ms < 1000.0, "took " + std::to_string(ms) + " ms");
  if (o.ok) o.detail = "R = " + sk.certificate_text() + ", residual 0, " + std::to_string(static_cast<long>(ms)) + " ms";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto sk = sketch::build_sketch(parse::parse_identity(kReciprocal));
  o.require(!sk.uncovered && sk.pair.has_value(), "no WZ pair");
  if (!o.ok) return o;
  const VarList u = sk.vars().universe;
  const Polynomial k = Polynomial::variable(u, "k"), n = Polynomial::variable(u, "n"),
                   m = Polynomial::variable(u, "m");
  const Polynomial one = Polynomial::constant(u, 1);
  const RationalFunction expected(-(k + m) * k, (n - k + one) * (n + one));
  o.require(tele::verify_wz_equation(sk.F, sk.pair->R, sk.vars()).is_zero(), "nonzero residual");
  o.require(sk.pair->R == expected, "certificate differs: " + sk.certificate_text());
  o.require(wz_equation_holds_numerically(sk, sk.pair->R), "WZ equation fails at a sample point");
  auto goal = [&](std::string_view name) -> std::string {
    for (const auto& ob : sk.obligations)
      if (ob.name == name) return ob.goal_lean;
    return "";
  };
  o.require(goal("aux₁").ends_with("= -(n - k)*(k + m)/((k + m + 1)*(k + 1))"), "aux₁: " + goal("aux₁"));
  o.require(goal("aux₃").ends_with("= (n + 1)/(n + m + 1)"), "aux₃: " + goal("aux₃"));
  if (o.ok) o.detail = "R = " + sk.certificate_text();
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto ids = suite();
  o.require(ids.size() >= 10, "suite has only " + std::to_string(ids.size()) + " identities");
  for (const auto& [name, id] : ids) {
    const auto sk = sketch::build_sketch(id);
    o.require(!sk.uncovered, name + ": no certificate");
    if (sk.uncovered) continue;
    const auto v = sk.vars();
    if (sk.pair) {
      const RationalFunction bumped = sk.pair->R + RationalFunction::constant(v.universe, 1);
      o.require(tele::verify_wz_equation(sk.F, sk.pair->R, v).is_zero(), name + ": nonzero residual");
      o.require(!tele::verify_wz_equation(sk.F, bumped, v).is_zero(), name + ": mutation R+1 still zero");
      o.require(wz_equation_holds_numerically(sk, sk.pair->R), name + ": WZ equation fails numerically");
    } else {
      auto rel = *sk.relation;
      o.require(tele::telescope_residual(sk.F, rel, v).is_zero(), name + ": nonzero residual");
      rel.R = rel.R + RationalFunction::constant(v.universe, 1);
      o.require(!tele::telescope_residual(sk.F, rel, v).is_zero(), name + ": mutation R+1 still zero");
    }
  }
  if (o.ok) o.detail = std::to_string(ids.size()) + " identities, residual 0, every R+1 mutation nonzero";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto ids = suite();
  std::size_t points = 0;
  for (const auto& [name, id] : ids) {
    const auto r = orch::numeric_verify(id, 20);
    o.require(r.pass() && r.skipped == 0, name + ": numeric check failed");
    points += r.equal;
    orch::NumericOptions corrupt;
    corrupt.rhs_offset = 1;
    const auto bad = orch::numeric_verify(id, 20, corrupt);
    const auto* first = bad.first_unequal();
    o.require(first && first->n == sketch::smallest_admissible_n(id),
              name + ": RHS+1 control not caught at the first admissible n");
  }
  const auto central_report = orch::numeric_verify(parse::parse_identity(kCentral), 20, {1, 5, 1});
  const auto* central = central_report.first_unequal();
  o.require(central && central->n == 0, "CentralBinomial RHS+1 control not caught at n=0");
  if (o.ok) o.detail = std::to_string(points) + " points equal; RHS+1 controls fail at the first admissible n";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const VarList u{"k", "n"};
  const Polynomial K = Polynomial::variable(u, "k"), N = Polynomial::variable(u, "n");
  auto C = [&](long c) { return Polynomial::constant(u, c); };
  const RationalFunction one = RationalFunction::constant(u, 1);

  // k * k!: ratio (k+1)^2/k, antidifference k!, so R = 1/k.
  const RationalFunction kfact((K + C(1)) * (K + C(1)), K);
  const auto r = gosper::gosper_solve(kfact, "k");
  o.require(r.has_value(), "no antidifference for k*k!");
  if (r) {
    o.require(gosper::gosper_residual(kfact, *r, "k").is_zero(), "k*k!: nonzero residual");
    for (long k = 1; k <= 8; ++k) {
      const Rational f = Rational(k) * Rational(ht::HyperTerm::factorial(LinearForm(k)).evaluate({}));
      const Rational g = r->evaluate({{"k", k}, {"n", 0}}) * f;
      o.require(g == ht::HyperTerm::factorial(LinearForm(k)).evaluate({}), "k*k!: g(k) != k!");
    }
  }

  // Sum of 1/k: ratio k/(k+1), no hypergeometric antidifference.
  o.require(!gosper::gosper_solve(RationalFunction(K, K + C(1)), "k").has_value(), "1/k reported summable");

  std::mt19937 rng(90210);
  std::uniform_int_distribution<int> pick(0, 3), shift(0, 3);
  int solved = 0, tried = 0;
  const LinearForm k = LinearForm::var("k");
  while (solved < 10 && tried < 100) {
    ++tried;
    ht::HyperTerm g = ht::HyperTerm::constant(Rational(1 + pick(rng)));
    if (pick(rng) < 2) g = g * ht::HyperTerm::factorial(k + LinearForm(shift(rng))).pow(pick(rng) < 2 ? 1 : -1);
    if (pick(rng) < 2) g = g * ht::HyperTerm::binom(LinearForm::var("n"), k);
    if (pick(rng) < 2) g = g * ht::HyperTerm::power(C(2 + shift(rng)), k);
    if (pick(rng) < 2) g = g * ht::HyperTerm::polynomial(K + C(1 + shift(rng))).pow(pick(rng) < 2 ? 1 : -1);
    if (pick(rng) < 1) g = g * ht::HyperTerm::polynomial(K * K + N + C(1));
    if (!g.involves("k")) continue;
    // f = g(k+1) - g(k) telescopes by construction.
    const RationalFunction rho = g.ratio_shift("k", u);
    const RationalFunction ratio = rho * (rho.shift("k", 1) - one) / (rho - one);
    const auto cert = gosper::gosper_solve(ratio, "k");
    o.require(cert.has_value(), "no antidifference for Delta(" + g.to_string() + ")");
    if (!cert) continue;
    o.require(gosper::gosper_residual(ratio, *cert, "k").is_zero(), "nonzero residual for " + g.to_string());
    // Independent check: G = R f satisfies G(k+1) - G(k) = f(k) at integer points.
    for (long kk = 0; kk <= 6; ++kk) {
      try {
        auto f_at = [&](long x) -> Rational {
          Assignment a{{"k", x}, {"n", 7}};
          Assignment b{{"k", x + 1}, {"n", 7}};
          return g.evaluate(b) - g.evaluate(a);
        };
        auto G_at = [&](long x) -> Rational { return cert->evaluate({{"k", x}, {"n", 7}}) * f_at(x); };
        o.require(G_at(kk + 1) - G_at(kk) == f_at(kk), "antidifference fails numerically for " + g.to_string());
      } catch (const Error&) {
      }
    }
    ++solved;
  }
  o.require(solved == 10, "only " + std::to_string(solved) + " random summands generated");
  if (o.ok) o.detail = "k*k! -> k!, 10 random telescoping summands solved, 1/k absent";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto sk = sketch::build_sketch(parse::parse_identity(kCentral));
  const auto m = lean::make_manifest(sk, "central");
  std::map<sketch::Kind, int> counts;
  bool lower = false, upper = false, den_nk = false, den_2n = false;
  for (const auto& ob : m.obligations) {
    ++counts[ob.kind];
    if (ob.kind == sketch::Kind::Bd && ob.goal_lean.find("G n 0 = 0") != std::string::npos) lower = true;
    if (ob.kind == sketch::Kind::Bd && ob.goal_lean.find("G n (n + 1)") != std::string::npos) upper = true;
    if (ob.kind == sketch::Kind::Side && ob.goal_lean.find("(↑n - ↑k + 1 : ℝ) ≠ 0") != std::string::npos) den_nk = true;
    if (ob.kind == sketch::Kind::Side && ob.goal_lean.find("(2 * ↑n + 1 : ℝ) ≠ 0") != std::string::npos) den_2n = true;
  }
  o.require(counts[sketch::Kind::Rec] == 1, "rec count " + std::to_string(counts[sketch::Kind::Rec]));
  o.require(counts[sketch::Kind::Bd] == 2 && lower && upper, "bd obligations are not k=0 and k=n+1");
  o.require(counts[sketch::Kind::Norm] == 1, "norm count " + std::to_string(counts[sketch::Kind::Norm]));
  o.require(counts[sketch::Kind::Side] >= 2 && den_nk && den_2n, "side goals miss a certificate denominator");
  o.require(m.base_case && m.base_case->n0 == 0 && m.base_case->value == std::optional<std::string>("1"),
            "base case value is not 1");
  const std::string text = lean::write_manifest(m);
  o.require(lean::write_manifest(lean::read_manifest(text)) == text, "manifest round trip not byte-identical");
  o.require(lean::read_manifest(text) == m, "manifest round trip changed content");
  if (o.ok) {
    o.detail = "rec 1, bd 2, norm 1, side " + std::to_string(counts[sketch::Kind::Side]) + ", base value 1, " +
               std::to_string(text.size()) + " bytes round-tripped";
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (const auto& [name, text] : {std::pair{"central", kCentral}, std::pair{"reciprocal", kReciprocal}}) {
    const auto sk = sketch::build_sketch(parse::parse_identity(text));
    const auto file = lean::emit_lean(sk, name);
    const auto again = lean::emit_lean(sketch::build_sketch(parse::parse_identity(text)), name);
    o.require(file.text == again.text, std::string(name) + ": emission not deterministic");
    std::size_t last = 0;
    for (int s = 0; s <= 7; ++s) {
      const auto at = file.text.find("-- (" + std::to_string(s) + ")");
      o.require(at != std::string::npos && at >= last, std::string(name) + ": section " + std::to_string(s) + " missing or out of order");
      if (at != std::string::npos) last = at;
    }
    o.require(file.text.find("let R : ℕ → ℕ → ℝ := fun n k => (" + sk.certificate_text() + " : ℝ)") !=
                  std::string::npos,
              std::string(name) + ": certificate not verbatim in let R");
    std::size_t markers = 0, pos = 0;
    while ((pos = file.text.find(lean::kTaskMarker, pos)) != std::string::npos) ++markers, ++pos;
    std::size_t open = 0;
    for (const auto& ob : sk.obligations) open += ob.status == sketch::Status::Open;
    o.require(lean::count_sorry(file.text) == open && markers == open,
              std::string(name) + ": sorry/marker count differs from open obligations");
    o.require(lean::lint_file(file.text).empty(), std::string(name) + ": lint problems");
  }
  if (o.ok) o.detail = "sections (0)-(7) in order, let R verbatim, sorry = markers = open, deterministic";
  return o;
}

class CountingBackend : public orch::ProverBackend {
 public:
  orch::DischargeResult discharge(const std::string&, const std::string&) override {
    ++calls;
    return {false, {}, "declined", 1};
  }
  orch::Capabilities capabilities() const override { return {"counting", false}; }
  std::atomic<int> calls{0};
};

Outcome criterion8() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / ("wz_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir / name) << text << "\n";
    return dir / name;
  };

  orch::GoalQueue q;
  const auto goal = sketch::make_obligation(sketch::Kind::Side, "h", "x != 0", "x ≠ 0", "check");
  o.require(q.push(goal) && !q.push(goal) && q.pending_count() == 1, "seen-set admitted a goal twice");

  CountingBackend counting;
  orch::Config cfg;
  cfg.jobs = 3;
  const auto dup = orch::run_pipeline({write("first.wz", kCentral), write("second.wz", kCentral)}, cfg, counting, dir / "dup");
  o.require(static_cast<std::size_t>(counting.calls) == dup.goals_unique &&
                dup.items[1].status == orch::ItemStatus::Duplicate && !fs::exists(dir / "dup" / "second.manifest.json"),
            "duplicate goal processed more than once");

  orch::NullBackend null;
  const auto unc = orch::run_pipeline({write("zero.wz", "params n; assume n >= 1; sum(k, 0, n, (-1)^k*binom(n,k)) = 0")},
                                      cfg, null, dir / "unc");
  const auto& z = unc.items.front();
  o.require(z.status == orch::ItemStatus::Fail, "uncovered identity not recorded as Fail");
  o.require(fs::exists(z.lean_path) && slurp(z.lean_path).find(lean::kDirectMarker) != std::string::npos,
            "no direct stub emitted");

  const auto sk = sketch::build_sketch(parse::parse_identity(kCentral));
  const auto base = lean::emit_lean(sk, "central");
  o.require(lean::assemble(base.text, {}) == base.text, "empty assemble changed the file");
  const auto ids = lean::placeholder_ids(base.text);
  const lean::Discharges one{{ids.front(), "positivity"}};
  const std::string spliced = lean::assemble(base.text, one);
  o.require(lean::assemble(spliced, one) == spliced, "assemble not idempotent");
  o.require(lean::count_sorry(spliced) + 1 == lean::count_sorry(base.text), "assemble did not splice exactly one");
  const auto left = lean::placeholder_ids(spliced);
  o.require(std::vector<std::string>(ids.begin() + 1, ids.end()) == left, "assemble touched other placeholders");
  o.require(spliced.find("positivity") != std::string::npos, "fragment text missing");
  fs::remove_all(dir);
  if (o.ok) o.detail = std::to_string(dup.goals_unique) + " unique goals for 2 identical inputs, Fail + stub, idempotent splice";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"certificate for sum binom(n,k)^2 = binom(2n,n)", criterion1},
      {"certificate and ratio lemmas for the alternating reciprocal sum", criterion2},
      {"residual soundness suite with R+1 mutations", criterion3},
      {"numeric oracle and RHS+1 control", criterion4},
      {"Gosper decisions", criterion5},
      {"obligation pool and manifest round trip", criterion6},
      {"Lean template fidelity", criterion7},
      {"queue dedup, Fail on uncovered, assemble", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
