#include "wz/sketch/sketch.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <set>

#include "wz/sketch/lean_expr.hpp"
#include "wz/symcore/factor.hpp"

namespace wz::sketch {

using sym::Assignment;
using sym::LinearForm;
using sym::RationalFunction;
using sym::VarList;

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Rec: return "rec";
    case Kind::Bd: return "bd";
    case Kind::Side: return "side";
    case Kind::Norm: return "norm";
    case Kind::Case: return "case";
  }
  return "side";
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Open: return "open";
    case Status::Discharged: return "discharged";
    case Status::Failed: return "failed";
  }
  return "open";
}

std::optional<Kind> parse_kind(std::string_view s) {
  for (Kind k : {Kind::Rec, Kind::Bd, Kind::Side, Kind::Norm, Kind::Case})
    if (kind_name(k) == s) return k;
  return std::nullopt;
}

std::optional<Status> parse_status(std::string_view s) {
  for (Status st : {Status::Open, Status::Discharged, Status::Failed})
    if (status_name(st) == s) return st;
  return std::nullopt;
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Obligation make_obligation(Kind kind, std::string name, std::string goal_internal, std::string goal_lean,
                           std::string provenance) {
  Obligation o;
  o.id = fnv1a_hex(goal_internal);
  o.kind = kind;
  o.name = std::move(name);
  o.goal_internal = std::move(goal_internal);
  o.goal_lean = std::move(goal_lean);
  o.provenance = std::move(provenance);
  return o;
}

namespace {

// Shared text fragments for one identity.
struct Ctx {
  const Identity& id;
  VarList order;
  std::string n, k;
  std::string hi_nat;  // Lean upper limit
  std::string hi;      // internal upper limit
  std::string hyps;    // Lean hypotheses on the main variable, each followed by " → "
  std::string assume;  // internal "; assume ..." suffix

  explicit Ctx(const Identity& identity) : id(identity), order(display_order(identity)) {
    n = id.main_var();
    k = id.sum_var;
    hi_nat = lean_nat(id.hi);
    hi = id.hi.to_string();
    std::vector<std::string> all;
    for (const auto& a : id.assumptions) {
      if (a.involves(n)) hyps += lean_constraint(a) + " → ";
      all.push_back(parse::constraint_to_string(a));
    }
    for (std::size_t i = 0; i < all.size(); ++i) assume += (i ? ", " : "; assume ") + all[i];
  }

  std::string forall_n() const { return "∀ " + n + " : ℕ, " + hyps; }
  std::string forall_nk(bool strict) const {
    return "∀ " + n + " " + k + " : ℕ, " + hyps + k + (strict ? " < " : " ≤ ") + hi_nat + " → ";
  }
  std::string range(bool strict) const {
    return "0 <= " + k + (strict ? " < " : " <= ") + hi;
  }
  std::string factored(const RationalFunction& r) const { return sym::to_factored_string(r, order); }
  std::string nat_arg(const LinearForm& l) const {
    const std::string s = lean_nat(l);
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
  }
};

HyperTerm atom_term(const ht::Factor& f) {
  switch (f.kind) {
    case ht::FactorKind::Binom: return HyperTerm::binom(f.top, f.bottom);
    case ht::FactorKind::Factorial: return HyperTerm::factorial(f.top);
    case ht::FactorKind::Power: return HyperTerm::power(f.base, f.exponent);
    case ht::FactorKind::Poly: return HyperTerm::polynomial(f.poly);
  }
  return HyperTerm::constant(1);
}

void add_poly_atoms(const sym::FactoredView& view, bool with_num, std::vector<HyperTerm>& out) {
  for (const auto& pf : view.den) out.push_back(HyperTerm::polynomial(pf.poly));
  if (with_num)
    for (const auto& pf : view.num) out.push_back(HyperTerm::polynomial(pf.poly));
}

void dedup(std::vector<Obligation>& obs) {
  std::set<std::string> seen;
  std::vector<Obligation> out;
  for (auto& o : obs)
    if (seen.insert(o.id).second) out.push_back(std::move(o));
  obs = std::move(out);
}

bool admissible(const Identity& id, const Assignment& pt) {
  for (const auto& a : id.assumptions)
    if (a.evaluate(pt) < 0) return false;
  return true;
}

// Assignments of the non-main parameters drawn from [lo, hi], filtered by the assumptions.
std::vector<Assignment> param_samples(const Identity& id, int main_value, int lo, int hi) {
  std::vector<Assignment> out{{{id.main_var(), main_value}}};
  for (const auto& p : id.params) {
    if (p == id.main_var()) continue;
    std::vector<Assignment> next;
    for (const auto& a : out)
      for (int v = lo; v <= hi; ++v) {
        Assignment b = a;
        b[p] = v;
        next.push_back(std::move(b));
      }
    out = std::move(next);
  }
  std::erase_if(out, [&](const Assignment& a) { return !admissible(id, a); });
  return out;
}

// G(n, at) with division by zero read as zero, as Lean does.
std::optional<Rational> boundary_value(const ProofSketch& sk, const RationalFunction& R, const LinearForm& at,
                                       Assignment pt) {
  const Rational kv = at.evaluate(pt);
  pt[sk.identity.sum_var] = kv;
  Rational r;
  try {
    r = R.evaluate(pt);
  } catch (const PoleError&) {
    return Rational(0);
  }
  if (r == 0) return r;
  try {
    return r * sk.F.evaluate(pt);
  } catch (const PoleError&) {
    return Rational(0);
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool boundary_vanishes(const ProofSketch& sk, const RationalFunction& R, const LinearForm& at) {
  const int n0 = sk.base_case.n0;
  for (int n = n0; n <= n0 + 5; ++n)
    for (const auto& pt : param_samples(sk.identity, n, 1, 3)) {
      auto v = boundary_value(sk, R, at, pt);
      if (v && *v != 0) return false;
    }
  return true;
}

std::vector<HyperTerm> side_atoms(const ProofSketch& sk) {
  const Identity& id = sk.identity;
  const Ctx c(id);
  const VarList u = id.universe();
  std::vector<HyperTerm> atoms;
  auto add_ratio = [&](const HyperTerm& t, const std::string& var) {
    try {
      add_poly_atoms(sym::factored_view(t.ratio_shift(var, u), c.order), false, atoms);
    } catch (const Error&) {
    }
  };
  if (sk.pair) add_poly_atoms(sym::factored_view(sk.pair->R, c.order), false, atoms);
  if (sk.relation) {
    add_poly_atoms(sym::factored_view(sk.relation->R, c.order), false, atoms);
    for (std::size_t j = 0; j < sk.relation->coeffs.size(); ++j)
      add_poly_atoms(sym::factored_view(sk.relation->coeffs[j], c.order), j + 1 == sk.relation->coeffs.size(),
                     atoms);
  }
  add_ratio(id.summand, c.k);
  add_ratio(id.summand, c.n);
  add_ratio(id.rhs, c.n);
  for (const auto& f : id.summand.factors()) atoms.push_back(atom_term(f));
  std::vector<HyperTerm> out;
  std::set<std::string> seen;
  for (const auto& a : atoms) {
    if (a.is_constant()) continue;
    if (seen.insert(a.to_string()).second) out.push_back(a);
  }
  return out;
}

std::string one_line(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

std::vector<Obligation> case_split(const ProofSketch& sk) {
  std::vector<Obligation> out;
  for (auto tag : {parse::CaseTag::Even, parse::CaseTag::Odd}) {
    Identity copy = sk.identity;
    copy.case_tag = tag;
    const Identity inst = parse::instantiate_case(copy);
    const Ctx c(inst);
    const bool even = tag == parse::CaseTag::Even;
    const std::string label = even ? "even" : "odd";
    out.push_back(make_obligation(Kind::Case, "case_" + label,
                                  "case " + label + "(" + sk.identity.main_var() + "): " + one_line(parse::print_identity(inst)),
                                  c.forall_n() + lean_statement(inst), "parity_split"));
  }
  return out;
}

std::string invariant_lean(const Ctx& c, const ProofSketch& sk, const std::string& kk) {
  std::string lhs;
  if (sk.relation) {
    for (std::size_t j = 0; j < sk.relation->coeffs.size(); ++j) {
      if (sk.relation->coeffs[j].is_zero()) continue;
      if (!lhs.empty()) lhs += " + ";
      const std::string nj = j == 0 ? c.n : "(" + c.n + " + " + std::to_string(j) + ")";
      lhs += "(" + c.factored(sk.relation->coeffs[j]) + ") * F " + nj + " " + kk;
    }
  } else {
    lhs = "F (" + c.n + " + 1) " + kk + " - F " + c.n + " " + kk;
  }
  const std::string k1 = kk.front() == '(' ? "(" + kk.substr(1, kk.size() - 2) + " + 1)" : "(" + kk + " + 1)";
  return lhs + " = G " + c.n + " " + k1 + " - G " + c.n + " " + kk;
}

std::string context_text(const Ctx& c, const ProofSketch& sk) {
  return "; F = " + sk.F.to_string() + "; R = " + sk.certificate_text() + c.assume;
}

}  // namespace

tele::Vars ProofSketch::vars() const {
  return tele::Vars{identity.sum_var, identity.main_var(), identity.universe()};
}

std::string ProofSketch::certificate_text() const {
  const VarList order = display_order(identity);
  if (pair) return sym::to_factored_string(pair->R, order);
  if (relation) return sym::to_factored_string(relation->R, order);
  return {};
}

Obligation direct_goal(const Identity& original) {
  const Identity id = parse::range_normalize(parse::instantiate_case(original)).first;
  return make_obligation(Kind::Rec, "direct", one_line(parse::print_identity(original)), lean_statement(id), "direct");
}

Obligation ProofSketch::direct_goal() const { return sketch::direct_goal(original); }

std::size_t ProofSketch::count(Kind k) const {
  return std::count_if(obligations.begin(), obligations.end(), [&](const Obligation& o) { return o.kind == k; });
}

std::pair<HyperTerm, std::vector<Obligation>> normalize_identity(const Identity& id) {
  if (id.zero_rhs()) throw PreconditionError("zero-RHS not normalizable");
  const Ctx c(id);
  const HyperTerm F = id.summand / id.rhs;
  std::vector<Obligation> obs;
  const std::string sum_range = "Finset.range " + c.nat_arg(id.hi + LinearForm(1));
  obs.push_back(make_obligation(
      Kind::Norm, "WZ_aux",
      "forall " + c.n + ", f, B: B(" + c.n + ") != 0 -> (sum(" + c.k + ", 0, " + c.hi + ", f(" +
          c.n + "," + c.k + ")/B(" + c.n + ")) = 1 <-> sum(" + c.k + ", 0, " + c.hi + ", f(" + c.n + "," + c.k +
          ")) = B(" + c.n + "))",
      "∀ (" + c.n + " : ℕ) (f : ℕ → ℕ → ℝ) (B : ℕ → ℝ), B " + c.n + " ≠ 0 →\n" +
          "        ((∑ " + c.k + " ∈ " + sum_range + ", f " + c.n + " " + c.k + " / B " + c.n + " = 1) ↔ (∑ " +
          c.k + " ∈ " + sum_range + ", f " + c.n + " " + c.k + " = B " + c.n + "))",
      "normalization"));
  obs.push_back(make_obligation(Kind::Side, "ne_zeroB",
                                "forall " + c.n + ": " + id.rhs.to_string() + " != 0" + c.assume,
                                c.forall_n() + "B " + c.n + " ≠ 0", "normalization"));
  return {F, obs};
}

std::vector<Obligation> infer_side_conditions(const ProofSketch& sk) {
  const Identity& id = sk.identity;
  const Ctx c(id);
  const sym::Facts facts = id.facts();
  std::vector<Obligation> out;
  bool parity = false;
  int counter = 0, isolated = 0;
  for (const auto& atom : side_atoms(sk)) {
    const std::string name = "ne_zero_" + std::to_string(++counter);
    const std::string lean_atom = lean_term(atom, c.order);
    const std::string text = atom.to_string();
    if (!atom.involves(c.k)) {
      if (atom.involves(c.n)) {
        out.push_back(make_obligation(Kind::Side, name, "forall " + c.n + ": " + text + " != 0" + c.assume,
                                      c.forall_n() + lean_atom + " ≠ 0", "non_vanishing"));
      } else {
        out.push_back(make_obligation(Kind::Side, name, text + " != 0" + c.assume, lean_atom + " ≠ 0",
                                      "non_vanishing"));
      }
      continue;
    }
    std::string excl_lean, excl_text;
    for (const auto& issue : ht::term_support(atom, c.k, LinearForm(), id.hi, facts)) {
      if (!issue.at) continue;
      if (issue.divisor == 1) {
        const std::string a = c.nat_arg(*issue.at);
        excl_lean += c.k + " ≠ " + lean_nat(*issue.at) + " → ";
        excl_text += ", " + c.k + " != " + issue.at->to_string();
        if (sk.relation && sk.relation->order > 1) continue;
        out.push_back(make_obligation(
            Kind::Side, "isolated_" + std::to_string(++isolated),
            "F(" + c.n + "+1," + issue.at->to_string() + ") - F(" + c.n + "," + issue.at->to_string() + ") = G(" +
                c.n + "," + issue.at->to_string() + "+1) - G(" + c.n + "," + issue.at->to_string() + ")" +
                context_text(c, sk),
            c.forall_n() + lean_nat(*issue.at) + " < " + c.hi_nat + " → " + invariant_lean(c, sk, a),
            "isolated_index"));
      } else if (issue.divisor == 2 && issue.at->involves(c.n)) {
        excl_lean += "2 * " + c.k + " ≠ " + lean_nat(*issue.at) + " → ";
        excl_text += ", 2*" + c.k + " != " + issue.at->to_string();
        parity = true;
      }
    }
    out.push_back(make_obligation(
        Kind::Side, name,
        "forall " + c.n + " " + c.k + ", " + c.range(false) + excl_text + ": " + text + " != 0" + c.assume,
        c.forall_nk(false) + excl_lean + lean_atom + " ≠ 0", "non_vanishing"));
  }
  if (parity)
    for (auto& o : case_split(sk)) out.push_back(std::move(o));
  return out;
}

std::vector<Obligation> ratio_lemma_obligations(const ProofSketch& sk) {
  const Identity& id = sk.identity;
  const Ctx c(id);
  const VarList u = id.universe();
  const std::string A = id.summand.to_string(), B = id.rhs.to_string();
  std::vector<Obligation> out;
  auto add = [&](const std::string& name, const std::string& internal, const std::string& lean) {
    out.push_back(make_obligation(Kind::Side, name, internal + c.assume, lean, "ratio_lemma"));
  };
  const std::string rk = c.factored(id.summand.ratio_shift(c.k, u));
  add("aux₁", "A(" + c.n + "," + c.k + "+1)/A(" + c.n + "," + c.k + ") = " + rk + " for " + c.range(true) + "; A = " + A,
      c.forall_nk(true) + "A " + c.n + " (" + c.k + " + 1) / A " + c.n + " " + c.k + " = " + rk);
  const std::string rn = c.factored(id.summand.ratio_shift(c.n, u));
  add("aux₂", "A(" + c.n + "+1," + c.k + ")/A(" + c.n + "," + c.k + ") = " + rn + " for " + c.range(true) + "; A = " + A,
      c.forall_nk(true) + "A (" + c.n + " + 1) " + c.k + " / A " + c.n + " " + c.k + " = " + rn);
  const std::string rb = c.factored(id.rhs.ratio_shift(c.n, u));
  add("aux₃", "B(" + c.n + "+1)/B(" + c.n + ") = " + rb + "; B = " + B,
      c.forall_n() + "B (" + c.n + " + 1) / B " + c.n + " = " + rb);
  return out;
}

int smallest_admissible_n(const Identity& id) {
  const std::string& n = id.main_var();
  for (int v = 0; v <= 64; ++v) {
    bool ok = true;
    for (const auto& a : id.assumptions) {
      const LinearForm s = a.partial({{n, v}});
      if (s.is_constant() && s.constant() < 0) ok = false;
    }
    if (ok) return v;
  }
  return 0;
}

namespace {

// True when no parameter sample gives a nonzero, finite rhs at n = n0.
bool rhs_vanishes_at(const Identity& id, int n0) {
  for (const auto& pt : param_samples(id, n0, 0, 5)) {
    try {
      if (id.rhs.evaluate(pt) != 0) return false;
    } catch (const Error&) {
    }
  }
  return true;
}

}  // namespace

std::optional<Rational> base_value(const Identity& id, const HyperTerm& F, int n0) {
  const std::string& n = id.main_var();
  const VarList u = id.universe();
  const LinearForm hi = id.hi.partial({{n, n0}});
  if (hi.is_constant()) {
    try {
      auto total = RationalFunction::constant(u, 0);
      bool ok = true;
      for (Rational j = 0; j <= hi.constant() && ok; ++j) {
        auto term = F.evaluate_partial({{n, n0}, {id.sum_var, j}}, u);
        if (!term) ok = false;
        else total = total + *term;
      }
      if (ok) {
        if (total.is_constant()) return total.constant_value();
        return std::nullopt;
      }
    } catch (const Error&) {
    }
  }
  std::optional<Rational> value;
  for (auto pt : param_samples(id, n0, 0, 5)) {
    Rational sum = 0;
    try {
      const Rational top = hi.evaluate(pt);
      for (Rational j = 0; j <= top; ++j) {
        pt[id.sum_var] = j;
        sum += F.evaluate(pt);
      }
    } catch (const Error&) {
      continue;
    }
    if (value && *value != sum) return std::nullopt;
    value = sum;
  }
  return value;
}

ProofSketch certify(const Identity& input, int max_order) {
  ProofSketch sk;
  sk.original = input;
  sk.identity = parse::range_normalize(parse::instantiate_case(input)).first;
  try {
    sk.F = normalize_identity(sk.identity).first;
  } catch (const PreconditionError& e) {
    sk.diagnostics.push_back(e.what());
    return sk;
  }
  const tele::Vars v = sk.vars();
  try {
    sk.pair = tele::wz_certify(sk.F, v);
    if (!sk.pair) sk.relation = tele::creative_telescope(sk.F, max_order, v);
  } catch (const Error& e) {
    sk.diagnostics.push_back(std::string("certification failed: ") + e.what());
  }
  if (!sk.pair && !sk.relation) {
    sk.diagnostics.push_back("no certificate up to order " + std::to_string(max_order));
    return sk;
  }
  sk.uncovered = false;
  return sk;
}

ProofSketch build_sketch(const Identity& input, int max_order) {
  ProofSketch sk = certify(input, max_order);
  if (sk.uncovered) return sk;
  const Identity& id = sk.identity;
  const auto shifts = parse::range_normalize(parse::instantiate_case(input)).second;
  std::vector<Obligation> norm = normalize_identity(id).second;
  const Ctx c(id);
  const tele::Vars v = sk.vars();
  const int order = sk.relation ? sk.relation->order : 1;
  const RationalFunction& R = sk.pair ? sk.pair->R : sk.relation->R;

  sk.base_case.n0 = smallest_admissible_n(id);
  if (rhs_vanishes_at(id, sk.base_case.n0)) {
    sk.diagnostics.push_back("statement error: rhs vanishes at n = " + std::to_string(sk.base_case.n0) +
                             ", so B n ≠ 0 fails there; exclude it with an assumption");
  } else {
    sk.base_case.value = base_value(id, sk.F, sk.base_case.n0);
  }
  if (sk.base_case.value == std::nullopt) {
    if (sk.diagnostics.empty() || sk.diagnostics.back().find("rhs vanishes") == std::string::npos)
      sk.diagnostics.push_back("base value at n = " + std::to_string(sk.base_case.n0) + " could not be determined");
  } else if (*sk.base_case.value != 1) {
    sk.diagnostics.push_back("statement error: base value " + sym::to_string(*sk.base_case.value) + " differs from 1");
  }

  std::vector<Obligation>& obs = sk.obligations;
  obs = norm;
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    const auto& s = shifts[i];
    Identity orig = id;
    orig.lo = s.original_lo;
    orig.hi = s.original_hi;
    orig.summand = s.original_summand;
    const std::string lhs = lean_statement(orig);
    const std::string lhs_sum = lhs.substr(0, lhs.rfind(" = "));
    const std::string rhs = lean_statement(id);
    obs.push_back(make_obligation(Kind::Norm, "range_shift_" + std::to_string(i + 1), s.goal_internal + c.assume,
                                  c.forall_n() + lhs_sum + " = " + rhs.substr(0, rhs.rfind(" = ")),
                                  "range_transform"));
  }
  for (auto& o : infer_side_conditions(sk)) obs.push_back(std::move(o));
  for (auto& o : ratio_lemma_obligations(sk)) obs.push_back(std::move(o));

  const std::string ctx = context_text(c, sk);
  const VarList u = id.universe();
  auto boundary = [&](const std::string& name, const LinearForm& at) {
    const std::string at_lean = c.nat_arg(at);
    if (boundary_vanishes(sk, R, at)) {
      obs.push_back(make_obligation(Kind::Bd, name, "G(" + c.n + "," + at.to_string() + ") = 0" + ctx,
                                    c.forall_n() + "G " + c.n + " " + at_lean + " = 0", "boundary"));
      return;
    }
    const HyperTerm Fa = sk.F.substitute(c.k, at);
    const RationalFunction Ra = R.substitute(c.k, at.to_polynomial(u));
    const std::string value = "(" + c.factored(Ra) + ") * " + lean_term(Fa, c.order);
    sk.diagnostics.push_back("boundary term G(" + c.n + "," + at.to_string() + ") carried explicitly");
    obs.push_back(make_obligation(Kind::Bd, name,
                                  "G(" + c.n + "," + at.to_string() + ") = (" + c.factored(Ra) + ") * " +
                                      Fa.to_string() + ctx,
                                  c.forall_n() + "G " + c.n + " " + at_lean + " = " + value, "boundary_carried"));
  };
  boundary("bd_lower", LinearForm());
  boundary("bd_upper", id.hi + LinearForm(1));

  obs.push_back(make_obligation(Kind::Side, "WZ_invariant",
                                (order == 1 ? "F(" + c.n + "+1," + c.k + ") - F(" + c.n + "," + c.k + ")"
                                            : "sum_j a_j F(" + c.n + "+j," + c.k + ")") +
                                    " = G(" + c.n + "," + c.k + "+1) - G(" + c.n + "," + c.k + ") for " +
                                    c.range(true) + ctx,
                                c.forall_nk(true) + invariant_lean(c, sk, c.k), "wz_invariant"));
  const std::string S = "; S(" + c.n + ") = sum(" + c.k + ", 0, " + c.hi + ", F)";
  if (order == 1) {
    obs.push_back(make_obligation(Kind::Rec, "Step2", "S(" + c.n + "+1) - S(" + c.n + ") = 0" + S + ctx,
                                  c.forall_n() + "f (" + c.n + " + 1) - f " + c.n + " = 0", "telescoping"));
  } else {
    std::string lhs, text;
    for (std::size_t j = 0; j < sk.relation->coeffs.size(); ++j) {
      if (sk.relation->coeffs[j].is_zero()) continue;
      const std::string a = c.factored(sk.relation->coeffs[j]);
      const std::string nj = j == 0 ? c.n : "(" + c.n + " + " + std::to_string(j) + ")";
      lhs += (lhs.empty() ? "" : " + ") + ("(" + a + ") * f " + nj);
      text += (text.empty() ? "" : " + ") + ("(" + a + ")*S(" + c.n + "+" + std::to_string(j) + ")");
    }
    obs.push_back(make_obligation(Kind::Rec, "Step2", text + " = 0" + S + ctx, c.forall_n() + lhs + " = 0",
                                  "telescoping"));
    obs.push_back(make_obligation(Kind::Rec, "Step3", "S(" + c.n + ") = 1 from the recurrence" + S + ctx,
                                  c.forall_n() + "f " + c.n + " = 1", "recurrence_solution"));
  }
  const std::string C = sk.base_case.value ? sym::to_string(*sk.base_case.value) : "1";
  for (int j = 0; j < order; ++j) {
    const int n0 = sk.base_case.n0 + j;
    std::string value = C;
    if (j > 0) {
      auto vj = base_value(id, sk.F, n0);
      value = vj ? sym::to_string(*vj) : "1";
    }
    obs.push_back(make_obligation(Kind::Side, j == 0 ? "base_case" : "base_case_" + std::to_string(j),
                                  "S(" + std::to_string(n0) + ") = " + value + S + ctx,
                                  "f " + std::to_string(n0) + " = " + value, "base_case"));
  }
  dedup(obs);
  return sk;
}

}  // namespace wz::sketch
