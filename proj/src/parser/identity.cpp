#include "wz/parser/identity.hpp"

namespace wz::parse {

using sym::Integer;
using sym::Rational;

LinearForm normalize_constraint(const LinearForm& l) {
  Integer den = l.constant().get_den();
  for (const auto& [v, c] : l.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  const LinearForm scaled = l.scaled(Rational(den));
  if (scaled.is_constant()) return scaled;
  Integer g = 0;
  for (const auto& [v, c] : scaled.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  LinearForm out;
  for (const auto& [v, c] : scaled.coeffs()) out = out + LinearForm::var(v, Rational(c.get_num() / g));
  // Integer variables: sum >= -c/g sharpens to sum >= ceil(-c/g).
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.constant().get_num_mpz_t(), g.get_mpz_t());
  return out + LinearForm(Rational(q));
}

namespace {

std::string side(const std::vector<std::pair<std::string, Rational>>& terms, const Rational& constant) {
  std::string out;
  for (const auto& [v, c] : terms) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += c.get_str() + "*";
    out += v;
  }
  if (constant != 0) {
    if (!out.empty()) out += " + ";
    out += constant.get_str();
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string constraint_to_string(const LinearForm& l) {
  std::vector<std::pair<std::string, Rational>> lhs, rhs;
  for (const auto& [v, c] : l.coeffs()) {
    if (c > 0) {
      lhs.emplace_back(v, c);
    } else {
      rhs.emplace_back(v, -c);
    }
  }
  const Rational c = l.constant();
  return side(lhs, c > 0 ? c : Rational(0)) + " >= " + side(rhs, c < 0 ? Rational(-c) : Rational(0));
}

std::string print_identity(const Identity& id) {
  std::string out = "params";
  for (const auto& p : id.params) out += " " + p;
  out += ";\n";
  for (const auto& a : id.assumptions) out += "assume " + constraint_to_string(a) + ";\n";
  if (id.case_tag != CaseTag::None) {
    out += std::string("case ") + (id.case_tag == CaseTag::Even ? "even" : "odd") + "(" + id.main_var() + ");\n";
  }
  out += "sum(" + id.sum_var + ", " + id.lo.to_string() + ", " + id.hi.to_string() + ", " + id.summand.to_string() +
         ") = " + id.rhs.to_string() + "\n";
  return out;
}

std::pair<Identity, std::vector<RangeShift>> range_normalize(const Identity& id) {
  std::vector<RangeShift> shifts;
  if (id.lo.is_zero()) return {id, shifts};
  Identity out = id;
  const LinearForm a = id.lo;
  const LinearForm k = LinearForm::var(id.sum_var);
  out.summand = id.summand.substitute(id.sum_var, k + a);
  out.lo = LinearForm();
  out.hi = id.hi - a;
  RangeShift s;
  s.offset = a;
  s.original_lo = id.lo;
  s.original_hi = id.hi;
  s.original_summand = id.summand;
  s.goal_internal = "sum(" + id.sum_var + ", " + id.lo.to_string() + ", " + id.hi.to_string() + ", " +
                    id.summand.to_string() + ") = sum(" + id.sum_var + ", 0, " + out.hi.to_string() + ", " +
                    out.summand.to_string() + ")";
  shifts.push_back(s);
  return {out, shifts};
}

Identity instantiate_case(const Identity& id) {
  if (id.case_tag == CaseTag::None) return id;
  const VarList u = id.universe();
  std::string t = "t";
  for (int i = 1; std::find(u.begin(), u.end(), t) != u.end(); ++i) t = "t" + std::to_string(i);
  LinearForm value = LinearForm::var(t, 2);
  if (id.case_tag == CaseTag::Odd) value = value + LinearForm(1);
  const std::string& n = id.main_var();
  Identity out = id;
  out.lo = id.lo.substitute(n, value);
  out.hi = id.hi.substitute(n, value);
  out.summand = id.summand.substitute(n, value);
  out.rhs = id.rhs.substitute(n, value);
  out.assumptions.clear();
  for (const auto& a : id.assumptions) {
    LinearForm s = normalize_constraint(a.substitute(n, value));
    if (s.is_constant() && s.constant() >= 0) continue;
    out.assumptions.push_back(s);
  }
  out.params.front() = t;
  out.case_tag = CaseTag::None;
  return out;
}

}  // namespace wz::parse
