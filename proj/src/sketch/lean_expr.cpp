#include "wz/sketch/lean_expr.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace wz::sketch {

using sym::Integer;
using sym::Rational;

namespace {

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string scaled_var(const Rational& c, const std::string& v) {
  return c == 1 ? v : c.get_str() + " * " + v;
}

// Wraps anything that is not a single token.
std::string arg(const std::string& s) {
  return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

std::string with_power(const std::string& atom, int m) {
  const int e = std::abs(m);
  return e == 1 ? atom : atom + " ^ " + std::to_string(e);
}

std::string subscript(std::size_t i) {
  static const char* const digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  for (char c : std::to_string(i)) out += digits[c - '0'];
  return out;
}

}  // namespace

VarList display_order(const parse::Identity& id) {
  VarList out{id.main_var(), id.sum_var};
  for (const auto& p : id.params)
    if (p != id.main_var()) out.push_back(p);
  return out;
}

std::string lean_nat(const LinearForm& l) {
  std::vector<std::string> pos, neg;
  for (const auto& [v, c] : l.coeffs()) {
    if (c > 0) {
      pos.push_back(scaled_var(c, v));
    } else {
      neg.push_back(scaled_var(-c, v));
    }
  }
  const Rational c0 = l.constant();
  if (c0 > 0) pos.push_back(c0.get_str());
  if (c0 < 0) neg.push_back(Rational(-c0).get_str());
  std::string out = pos.empty() ? "0" : join(pos, " + ");
  for (const auto& s : neg) out += " - " + s;
  return out;
}

std::string lean_real(const Polynomial& p, std::span<const std::string> order) {
  if (p.is_zero()) return "0";
  const auto form = sym::display_form(p, order);
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : form.terms) {
    Rational c = coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::vector<std::string> powers;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (key[i] == 0) continue;
      std::string v = "↑" + form.names[i];
      if (key[i] > 1) v += " ^ " + std::to_string(key[i]);
      powers.push_back(v);
    }
    const std::string mono = join(powers, " * ");
    if (mono.empty()) {
      out += c.get_str();
    } else {
      out += c == 1 ? mono : c.get_str() + " * " + mono;
    }
  }
  return out;
}

std::string lean_real(const LinearForm& l, std::span<const std::string> order) {
  const VarList vars = sym::merge_vars(VarList(order.begin(), order.end()), l.vars());
  return lean_real(l.to_polynomial(vars), order);
}

std::string lean_term(const HyperTerm& t, std::span<const std::string> order) {
  if (t.is_zero()) return "(0 : ℝ)";
  std::vector<std::string> num, den;
  Rational c = t.coefficient();
  bool negative = c < 0;
  if (negative) c = -c;
  const Integer a = c.get_num(), b = c.get_den();
  if (a != 1) num.push_back("(" + a.get_str() + " : ℝ)");
  if (b != 1) den.push_back("(" + b.get_str() + " : ℝ)");
  const LinearForm& s = t.sign_exponent();
  if (s.is_constant()) {
    if (s.constant() != 0) negative = !negative;
  } else {
    num.push_back("(-1 : ℝ) ^ " + arg(lean_nat(s)));
  }
  for (const auto& f : t.factors()) {
    auto& side = f.multiplicity > 0 ? num : den;
    switch (f.kind) {
      case ht::FactorKind::Binom:
        side.push_back(with_power("(Nat.choose " + arg(lean_nat(f.top)) + " " + arg(lean_nat(f.bottom)) + " : ℝ)",
                                  f.multiplicity));
        break;
      case ht::FactorKind::Factorial:
        side.push_back(with_power("(Nat.factorial " + arg(lean_nat(f.top)) + " : ℝ)", f.multiplicity));
        break;
      case ht::FactorKind::Poly: {
        Polynomial p = f.poly;
        if (sym::display_form(p, order).terms.front().second < 0) {
          p = -p;
          if (f.multiplicity % 2 != 0) negative = !negative;
        }
        side.push_back(with_power("(" + lean_real(p, order) + " : ℝ)", f.multiplicity));
        break;
      }
      case ht::FactorKind::Power: {
        const std::string base = "(" + lean_real(f.base, order) + " : ℝ)";
        const LinearForm& e = f.exponent;
        bool all_pos = e.constant() >= 0, all_neg = e.constant() <= 0;
        for (const auto& [v, k] : e.coeffs()) {
          all_pos = all_pos && k > 0;
          all_neg = all_neg && k < 0;
        }
        if (all_pos) {
          num.push_back(base + " ^ " + arg(lean_nat(e)));
        } else if (all_neg) {
          den.push_back(base + " ^ " + arg(lean_nat(-e)));
        } else {
          num.push_back(base + " ^ (" + lean_real(e, order) + " : ℤ)");
        }
        break;
      }
    }
  }
  std::string out = num.empty() ? "1" : join(num, " * ");
  if (den.size() == 1) out += " / " + den.front();
  if (den.size() > 1) out += " / (" + join(den, " * ") + ")";
  return negative ? "-" + out : out;
}

std::string lean_constraint(const LinearForm& l) {
  LinearForm lhs, rhs;
  for (const auto& [v, c] : l.coeffs()) {
    if (c > 0) {
      lhs = lhs + LinearForm::var(v, c);
    } else {
      rhs = rhs + LinearForm::var(v, -c);
    }
  }
  if (l.constant() > 0) lhs = lhs + LinearForm(l.constant());
  if (l.constant() < 0) rhs = rhs + LinearForm(-l.constant());
  return lean_nat(lhs) + " ≥ " + lean_nat(rhs);
}

std::string lean_statement(const parse::Identity& id) {
  const VarList order = display_order(id);
  std::string range;
  if (id.lo.is_zero()) {
    range = "Finset.range " + arg(lean_nat(id.hi + LinearForm(1)));
  } else {
    range = "Finset.Icc " + arg(lean_nat(id.lo)) + " " + arg(lean_nat(id.hi));
  }
  return "∑ " + id.sum_var + " ∈ " + range + ", " + lean_term(id.summand, order) + " = " + lean_term(id.rhs, order);
}

std::string lean_binders(const parse::Identity& id) {
  std::string out = "(" + join(id.params, " ") + " : ℕ)";
  for (std::size_t i = 0; i < id.assumptions.size(); ++i)
    out += " (h" + subscript(i) + " : " + lean_constraint(id.assumptions[i]) + ")";
  return out;
}

std::string lean_ident(std::string_view raw) {
  std::string out;
  for (char c : raw) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out.front()))) out = "wz_" + out;
  return out;
}

}  // namespace wz::sketch
