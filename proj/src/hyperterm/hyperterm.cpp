#include "wz/hyperterm/hyperterm.hpp"

#include <algorithm>

#include "wz/symcore/factor.hpp"

namespace wz::ht {

namespace {

using sym::Integer;

// Re-expresses p over its own sorted list of used variables.
Polynomial own(const Polynomial& p) {
  VarList used = p.used_vars();
  std::sort(used.begin(), used.end());
  return p.embed(used);
}

void require_integral(const LinearForm& f, const char* what) {
  if (!f.is_integral()) throw NotHypergeometric(std::string(what) + " argument is not integer-linear: " + f.to_string());
}

int as_int(const Rational& r, const char* what) {
  if (r.get_den() != 1 || !r.get_num().fits_sint_p()) throw NotHypergeometric(std::string("non-integer shift in ") + what);
  return static_cast<int>(r.get_num().get_si());
}

Integer factorial_value(long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Rational binom_value(const Integer& top, const Integer& bottom) {
  if (bottom < 0) return 0;
  if (!bottom.fits_slong_p()) throw DomainError("binomial bottom too large");
  const long b = bottom.get_si();
  Integer num = 1;
  for (long i = 0; i < b; ++i) num *= top - i;
  Rational out(num, factorial_value(b));
  out.canonicalize();
  return out;
}

Rational int_pow(const Rational& base, long e) {
  Rational out = 1;
  Rational b = e < 0 ? Rational(1 / base) : base;
  for (long i = 0; i < std::labs(e); ++i) out *= b;
  return out;
}

RationalFunction rf_const(const VarList& u, const Rational& c) { return RationalFunction::constant(u, c); }

RationalFunction lf_rf(const LinearForm& f, const VarList& u) { return RationalFunction(f.to_polynomial(u)); }

// fact(a + d) / fact(a).
RationalFunction fact_ratio(const LinearForm& a, int d, const VarList& u) {
  Polynomial num = Polynomial::constant(u, 1);
  Polynomial den = Polynomial::constant(u, 1);
  for (int i = 1; i <= d; ++i) num *= (a + LinearForm(i)).to_polynomial(u);
  for (int i = 0; i < -d; ++i) den *= (a - LinearForm(i)).to_polynomial(u);
  return RationalFunction(num, den);
}

RationalFunction falling_rf(const LinearForm& top, long b, const VarList& u) {
  Polynomial num = Polynomial::constant(u, 1);
  for (long i = 0; i < b; ++i) num *= (top - LinearForm(i)).to_polynomial(u);
  return RationalFunction(num, Polynomial::constant(u, Rational(factorial_value(b))));
}

int kind_rank(FactorKind k) { return static_cast<int>(k); }

std::string exponent_text(const LinearForm& e) {
  const bool plain = (e.is_constant() && e.constant() >= 0) ||
                     (e.constant() == 0 && e.coeffs().size() == 1 && e.coeffs().begin()->second == 1);
  return plain ? e.to_string() : "(" + e.to_string() + ")";
}

std::string poly_text(const Polynomial& p) {
  std::string s;
  if (auto lf = LinearForm::from_polynomial(p)) {
    s = lf->to_string();
  } else {
    s = p.to_string({}, true);
  }
  return p.terms().size() > 1 ? "(" + s + ")" : s;
}

// Display orientation for a linear factor: more positive terms, then a positive constant.
bool prefer_negated(const Polynomial& p) {
  auto lf = LinearForm::from_polynomial(p);
  if (!lf) return false;
  int pos = 0, neg = 0;
  for (const auto& [v, c] : lf->coeffs()) (c > 0 ? pos : neg)++;
  if (lf->constant() > 0) ++pos;
  if (lf->constant() < 0) ++neg;
  if (neg != pos) return neg > pos;
  return lf->constant() < 0;
}

}  // namespace

std::string Factor::atom_text() const {
  switch (kind) {
    case FactorKind::Binom:
      return "binom(" + top.to_string() + "," + bottom.to_string() + ")";
    case FactorKind::Factorial:
      return "fact(" + top.to_string() + ")";
    case FactorKind::Power:
      return poly_text(base) + "^" + exponent_text(exponent);
    case FactorKind::Poly:
      return poly_text(poly);
  }
  return {};
}

bool Factor::same_atom(const Factor& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case FactorKind::Binom:
      return top == o.top && bottom == o.bottom;
    case FactorKind::Factorial:
      return top == o.top;
    case FactorKind::Power:
      return base == o.base && exponent == o.exponent;
    case FactorKind::Poly:
      return poly == o.poly;
  }
  return false;
}

HyperTerm HyperTerm::constant(const Rational& c) {
  HyperTerm t;
  t.coeff_ = c;
  t.normalize();
  return t;
}

HyperTerm HyperTerm::binom(const LinearForm& top, const LinearForm& bottom) {
  require_integral(top, "binomial");
  require_integral(bottom, "binomial");
  HyperTerm t;
  Factor f;
  f.kind = FactorKind::Binom;
  f.top = top;
  f.bottom = bottom;
  t.absorb(f);
  t.normalize();
  return t;
}

HyperTerm HyperTerm::factorial(const LinearForm& arg) {
  require_integral(arg, "factorial");
  HyperTerm t;
  Factor f;
  f.kind = FactorKind::Factorial;
  f.top = arg;
  t.absorb(f);
  t.normalize();
  return t;
}

HyperTerm HyperTerm::sign(const LinearForm& exponent) {
  require_integral(exponent, "sign exponent");
  HyperTerm t;
  t.sign_ = exponent;
  t.normalize();
  return t;
}

HyperTerm HyperTerm::power(const Polynomial& base, const LinearForm& exponent) {
  require_integral(exponent, "power exponent");
  if (base.is_zero()) throw DomainError("zero base of a symbolic power");
  HyperTerm t;
  auto add_const = [&](const Rational& c, const LinearForm& e) {
    if (c < 0) t.sign_ = t.sign_ + e;
    const Rational a = abs(c);
    if (a.get_num() != 1) {
      Factor f;
      f.kind = FactorKind::Power;
      f.base = Polynomial::constant({}, Rational(a.get_num()));
      f.exponent = e;
      t.absorb(f);
    }
    if (a.get_den() != 1) {
      Factor f;
      f.kind = FactorKind::Power;
      f.base = Polynomial::constant({}, Rational(a.get_den()));
      f.exponent = -e;
      t.absorb(f);
    }
  };
  if (base.is_constant()) {
    add_const(base.constant_value(), exponent);
  } else {
    const sym::Factorization fz = sym::factor_lite(base);
    add_const(fz.unit, exponent);
    for (const auto& pf : fz.factors) {
      Rational s;
      Factor f;
      f.kind = FactorKind::Power;
      f.base = own(pf.poly).primitive_integer(&s);
      f.exponent = exponent.scaled(pf.multiplicity);
      add_const(s, f.exponent);
      t.absorb(f);
    }
  }
  t.normalize();
  return t;
}

HyperTerm HyperTerm::polynomial(const Polynomial& p) {
  if (p.is_zero()) return constant(0);
  HyperTerm t;
  if (p.is_constant()) return constant(p.constant_value());
  const sym::Factorization fz = sym::factor_lite(p);
  t.coeff_ = fz.unit;
  for (const auto& pf : fz.factors) {
    Rational s;
    Factor f;
    f.kind = FactorKind::Poly;
    f.poly = own(pf.poly).primitive_integer(&s);
    f.multiplicity = pf.multiplicity;
    t.coeff_ *= int_pow(s, pf.multiplicity);
    t.absorb(f);
  }
  t.normalize();
  return t;
}

void HyperTerm::absorb(Factor f) {
  if (f.kind == FactorKind::Power) {
    if (f.exponent.is_zero()) return;
    if (f.exponent.is_constant()) {
      const long e = f.exponent.constant().get_num().get_si() * f.multiplicity;
      if (f.base.is_constant()) {
        coeff_ *= int_pow(f.base.constant_value(), e);
        return;
      }
      f.kind = FactorKind::Poly;
      f.poly = f.base;
      f.multiplicity = static_cast<int>(e);
      f.base = Polynomial();
      f.exponent = LinearForm();
    } else if (f.multiplicity != 1) {
      f.exponent = f.exponent.scaled(f.multiplicity);
      f.multiplicity = 1;
    }
  }
  for (auto& g : factors_) {
    if (f.kind == FactorKind::Power && g.kind == FactorKind::Power && g.base == f.base) {
      g.exponent = g.exponent + f.exponent;
      return;
    }
    if (f.kind != FactorKind::Power && g.same_atom(f)) {
      g.multiplicity += f.multiplicity;
      return;
    }
  }
  factors_.push_back(std::move(f));
}

void HyperTerm::normalize() {
  if (coeff_ == 0) {
    factors_.clear();
    sign_ = LinearForm();
    return;
  }
  std::vector<Factor> kept;
  for (auto& f : factors_) {
    if (f.kind == FactorKind::Power) {
      if (f.exponent.is_zero()) continue;
      if (f.exponent.is_constant()) {
        // Exponents can cancel down to constants after coalescing.
        HyperTerm tmp;
        tmp.absorb(f);
        coeff_ *= tmp.coeff_;
        for (auto& g : tmp.factors_) kept.push_back(g);
        continue;
      }
    } else if (f.multiplicity == 0) {
      continue;
    }
    kept.push_back(f);
  }
  factors_.clear();
  for (auto& f : kept) absorb(f);
  std::erase_if(factors_, [](const Factor& f) {
    return f.kind == FactorKind::Power ? f.exponent.is_zero() : f.multiplicity == 0;
  });
  std::sort(factors_.begin(), factors_.end(), [](const Factor& a, const Factor& b) {
    if (a.kind != b.kind) return kind_rank(a.kind) < kind_rank(b.kind);
    return a.atom_text() < b.atom_text();
  });
  // (-1)^e only depends on e modulo 2.
  LinearForm s;
  for (const auto& [v, c] : sign_.coeffs()) {
    Integer r = c.get_num() % 2;
    if (r < 0) r += 2;
    if (r != 0) s = s + LinearForm::var(v);
  }
  Integer r0 = sign_.constant().get_num() % 2;
  if (r0 < 0) r0 += 2;
  if (r0 != 0) s = s + LinearForm(1);
  sign_ = s;
}

VarList HyperTerm::vars() const {
  std::vector<std::string> out = sign_.vars();
  for (const auto& f : factors_) {
    VarList vs;
    switch (f.kind) {
      case FactorKind::Binom:
        vs = f.top.vars();
        for (const auto& v : f.bottom.vars()) vs.push_back(v);
        break;
      case FactorKind::Factorial:
        vs = f.top.vars();
        break;
      case FactorKind::Power:
        vs = f.exponent.vars();
        for (const auto& v : f.base.used_vars()) vs.push_back(v);
        break;
      case FactorKind::Poly:
        vs = f.poly.used_vars();
        break;
    }
    out.insert(out.end(), vs.begin(), vs.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool HyperTerm::involves(std::string_view var) const {
  const VarList vs = vars();
  return std::find(vs.begin(), vs.end(), var) != vs.end();
}

HyperTerm HyperTerm::operator*(const HyperTerm& o) const {
  HyperTerm t = *this;
  t.coeff_ *= o.coeff_;
  t.sign_ = t.sign_ + o.sign_;
  for (const auto& f : o.factors_) t.absorb(f);
  t.normalize();
  return t;
}

HyperTerm HyperTerm::pow(int e) const {
  if (e < 0 && is_zero()) throw DivisionByZero("reciprocal of the zero term");
  HyperTerm t;
  t.coeff_ = int_pow(coeff_, e);
  t.sign_ = sign_.scaled(e);
  for (auto f : factors_) {
    if (f.kind == FactorKind::Power) {
      f.exponent = f.exponent.scaled(e);
    } else {
      f.multiplicity *= e;
    }
    t.absorb(f);
  }
  t.normalize();
  return t;
}

HyperTerm HyperTerm::operator/(const HyperTerm& o) const { return *this * o.pow(-1); }

HyperTerm HyperTerm::scaled(const Rational& c) const {
  HyperTerm t = *this;
  t.coeff_ *= c;
  t.normalize();
  return t;
}

bool HyperTerm::operator==(const HyperTerm& o) const {
  return coeff_ == o.coeff_ && sign_ == o.sign_ && factors_ == o.factors_;
}

HyperTerm HyperTerm::substitute(std::string_view var, const LinearForm& value) const {
  HyperTerm t = constant(coeff_);
  t = t * sign(sign_.substitute(var, value));
  for (const auto& f : factors_) {
    HyperTerm g;
    switch (f.kind) {
      case FactorKind::Binom:
        g = binom(f.top.substitute(var, value), f.bottom.substitute(var, value)).pow(f.multiplicity);
        break;
      case FactorKind::Factorial:
        g = factorial(f.top.substitute(var, value)).pow(f.multiplicity);
        break;
      case FactorKind::Power: {
        Polynomial b = f.base;
        if (b.var_index(var)) {
          const VarList u = sym::merge_vars(b.vars(), value.vars());
          b = b.embed(u).substitute(b.embed(u).require_var(var), value.to_polynomial(u));
        }
        g = power(b, f.exponent.substitute(var, value));
        break;
      }
      case FactorKind::Poly: {
        Polynomial p = f.poly;
        if (p.var_index(var)) {
          const VarList u = sym::merge_vars(p.vars(), value.vars());
          p = p.embed(u).substitute(p.embed(u).require_var(var), value.to_polynomial(u));
        }
        g = polynomial(p).pow(f.multiplicity);
        break;
      }
    }
    t = t * g;
  }
  return t;
}

RationalFunction HyperTerm::shift_ratio(std::string_view var, int offset, const VarList& u) const {
  for (const auto& v : vars()) {
    if (std::find(u.begin(), u.end(), v) == u.end()) throw VariableMismatch("variable '" + v + "' missing from universe");
  }
  RationalFunction r = rf_const(u, 1);
  const int sgn = as_int(sign_.coefficient(var) * offset, "sign");
  if (sgn % 2 != 0) r = -r;
  for (const auto& f : factors_) {
    RationalFunction piece = rf_const(u, 1);
    switch (f.kind) {
      case FactorKind::Factorial:
        piece = fact_ratio(f.top, as_int(f.top.coefficient(var) * offset, "factorial"), u);
        break;
      case FactorKind::Binom: {
        const LinearForm diff = f.top - f.bottom;
        piece = fact_ratio(f.top, as_int(f.top.coefficient(var) * offset, "binomial"), u) /
                (fact_ratio(f.bottom, as_int(f.bottom.coefficient(var) * offset, "binomial"), u) *
                 fact_ratio(diff, as_int(diff.coefficient(var) * offset, "binomial"), u));
        break;
      }
      case FactorKind::Power: {
        const int e = as_int(f.exponent.coefficient(var) * offset, "power");
        piece = RationalFunction(f.base.embed(u)).pow(e);
        break;
      }
      case FactorKind::Poly: {
        const Polynomial p = f.poly.embed(u);
        if (auto idx = p.var_index(var); idx && p.involves(*idx)) {
          piece = RationalFunction(p.shift(*idx, offset), p).pow(f.multiplicity);
        }
        break;
      }
    }
    if (f.kind != FactorKind::Power && f.kind != FactorKind::Poly) piece = piece.pow(f.multiplicity);
    r = r * piece;
  }
  return r;
}

Rational HyperTerm::evaluate(const Assignment& point) const {
  if (coeff_ == 0) return 0;
  Rational out = coeff_;
  const Rational s = sign_.evaluate(point);
  if (s.get_den() != 1) throw DomainError("non-integer sign exponent");
  if (s.get_num() % 2 != 0) out = -out;
  auto poly_value = [&](const Polynomial& p) {
    std::vector<Rational> values;
    for (const auto& v : p.vars()) {
      auto it = point.find(v);
      if (it == point.end()) throw Error("evaluation point does not assign '" + v + "'");
      values.push_back(it->second);
    }
    return p.evaluate(values);
  };
  for (const auto& f : factors_) {
    Rational v;
    long e = f.multiplicity;
    switch (f.kind) {
      case FactorKind::Binom: {
        const Rational t = f.top.evaluate(point), b = f.bottom.evaluate(point);
        if (t.get_den() != 1 || b.get_den() != 1) throw DomainError("non-integer binomial argument");
        v = binom_value(t.get_num(), b.get_num());
        break;
      }
      case FactorKind::Factorial: {
        const Rational a = f.top.evaluate(point);
        if (a.get_den() != 1 || a < 0) throw DomainError("factorial of " + a.get_str());
        v = Rational(factorial_value(a.get_num().get_si()));
        break;
      }
      case FactorKind::Power: {
        const Rational x = f.exponent.evaluate(point);
        v = poly_value(f.base);
        e = x.get_num().get_si();
        break;
      }
      case FactorKind::Poly:
        v = poly_value(f.poly);
        break;
    }
    if (v == 0) {
      if (e < 0) throw PoleError("reciprocal factor " + f.atom_text() + " vanishes");
      return 0;
    }
    out *= int_pow(v, e);
  }
  return out;
}

std::optional<RationalFunction> HyperTerm::evaluate_partial(const Assignment& point, const VarList& u) const {
  RationalFunction r = rf_const(u, coeff_);
  if (coeff_ == 0) return r;
  const LinearForm s = sign_.partial(point);
  if (!s.is_constant()) return std::nullopt;
  if (s.constant().get_num() % 2 != 0) r = -r;
  auto fixed_poly = [&](const Polynomial& p) {
    Polynomial q = p.embed(sym::merge_vars(u, p.vars()));
    for (const auto& [name, value] : point) {
      if (auto idx = q.var_index(name)) q = q.evaluate_var(*idx, value);
    }
    return q.embed(u);
  };
  for (const auto& f : factors_) {
    RationalFunction v = rf_const(u, 1);
    int e = f.multiplicity;
    switch (f.kind) {
      case FactorKind::Binom: {
        const LinearForm t = f.top.partial(point), b = f.bottom.partial(point);
        const LinearForm d = t - b;
        if (b.is_constant()) {
          const long bv = b.constant().get_num().get_si();
          v = bv < 0 ? rf_const(u, 0) : falling_rf(t, bv, u);
        } else if (d.is_constant() && d.constant() >= 0) {
          v = falling_rf(t, d.constant().get_num().get_si(), u);
        } else {
          return std::nullopt;
        }
        break;
      }
      case FactorKind::Factorial: {
        const LinearForm a = f.top.partial(point);
        if (!a.is_constant()) return std::nullopt;
        if (a.constant() < 0) throw DomainError("factorial of " + a.constant().get_str());
        v = rf_const(u, Rational(factorial_value(a.constant().get_num().get_si())));
        break;
      }
      case FactorKind::Power: {
        const LinearForm x = f.exponent.partial(point);
        if (!x.is_constant()) return std::nullopt;
        v = RationalFunction(fixed_poly(f.base));
        e = static_cast<int>(x.constant().get_num().get_si());
        break;
      }
      case FactorKind::Poly:
        v = RationalFunction(fixed_poly(f.poly));
        break;
    }
    if (v.is_zero()) {
      if (e < 0) throw PoleError("reciprocal factor " + f.atom_text() + " vanishes");
      return rf_const(u, 0);
    }
    r = r * v.pow(e);
  }
  return r;
}

std::string HyperTerm::to_string() const {
  if (coeff_ == 0) return "0";
  bool negative = coeff_ < 0;
  std::vector<std::string> num, den;
  const Integer cn = abs(coeff_.get_num());
  if (cn != 1) num.push_back(cn.get_str());
  if (coeff_.get_den() != 1) den.push_back(coeff_.get_den().get_str());
  if (!sign_.is_zero()) num.insert(num.begin(), "(-1)^" + exponent_text(sign_));
  for (const auto& f : factors_) {
    if (f.kind == FactorKind::Power) {
      bool all_neg = f.exponent.constant() <= 0;
      for (const auto& [v, c] : f.exponent.coeffs()) all_neg = all_neg && c < 0;
      if (all_neg) {
        Factor g = f;
        g.exponent = -f.exponent;
        den.push_back(g.atom_text());
      } else {
        num.push_back(f.atom_text());
      }
      continue;
    }
    Factor g = f;
    if (f.kind == FactorKind::Poly && prefer_negated(f.poly)) {
      g.poly = -f.poly;
      if (f.multiplicity % 2 != 0) negative = !negative;
    }
    std::string text = g.atom_text();
    const int m = std::abs(f.multiplicity);
    if (m > 1) text += "^" + std::to_string(m);
    (f.multiplicity > 0 ? num : den).push_back(text);
  }
  auto join = [](const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " * " : "") + parts[i];
    return out;
  };
  std::string out = negative ? "-" : "";
  out += num.empty() ? "1" : join(num);
  if (!den.empty()) out += " / " + (den.size() > 1 ? "(" + join(den) + ")" : den.front());
  return out;
}

}  // namespace wz::ht
