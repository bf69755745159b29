#include "wz/symcore/rational_function.hpp"

namespace wz::sym {

RationalFunction::RationalFunction(const Polynomial& p)
    : num_(p), den_(Polynomial::constant(p.vars(), 1).embed(p.shared_vars())) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (!num.same_vars(den)) throw VariableMismatch("variable-list mismatch in rational function");
  if (den.is_zero()) throw DivisionByZero("zero denominator");
  if (num.is_zero()) {
    num_ = num;
    den_ = Polynomial::constant(den.vars(), 1).embed(den.shared_vars());
    return;
  }
  const Polynomial g = gcd(num, den);
  Polynomial n = num / g;
  Polynomial d = den / g;
  const Rational lc = d.leading_coefficient();
  num_ = n.scaled(1 / lc);
  den_ = d.scaled(1 / lc);
}

RationalFunction RationalFunction::constant(const VarList& vars, const Rational& c) {
  return RationalFunction(Polynomial::constant(vars, c));
}

RationalFunction RationalFunction::constant_like(const Polynomial& shape, const Rational& c) {
  return RationalFunction(Polynomial::constant(shape.vars(), c).embed(shape.shared_vars()));
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw Error("rational function is not constant");
  return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return RationalFunction(num_ * o.num_, den_);
  // Cross-cancel before multiplying to keep intermediate sizes small.
  const Polynomial g1 = gcd(num_, o.den_);
  const Polynomial g2 = gcd(o.num_, den_);
  return RationalFunction((num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw DivisionByZero("division by the zero rational function");
  return *this * o.inverse();
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  // Powers of coprime polynomials stay coprime; only the sign/scale needs fixing.
  const Rational lc = r.den_.leading_coefficient();
  r.num_ = r.num_.scaled(1 / lc);
  r.den_ = r.den_.scaled(1 / lc);
  return r;
}

RationalFunction RationalFunction::shift(std::string_view var, const Rational& offset) const {
  const std::size_t idx = num_.require_var(var);
  return RationalFunction(num_.shift(idx, offset), den_.shift(idx, offset));
}

RationalFunction RationalFunction::substitute(std::string_view var, const Polynomial& value) const {
  const std::size_t idx = num_.require_var(var);
  return RationalFunction(num_.substitute(idx, value), den_.substitute(idx, value));
}

RationalFunction RationalFunction::evaluate_var(std::string_view var, const Rational& value) const {
  const std::size_t idx = num_.require_var(var);
  Polynomial d = den_.evaluate_var(idx, value);
  if (d.is_zero()) throw PoleError("denominator vanishes at " + std::string(var) + " = " + value.get_str());
  return RationalFunction(num_.evaluate_var(idx, value), d);
}

Rational RationalFunction::evaluate(const Assignment& point) const {
  std::vector<Rational> values;
  values.reserve(num_.num_vars());
  for (const auto& v : num_.vars()) {
    auto it = point.find(v);
    if (it == point.end()) throw Error("evaluation point does not assign '" + v + "'");
    values.push_back(it->second);
  }
  const Rational d = den_.evaluate(values);
  if (d == 0) throw PoleError("denominator vanishes at the evaluation point");
  return num_.evaluate(values) / d;
}

RationalFunction RationalFunction::embed(const VarList& target) const {
  auto shared = std::make_shared<const VarList>(target);
  RationalFunction r;
  r.num_ = num_.embed(shared);
  r.den_ = den_.embed(shared);
  // Leading coefficient may move under the new variable order.
  const Rational lc = r.den_.leading_coefficient();
  r.num_ = r.num_.scaled(1 / lc);
  r.den_ = r.den_.scaled(1 / lc);
  return r;
}

std::string RationalFunction::to_string(std::span<const std::string> order) const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string(order);
  return "(" + num_.to_string(order) + ")/(" + den_.to_string(order) + ")";
}

Polynomial to_common_vars(const Polynomial& p, const VarList& vars) { return p.embed(vars); }

}  // namespace wz::sym
