#pragma once

#include <map>
#include <ostream>
#include <string>

#include "wz/symcore/polynomial.hpp"

namespace wz::sym {

using Assignment = std::map<std::string, Rational, std::less<>>;

/// Quotient of polynomials in canonical form: num and den coprime, den
/// nonzero with leading coefficient 1 under graded-lex order. Equal rational
/// functions therefore compare structurally equal.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(const Polynomial& p);
  /// Canonicalizes num/den; throws DivisionByZero for a zero denominator.
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction constant(const VarList& vars, const Rational& c);
  static RationalFunction constant_like(const Polynomial& shape, const Rational& c);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const VarList& vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  Rational constant_value() const;

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction pow(int e) const;
  RationalFunction inverse() const;
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  /// Substitutes var -> var + offset.
  RationalFunction shift(std::string_view var, const Rational& offset) const;
  /// Substitutes a polynomial (over the same variable list) for var.
  RationalFunction substitute(std::string_view var, const Polynomial& value) const;
  RationalFunction evaluate_var(std::string_view var, const Rational& value) const;
  /// Exact value at a point covering every variable; throws PoleError when
  /// the denominator vanishes there.
  Rational evaluate(const Assignment& point) const;
  RationalFunction embed(const VarList& target) const;

  /// Expanded rendering "num/den" (or just "num").
  std::string to_string(std::span<const std::string> order = {}) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

Polynomial to_common_vars(const Polynomial& p, const VarList& vars);

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& p) { return os << p.to_string(); }

}  // namespace wz::sym
