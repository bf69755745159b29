#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wz/symcore/linear_form.hpp"
#include "wz/symcore/rational_function.hpp"

namespace wz::ht {

using sym::Assignment;
using sym::Facts;
using sym::LinearForm;
using sym::Polynomial;
using sym::Rational;
using sym::RationalFunction;
using sym::VarList;

enum class FactorKind { Binom, Factorial, Power, Poly };

/// One atomic factor raised to an integer multiplicity.
///
/// Binom uses (top, bottom); Factorial uses top; Power uses (base, exponent)
/// with a base free of summation/main variables and multiplicity 1; Poly
/// holds a primitive integer polynomial over its own sorted variable list.
struct Factor {
  FactorKind kind = FactorKind::Poly;
  LinearForm top;
  LinearForm bottom;
  Polynomial base;
  LinearForm exponent;
  Polynomial poly;
  int multiplicity = 1;

  /// Atom text without multiplicity, e.g. "binom(n,k)", "(k+m)", "2^n".
  std::string atom_text() const;
  bool same_atom(const Factor& o) const;
  bool operator==(const Factor& o) const { return same_atom(o) && multiplicity == o.multiplicity; }
};

/// coefficient * (-1)^sign * prod(factors). Factors are kept sorted and
/// coalesced, so equal products built in any order compare equal.
class HyperTerm {
 public:
  HyperTerm() = default;
  static HyperTerm constant(const Rational& c);
  static HyperTerm binom(const LinearForm& top, const LinearForm& bottom);
  static HyperTerm factorial(const LinearForm& arg);
  /// base^exponent; base must not involve variables listed in `forbidden`.
  static HyperTerm power(const Polynomial& base, const LinearForm& exponent);
  static HyperTerm polynomial(const Polynomial& p);
  static HyperTerm sign(const LinearForm& exponent);

  const Rational& coefficient() const { return coeff_; }
  const LinearForm& sign_exponent() const { return sign_; }
  const std::vector<Factor>& factors() const { return factors_; }
  bool is_zero() const { return coeff_ == 0; }
  bool is_constant() const { return factors_.empty() && sign_.is_constant(); }
  VarList vars() const;
  bool involves(std::string_view var) const;

  HyperTerm operator*(const HyperTerm& o) const;
  HyperTerm operator/(const HyperTerm& o) const;
  HyperTerm pow(int e) const;
  HyperTerm scaled(const Rational& c) const;
  bool operator==(const HyperTerm& o) const;
  bool operator!=(const HyperTerm& o) const { return !(*this == o); }

  HyperTerm substitute(std::string_view var, const LinearForm& value) const;
  HyperTerm shift(std::string_view var, const Rational& offset) const { return substitute(var, LinearForm::var(var) + LinearForm(offset)); }

  /// t(var + offset) / t as a canonical rational function over `universe`.
  RationalFunction shift_ratio(std::string_view var, int offset, const VarList& universe) const;
  RationalFunction ratio_shift(std::string_view var, const VarList& universe) const { return shift_ratio(var, 1, universe); }

  /// Exact value. Binomials with negative bottom are 0; falling products
  /// extend them to any integer top. Negative factorial arguments raise
  /// DomainError, zero reciprocal factors raise PoleError.
  Rational evaluate(const Assignment& point) const;
  /// Value with only some variables fixed, as a rational function over
  /// `universe`; nullopt if a factor cannot be expanded symbolically.
  std::optional<RationalFunction> evaluate_partial(const Assignment& point, const VarList& universe) const;

  /// Canonical text, e.g. "(-1)^k * m * binom(n,k) / (k+m)".
  std::string to_string() const;

 private:
  void absorb(Factor f);
  void normalize();

  Rational coeff_{1};
  LinearForm sign_;
  std::vector<Factor> factors_;
};

struct SupportIssue {
  enum class Kind { Vanishing, NegativeFactorial, Pole, Unresolved };
  Kind kind = Kind::Unresolved;
  std::string factor;              // atom text of the offending factor
  LinearForm quantity;             // the expression that must stay >= 0 or != 0
  std::optional<LinearForm> at;    // index value where the problem occurs, if known
  sym::Integer divisor{1};         // > 1: index value is at / divisor (parity-type root)
  bool certain = false;            // the point provably lies inside the range
};

/// Places in var in [lo, hi] where factors vanish or are undefined, under the
/// given facts about parameters.
std::vector<SupportIssue> term_support(const HyperTerm& t, std::string_view var, const LinearForm& lo,
                                       const LinearForm& hi, const Facts& assumptions);

}  // namespace wz::ht
