#pragma once

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wz/errors.hpp"

namespace wz::sym {

using Rational = mpq_class;
using Integer = mpz_class;
using VarList = std::vector<std::string>;
using Exponents = std::vector<int>;

/// Renders an exact rational as "p" or "p/q".
std::string to_string(const Rational& q);

/// Sparse multivariate polynomial over Q.
///
/// Terms are keyed by exponent vectors (one entry per variable in `vars()`),
/// no stored coefficient is zero, and the zero polynomial has no terms.
/// The variable list order is significant: it fixes the graded-lex order
/// used for leading terms and the recursion order of `gcd`.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational>;

  Polynomial();
  explicit Polynomial(VarList vars);
  Polynomial(std::shared_ptr<const VarList> vars, TermMap terms);

  static Polynomial constant(VarList vars, const Rational& c);
  static Polynomial variable(VarList vars, std::string_view name);

  const VarList& vars() const { return *vars_; }
  const std::shared_ptr<const VarList>& shared_vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_vars() const { return vars_->size(); }
  std::optional<std::size_t> var_index(std::string_view name) const;
  std::size_t require_var(std::string_view name) const;
  bool same_vars(const Polynomial& other) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;
  bool involves(std::size_t var) const { return degree(var) > 0; }

  int degree(std::size_t var) const;
  int total_degree() const;
  /// Coefficient of var^d as a polynomial over the same variable list
  /// (with var's exponent removed).
  Polynomial coeff(std::size_t var, int d) const;
  Polynomial leading_coeff(std::size_t var) const;

  /// Leading monomial and coefficient under graded-lex with the variable order.
  Exponents leading_monomial() const;
  Rational leading_coefficient() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned e) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial derivative(std::size_t var) const;
  /// Substitutes `value` for variable `var`; `value` must share the variable list.
  Polynomial substitute(std::size_t var, const Polynomial& value) const;
  Polynomial shift(std::size_t var, const Rational& offset) const;
  Polynomial evaluate_var(std::size_t var, const Rational& value) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Re-expresses the polynomial over `target`, which must contain every
  /// variable the polynomial actually uses.
  Polynomial embed(const VarList& target) const;
  Polynomial embed(const std::shared_ptr<const VarList>& target) const;
  /// Variables with nonzero degree, in variable-list order.
  VarList used_vars() const;

  /// Exact quotient if `d` divides this polynomial, otherwise nullopt.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;
  /// Quotient that is known to be exact; throws on a nonzero remainder.
  Polynomial operator/(const Polynomial& d) const;

  /// Scales to integer coefficients with gcd 1 and a positive leading
  /// coefficient; returns the scale factor s with *this = s * result.
  Polynomial primitive_integer(Rational* scale = nullptr) const;
  Polynomial monic() const;

  /// Rendering with terms in descending graded-lex order of `order`
  /// (variables absent from `order` come after it, alphabetically).
  std::string to_string(std::span<const std::string> order = {}, bool compact = false) const;

 private:
  void check_same_vars(const Polynomial& o, const char* op) const;
  Polynomial::TermMap::const_iterator leading_term() const;

  std::shared_ptr<const VarList> vars_;
  TermMap terms_;
};

/// Pseudo-remainder of a by b with respect to var.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var);
/// Content of p viewed as a polynomial in var (a polynomial free of var).
Polynomial content(const Polynomial& p, std::size_t var);
Polynomial primitive_part(const Polynomial& p, std::size_t var);
/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Resultant with respect to var, computed as a fraction-free Sylvester determinant.
Polynomial resultant(const Polynomial& a, const Polynomial& b, std::size_t var);

/// Terms reordered for display: variables in `order` first, the remaining
/// ones alphabetically; terms sorted by descending graded-lex on that order.
struct DisplayForm {
  VarList names;
  std::vector<std::pair<Exponents, Rational>> terms;
};
DisplayForm display_form(const Polynomial& p, std::span<const std::string> order);
bool display_key_less(const Exponents& a, const Exponents& b);
/// "n^2*k"; empty for the unit monomial.
std::string render_monomial(const VarList& names, const Exponents& key);

/// Union of variable lists, preserving the order of `a` then new names of `b`.
VarList merge_vars(const VarList& a, const VarList& b);

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace wz::sym
