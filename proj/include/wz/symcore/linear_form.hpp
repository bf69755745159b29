#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wz/symcore/rational_function.hpp"

namespace wz::sym {

/// c0 + sum c_v * v with rational coefficients; zero coefficients are not stored.
class LinearForm {
 public:
  using Coeffs = std::map<std::string, Rational, std::less<>>;

  LinearForm() = default;
  explicit LinearForm(const Rational& c) : constant_(c) {}
  static LinearForm var(std::string_view name, const Rational& c = 1);
  /// nullopt unless p has total degree at most 1.
  static std::optional<LinearForm> from_polynomial(const Polynomial& p);

  const Coeffs& coeffs() const { return coeffs_; }
  const Rational& constant() const { return constant_; }
  Rational coefficient(std::string_view name) const;
  bool involves(std::string_view name) const { return coeffs_.count(name) > 0; }
  bool is_constant() const { return coeffs_.empty(); }
  bool is_zero() const { return coeffs_.empty() && constant_ == 0; }
  /// All coefficients and the constant are integers.
  bool is_integral() const;
  VarList vars() const;

  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator-(const LinearForm& o) const;
  LinearForm operator-() const { return scaled(-1); }
  LinearForm scaled(const Rational& c) const;
  bool operator==(const LinearForm& o) const { return coeffs_ == o.coeffs_ && constant_ == o.constant_; }
  bool operator!=(const LinearForm& o) const { return !(*this == o); }
  bool operator<(const LinearForm& o) const;

  LinearForm substitute(std::string_view name, const LinearForm& value) const;
  LinearForm shift(std::string_view name, const Rational& offset) const;
  /// Assigns the listed variables; others stay symbolic.
  LinearForm partial(const Assignment& point) const;
  Rational evaluate(const Assignment& point) const;
  Polynomial to_polynomial(const VarList& vars) const;

  /// Compact text: positive terms first, each group alphabetical, constant last ("n-k+1", "m+n", "2*n").
  std::string to_string() const;

 private:
  void add(std::string_view name, const Rational& c);

  Coeffs coeffs_;
  Rational constant_;
};

/// Linear facts L >= 0 about natural-number variables (every variable is
/// implicitly >= 0). Proofs are sound but incomplete: a form is accepted if
/// it dominates a nonnegative combination of at most two facts.
class Facts {
 public:
  Facts() = default;
  explicit Facts(std::vector<LinearForm> nonneg) : facts_(std::move(nonneg)) {}
  void add(const LinearForm& f) { facts_.push_back(f); }
  const std::vector<LinearForm>& facts() const { return facts_; }

  bool proves_nonneg(const LinearForm& l) const;
  bool proves_positive(const LinearForm& l) const;
  bool proves_negative(const LinearForm& l) const { return proves_positive(-l); }
  bool proves_nonzero(const LinearForm& l) const { return proves_positive(l) || proves_negative(l); }
  /// lo <= x <= hi is provable.
  bool proves_between(const LinearForm& x, const LinearForm& lo, const LinearForm& hi) const;
  /// x < lo or x > hi is provable.
  bool proves_outside(const LinearForm& x, const LinearForm& lo, const LinearForm& hi) const;

 private:
  std::vector<LinearForm> facts_;
};

}  // namespace wz::sym
