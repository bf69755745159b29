#include "wz/hyperterm/hyperterm.hpp"
#include "wz/symcore/factor.hpp"

namespace wz::ht {

namespace {

struct Range {
  std::string_view var;
  const LinearForm& lo;
  const LinearForm& hi;
  const Facts& assumptions;
  Facts in_range;
};

// Reports where an integer-valued linear quantity q can become negative.
void check_nonneg(const Range& r, const LinearForm& q, SupportIssue::Kind kind, const std::string& factor,
                  std::vector<SupportIssue>& out) {
  if (r.in_range.proves_nonneg(q)) return;
  SupportIssue issue;
  issue.kind = kind;
  issue.factor = factor;
  issue.quantity = q;
  const Rational c = q.coefficient(r.var);
  if (c == 1 || c == -1) {
    // q = c*var + rest is -1 at var = -(rest + 1)/c, the first bad index.
    const LinearForm rest = q - LinearForm::var(r.var, c);
    const LinearForm at = (rest + LinearForm(1)).scaled(-1 / c);
    const bool outside = c == 1 ? r.assumptions.proves_positive(r.lo - at) : r.assumptions.proves_positive(at - r.hi);
    if (outside) return;
    issue.at = at;
    issue.certain = r.assumptions.proves_between(at, r.lo, r.hi);
  }
  out.push_back(issue);
}

void check_poly_zero(const Range& r, const Polynomial& p, SupportIssue::Kind kind, const std::string& factor,
                     std::vector<SupportIssue>& out) {
  const auto idx = p.var_index(r.var);
  if (!idx || !p.involves(*idx)) {
    auto lf = LinearForm::from_polynomial(p);
    if (lf && r.assumptions.proves_nonzero(*lf)) return;
    SupportIssue issue;
    issue.kind = lf ? kind : SupportIssue::Kind::Unresolved;
    issue.factor = factor;
    if (lf) issue.quantity = *lf;
    out.push_back(issue);
    return;
  }
  for (const auto& root : sym::poly_integer_roots(p, r.var)) {
    SupportIssue issue;
    issue.kind = kind;
    issue.factor = factor;
    if (auto lf = LinearForm::from_polynomial(root.factor)) issue.quantity = *lf;
    switch (root.kind) {
      case sym::RootDesc::Kind::Integer:
        issue.at = LinearForm(Rational(root.value));
        break;
      case sym::RootDesc::Kind::Affine: {
        auto num = LinearForm::from_polynomial(root.numerator);
        if (!num) {
          issue.kind = SupportIssue::Kind::Unresolved;
          break;
        }
        issue.at = *num;
        issue.divisor = root.divisor;
        break;
      }
      case sym::RootDesc::Kind::Unresolved:
        issue.kind = SupportIssue::Kind::Unresolved;
        break;
    }
    if (issue.at) {
      const LinearForm point = issue.at->scaled(Rational(1) / Rational(issue.divisor));
      if (r.assumptions.proves_outside(point, r.lo, r.hi)) continue;
      issue.certain = issue.divisor == 1 && r.assumptions.proves_between(point, r.lo, r.hi);
    }
    out.push_back(issue);
  }
}

}  // namespace

std::vector<SupportIssue> term_support(const HyperTerm& t, std::string_view var, const LinearForm& lo,
                                       const LinearForm& hi, const Facts& assumptions) {
  Range r{var, lo, hi, assumptions, assumptions};
  r.in_range.add(LinearForm::var(var) - lo);
  r.in_range.add(hi - LinearForm::var(var));
  std::vector<SupportIssue> out;
  for (const auto& f : t.factors()) {
    const std::string text = f.atom_text();
    switch (f.kind) {
      case FactorKind::Binom: {
        const auto kind = f.multiplicity > 0 ? SupportIssue::Kind::Vanishing : SupportIssue::Kind::Pole;
        check_nonneg(r, f.bottom, kind, text, out);
        check_nonneg(r, f.top - f.bottom, kind, text, out);
        break;
      }
      case FactorKind::Factorial:
        check_nonneg(r, f.top, SupportIssue::Kind::NegativeFactorial, text, out);
        break;
      case FactorKind::Power:
        if (!f.base.is_constant()) check_poly_zero(r, f.base, SupportIssue::Kind::Pole, text, out);
        break;
      case FactorKind::Poly:
        check_poly_zero(r, f.poly, f.multiplicity < 0 ? SupportIssue::Kind::Pole : SupportIssue::Kind::Vanishing,
                        text, out);
        break;
    }
  }
  return out;
}

}  // namespace wz::ht
