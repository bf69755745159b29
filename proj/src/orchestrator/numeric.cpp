#include "wz/orchestrator/numeric.hpp"

namespace wz::orch {

namespace {

bool admissible(const parse::Identity& id, const Assignment& point) {
  for (const auto& a : id.assumptions)
    if (a.evaluate(point) < 0) return false;
  if (id.case_tag == parse::CaseTag::None) return true;
  const Rational n = point.at(id.main_var());
  const bool even = n.get_num() % 2 == 0;
  return id.case_tag == parse::CaseTag::Even ? even : !even;
}

NumericPoint check_point(const parse::Identity& id, int n, const Assignment& point, const NumericOptions& opts) {
  NumericPoint p;
  p.n = n;
  p.params = point;
  try {
    const Rational lo = id.lo.evaluate(point), hi = id.hi.evaluate(point);
    if (lo.get_den() != 1 || hi.get_den() != 1) throw DomainError("non-integer summation bound");
    Rational lhs = 0;
    Assignment at = point;
    for (mpz_class k = lo.get_num(); k <= hi.get_num(); ++k) {
      at[id.sum_var] = Rational(k);
      lhs += id.summand.evaluate(at);
    }
    p.lhs = lhs;
    p.rhs = id.rhs.evaluate(point) + opts.rhs_offset;
    p.outcome = p.lhs == p.rhs ? NumericPoint::Outcome::Equal : NumericPoint::Outcome::Unequal;
  } catch (const PoleError& e) {
    p.outcome = NumericPoint::Outcome::Skipped;
    p.note = std::string("pole: ") + e.what();
  } catch (const DomainError& e) {
    p.outcome = NumericPoint::Outcome::Skipped;
    p.note = std::string("domain: ") + e.what();
  }
  return p;
}

}  // namespace

const NumericPoint* NumericReport::first_unequal() const {
  for (const auto& p : points)
    if (p.outcome == NumericPoint::Outcome::Unequal) return &p;
  return nullptr;
}

NumericReport numeric_verify(const parse::Identity& id, int n_max, const NumericOptions& opts) {
  NumericReport report;
  report.n_max = n_max;
  const std::size_t extra = id.params.size() - 1;
  const int width = opts.param_hi - opts.param_lo + 1;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<int> digits(extra, 0);
    while (true) {
      Assignment point;
      point[id.main_var()] = n;
      for (std::size_t i = 0; i < extra; ++i) point[id.params[i + 1]] = opts.param_lo + digits[i];
      if (!admissible(id, point)) {
        ++report.inadmissible;
      } else {
        auto p = check_point(id, n, point, opts);
        switch (p.outcome) {
          case NumericPoint::Outcome::Equal: ++report.equal; break;
          case NumericPoint::Outcome::Unequal: ++report.unequal; break;
          case NumericPoint::Outcome::Skipped: ++report.skipped; break;
        }
        report.points.push_back(std::move(p));
      }
      std::size_t i = 0;
      while (i < extra && ++digits[i] == width) digits[i++] = 0;
      if (i == extra) break;
    }
  }
  return report;
}

}  // namespace wz::orch
