#include "wz/gosper/gosper.hpp"

#include <algorithm>
#include <map>

#include "wz/symcore/factor.hpp"
#include "wz/symcore/linear_system.hpp"

namespace wz::gosper {

using sym::Rational;
using sym::VarList;

namespace {

Polynomial one_like(const Polynomial& p) { return Polynomial::constant(p.vars(), 1).embed(p.shared_vars()); }

Polynomial var_like(const Polynomial& p, std::size_t v) {
  return Polynomial::variable(p.vars(), p.vars()[v]).embed(p.shared_vars());
}

std::string fresh_name(const VarList& vars) {
  std::string j = "_j";
  while (std::find(vars.begin(), vars.end(), j) != vars.end()) j += "_";
  return j;
}

}  // namespace

std::vector<long> dispersion_set(const Polynomial& q, const Polynomial& s, std::size_t var) {
  std::vector<long> out;
  if (q.degree(var) == 0 || s.degree(var) == 0) return out;
  VarList ext = q.vars();
  const std::string jname = fresh_name(ext);
  ext.push_back(jname);
  const Polynomial qe = q.embed(ext);
  const Polynomial se = s.embed(ext);
  const std::size_t jv = qe.require_var(jname);
  const Polynomial shifted = se.substitute(var, var_like(qe, var) + var_like(qe, jv));
  const Polynomial res = sym::resultant(qe, shifted, var);
  if (res.is_zero()) throw Error("dispersion: zero resultant for coprime inputs");
  // Split the resultant by monomials in the other variables; every part must vanish.
  std::map<sym::Exponents, Polynomial::TermMap> parts;
  for (const auto& [e, c] : res.terms()) {
    sym::Exponents rest = e;
    const int dj = e[jv];
    rest[jv] = 0;
    sym::Exponents je(e.size(), 0);
    je[jv] = dj;
    parts[rest].emplace(je, c);
  }
  Polynomial g;
  bool first = true;
  for (auto& [rest, tm] : parts) {
    Polynomial part(res.shared_vars(), tm);
    g = first ? part : sym::gcd(g, part);
    first = false;
    if (g.is_constant()) return out;
  }
  for (const Rational& r : sym::rational_roots(g, jv)) {
    if (r.get_den() == 1 && r > 0) out.push_back(r.get_num().get_si());
  }
  return out;
}

GPForm gp_decompose(const RationalFunction& ratio, std::string_view var) {
  if (ratio.is_zero()) throw PreconditionError("gp_decompose: zero ratio");
  const std::size_t k = ratio.num().require_var(var);
  GPForm gp;
  gp.p = one_like(ratio.num());
  gp.q = ratio.num();
  // s(k+1) = den(k)  =>  s(k) = den(k-1)
  gp.s = ratio.den().shift(k, -1);
  for (long j : dispersion_set(gp.q, gp.s, k)) {
    const Polynomial g = sym::gcd(gp.q, gp.s.shift(k, j));
    if (g.is_constant()) continue;
    gp.q = gp.q / g;
    gp.s = gp.s / g.shift(k, -j);
    for (long i = 1; i < j; ++i) gp.p *= g.shift(k, -i);
  }
  return gp;
}

std::optional<int> degree_bound(const GPForm& gp, std::string_view var) {
  const std::size_t k = gp.q.require_var(var);
  const Polynomial plus = gp.q + gp.s;
  const Polynomial minus = gp.q - gp.s;
  const int dp = gp.p.degree(k);
  const int dplus = plus.is_zero() ? -1 : plus.degree(k);
  const int dminus = minus.is_zero() ? -1 : minus.degree(k);
  int bound;
  if (!minus.is_zero() && dminus >= dplus) {
    bound = dp - dminus;
  } else {
    bound = dp - dplus + 1;
    // Leading terms cancel when deg x = -2 l / L.
    const Polynomial l = minus.is_zero() ? minus : minus.coeff(k, dplus - 1);
    const Polynomial big_l = plus.coeff(k, dplus);
    const RationalFunction n0 = RationalFunction(l.scaled(-2), big_l);
    if (n0.is_constant()) {
      const Rational v = n0.constant_value();
      if (v.get_den() == 1 && v >= 0 && v > bound) {
        if (v > kMaxDegreeBound) throw BoundOverflow("Gosper degree bound " + v.get_str() + " exceeds the cap");
        bound = static_cast<int>(v.get_num().get_si());
      }
    }
  }
  if (bound < 0) return std::nullopt;
  if (bound > kMaxDegreeBound) throw BoundOverflow("Gosper degree bound " + std::to_string(bound) + " exceeds the cap");
  return bound;
}

std::optional<RationalFunction> solve_key_equation(const GPForm& gp, std::string_view var, int bound) {
  const std::size_t k = gp.q.require_var(var);
  const Polynomial kp = var_like(gp.q, k);
  // Column i holds the contribution of x = k^i.
  std::vector<Polynomial> cols;
  Polynomial mono = one_like(gp.q);
  int rows = gp.p.degree(k);
  for (int i = 0; i <= bound; ++i) {
    Polynomial c = gp.q * mono.shift(k, 1) - gp.s * mono;
    rows = std::max(rows, c.is_zero() ? 0 : c.degree(k));
    cols.push_back(std::move(c));
    mono *= kp;
  }
  sym::PolyMatrix a(static_cast<std::size_t>(rows + 1));
  std::vector<Polynomial> b;
  for (int r = 0; r <= rows; ++r) {
    for (const auto& c : cols) a[r].push_back(c.coeff(k, r));
    b.push_back(gp.p.coeff(k, r));
  }
  const auto sol = sym::solve_linear(a, b);
  if (!sol) return std::nullopt;
  // Coefficients live in Q(params), so x may carry a parameter-only denominator.
  RationalFunction x(gp.q - gp.q);
  RationalFunction pw(one_like(gp.q));
  for (int i = 0; i <= bound; ++i) {
    x = x + (*sol)[i] * pw;
    pw = pw * RationalFunction(kp);
  }
  return x;
}

RationalFunction gosper_residual(const RationalFunction& ratio, const RationalFunction& cert, std::string_view var) {
  return ratio * cert.shift(var, 1) - cert - RationalFunction::constant_like(cert.num(), 1);
}

std::optional<RationalFunction> gosper_solve(const RationalFunction& ratio, std::string_view var) {
  if (ratio.is_zero()) throw PreconditionError("gosper_solve: zero ratio");
  const GPForm gp = gp_decompose(ratio, var);
  const auto bound = degree_bound(gp, var);
  if (!bound) return std::nullopt;
  const auto x = solve_key_equation(gp, var, *bound);
  if (!x) return std::nullopt;
  const RationalFunction cert = RationalFunction(gp.s) * *x / RationalFunction(gp.p);
  if (!gosper_residual(ratio, cert, var).is_zero()) {
    throw Error("gosper_solve: certificate failed verification");
  }
  return cert;
}

}  // namespace wz::gosper
