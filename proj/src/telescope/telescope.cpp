#include "wz/telescope/telescope.hpp"

#include "wz/gosper/gosper.hpp"
#include "wz/symcore/linear_system.hpp"

namespace wz::tele {

using sym::Polynomial;

namespace {

RationalFunction one(const Vars& v) { return RationalFunction::constant(v.universe, 1); }

}  // namespace

RationalFunction verify_wz_equation(const HyperTerm& F, const RationalFunction& R, const Vars& v) {
  const RationalFunction rho_n = F.ratio_shift(v.n, v.universe);
  const RationalFunction rho_k = F.ratio_shift(v.k, v.universe);
  return rho_n - one(v) - (R.shift(v.k, 1) * rho_k - R);
}

std::optional<WZPair> wz_certify(const HyperTerm& F, const Vars& v) {
  if (F.is_zero()) throw PreconditionError("wz_certify: zero summand");
  const RationalFunction rho_n = F.ratio_shift(v.n, v.universe);
  const RationalFunction rho_k = F.ratio_shift(v.k, v.universe);
  const RationalFunction d = rho_n - one(v);
  WZPair pair{F, RationalFunction::constant(v.universe, 0), false};
  if (!d.is_zero()) {
    // H = F (rho_n - 1) is hypergeometric in k; Gosper finds G = R_H H.
    const RationalFunction ratio_h = rho_k * (d.shift(v.k, 1) / d);
    const auto rh = gosper::gosper_solve(ratio_h, v.k);
    if (!rh) return std::nullopt;
    pair.R = *rh * d;
  }
  if (!verify_wz_equation(F, pair.R, v).is_zero()) throw Error("wz_certify: certificate failed verification");
  pair.residual_verified = true;
  return pair;
}

RationalFunction telescope_residual(const HyperTerm& F, const TelescopeRelation& rel, const Vars& v) {
  const RationalFunction rho_k = F.ratio_shift(v.k, v.universe);
  RationalFunction lhs = RationalFunction::constant(v.universe, 0);
  for (int j = 0; j <= rel.order; ++j) {
    const RationalFunction rho = j == 0 ? one(v) : F.shift_ratio(v.n, j, v.universe);
    lhs = lhs + rel.coeffs[j] * rho;
  }
  return lhs - (rel.R.shift(v.k, 1) * rho_k - rel.R);
}

namespace {

std::optional<TelescopeRelation> try_order(const HyperTerm& F, int order, const Vars& v) {
  const std::size_t kx = Polynomial(v.universe).require_var(v.k);
  // rho^(j) = P_j / Q over a common denominator.
  std::vector<RationalFunction> rho;
  Polynomial Q = Polynomial::constant(v.universe, 1);
  for (int j = 0; j <= order; ++j) {
    rho.push_back(j == 0 ? one(v) : F.shift_ratio(v.n, j, v.universe));
    const Polynomial& den = rho.back().den();
    Q = Q * (den / sym::gcd(Q, den));
  }
  std::vector<Polynomial> P;
  int max_deg = 0;
  for (const auto& r : rho) {
    P.push_back(r.num() * (Q / r.den()));
    max_deg = std::max(max_deg, P.back().degree(kx));
  }
  // t0 = F / Q; the summand is t0 * sum_j a_j P_j.
  const RationalFunction rho_k = F.ratio_shift(v.k, v.universe);
  const RationalFunction ratio0 = rho_k * RationalFunction(Q, Q.shift(kx, 1));
  const gosper::GPForm gp = gosper::gp_decompose(ratio0, v.k);
  const Polynomial kpoly = Polynomial::variable(v.universe, v.k);
  gosper::GPForm generic = gp;
  generic.p = gp.p * kpoly.pow(static_cast<unsigned>(max_deg));
  const auto bound = gosper::degree_bound(generic, v.k);
  if (!bound) return std::nullopt;

  // Unknowns: x_0..x_D, then a_0..a_J. Equation: q x(k+1) - s x(k) - p_ex sum a_j P_j = 0.
  std::vector<Polynomial> cols;
  Polynomial mono = Polynomial::constant(v.universe, 1);
  for (int i = 0; i <= *bound; ++i) {
    cols.push_back(gp.q * mono.shift(kx, 1) - gp.s * mono);
    mono *= kpoly;
  }
  for (const auto& pj : P) cols.push_back(-(gp.p * pj));
  int rows = 0;
  for (const auto& c : cols) {
    if (!c.is_zero()) rows = std::max(rows, c.degree(kx));
  }
  sym::PolyMatrix a(static_cast<std::size_t>(rows + 1));
  for (int r = 0; r <= rows; ++r) {
    for (const auto& c : cols) a[r].push_back(c.coeff(kx, r));
  }
  const std::size_t nx = static_cast<std::size_t>(*bound + 1);
  for (const auto& vec : sym::null_space(a, v.universe)) {
    std::size_t lead = vec.size();
    for (std::size_t i = vec.size(); i-- > nx;) {
      if (!vec[i].is_zero()) {
        lead = i;
        break;
      }
    }
    if (lead == vec.size()) continue;
    const RationalFunction scale = vec[lead];
    TelescopeRelation rel;
    rel.order = order;
    for (std::size_t i = nx; i < vec.size(); ++i) rel.coeffs.push_back(vec[i] / scale);
    RationalFunction x = RationalFunction::constant(v.universe, 0);
    RationalFunction pw = one(v);
    for (std::size_t i = 0; i < nx; ++i) {
      x = x + vec[i] / scale * pw;
      pw = pw * RationalFunction(kpoly);
    }
    rel.R = RationalFunction(gp.s) * x / RationalFunction(gp.p * Q);
    if (!telescope_residual(F, rel, v).is_zero()) throw Error("creative_telescope: relation failed verification");
    return rel;
  }
  return std::nullopt;
}

}  // namespace

std::optional<TelescopeRelation> creative_telescope(const HyperTerm& F, int max_order, const Vars& v) {
  if (max_order < 1) throw PreconditionError("creative_telescope: max_order must be at least 1");
  if (F.is_zero()) throw PreconditionError("creative_telescope: zero summand");
  for (int order = 1; order <= max_order; ++order) {
    if (auto rel = try_order(F, order, v)) return rel;
  }
  return std::nullopt;
}

}  // namespace wz::tele
