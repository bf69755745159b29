#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wz/hyperterm/hyperterm.hpp"

namespace wz::tele {

using ht::HyperTerm;
using sym::RationalFunction;
using sym::VarList;

/// Names of the summation and main variables plus the rational-function universe.
struct Vars {
  std::string k = "k";
  std::string n = "n";
  VarList universe{"k", "n"};
};

/// (F, G = R F) with F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k).
struct WZPair {
  HyperTerm F;
  RationalFunction R;
  bool residual_verified = false;
};

/// sum_j a_j(n) F(n+j,k) = G(n,k+1) - G(n,k) with G = R F.
struct TelescopeRelation {
  int order = 0;
  std::vector<RationalFunction> coeffs;  // a_0 .. a_order
  RationalFunction R;
};

/// rho_n - 1 - (sigma_k(R) rho_k - R); zero iff (F, R F) is a WZ pair.
RationalFunction verify_wz_equation(const HyperTerm& F, const RationalFunction& R, const Vars& v);

std::optional<WZPair> wz_certify(const HyperTerm& F, const Vars& v);

/// sum_j a_j rho^(j) - (sigma_k(R) rho_k - R), with rho^(j) = F(n+j,k)/F(n,k).
RationalFunction telescope_residual(const HyperTerm& F, const TelescopeRelation& rel, const Vars& v);

/// Smallest order J <= max_order admitting a relation; max_order >= 1.
std::optional<TelescopeRelation> creative_telescope(const HyperTerm& F, int max_order, const Vars& v);

inline constexpr int kDefaultMaxOrder = 4;

}  // namespace wz::tele
