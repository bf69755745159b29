#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "wz/symcore/rational_function.hpp"

namespace wz::gosper {

using sym::Polynomial;
using sym::RationalFunction;

/// ratio = p(k+1)/p(k) * q(k)/s(k+1) with gcd(q(k), s(k+j)) = 1 for all j >= 1.
struct GPForm {
  Polynomial p;
  Polynomial q;
  Polynomial s;
};

/// Positive integers j at which q(k) and s(k+j) share a factor, for all
/// values of the remaining variables.
std::vector<long> dispersion_set(const Polynomial& q, const Polynomial& s, std::size_t var);

GPForm gp_decompose(const RationalFunction& ratio, std::string_view var);

/// Degree bound for x in q(k) x(k+1) - s(k) x(k) = p(k); nullopt when no
/// polynomial solution can exist. Throws BoundOverflow above 64.
std::optional<int> degree_bound(const GPForm& gp, std::string_view var);

/// Solution x of the key equation of degree <= bound (coefficients in the
/// fraction field of the other variables), or nullopt.
std::optional<RationalFunction> solve_key_equation(const GPForm& gp, std::string_view var, int bound);

/// Certificate R with ratio * R(k+1) - R(k) = 1, so that g = R f satisfies
/// g(k+1) - g(k) = f(k); nullopt when f has no hypergeometric antidifference.
std::optional<RationalFunction> gosper_solve(const RationalFunction& ratio, std::string_view var);

/// ratio * R(k+1) - R(k) - 1.
RationalFunction gosper_residual(const RationalFunction& ratio, const RationalFunction& cert, std::string_view var);

inline constexpr int kMaxDegreeBound = 64;

}  // namespace wz::gosper
