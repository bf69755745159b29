#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wz/symcore/rational_function.hpp"

namespace wz::sym {

struct PolyFactor {
  Polynomial poly;  // primitive, integer coefficients
  int multiplicity = 1;
};

/// p = unit * prod(factor.poly ^ factor.multiplicity).
struct Factorization {
  Rational unit;
  std::vector<PolyFactor> factors;
};

/// Partial factorization: contents with respect to each variable, monomial
/// factors, square-free decomposition and affine-linear factors. Remaining
/// pieces may still be reducible; they are returned whole.
Factorization factor_lite(const Polynomial& p);

/// All rational roots of a polynomial that only involves `var`.
std::vector<Rational> rational_roots(const Polynomial& p, std::size_t var);

/// Factored view of a rational function ready for rendering. Each factor's
/// leading term in display order is positive; the overall sign is `negative`.
struct FactoredView {
  bool negative = false;
  Integer num_const{1};
  Integer den_const{1};
  std::vector<PolyFactor> num;
  std::vector<PolyFactor> den;
};

FactoredView factored_view(const RationalFunction& r, std::span<const std::string> order);

/// Renders e.g. "-k^2*(3*n - 2*k + 3)/(2*(n - k + 1)^2*(2*n + 1))".
std::string to_factored_string(const RationalFunction& r, std::span<const std::string> order);

struct RootDesc {
  enum class Kind { Integer, Affine, Unresolved };
  Kind kind = Kind::Unresolved;
  Integer value;        // Integer kind
  Polynomial numerator; // Affine kind: var = numerator / divisor
  Integer divisor{1};
  Polynomial factor;    // the factor of p that produces this root
};

/// Integer roots of p in `var`. When p only involves var (possibly after
/// substituting `params`), every integer root is reported. Otherwise each
/// factor that is linear in var yields an Affine description, and other
/// factors involving var are reported Unresolved.
std::vector<RootDesc> poly_integer_roots(const Polynomial& p, std::string_view var,
                                         const Assignment* params = nullptr);

}  // namespace wz::sym
