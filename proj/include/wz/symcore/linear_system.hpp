#pragma once

#include <optional>
#include <vector>

#include "wz/symcore/rational_function.hpp"

namespace wz::sym {

/// Dense matrix with polynomial entries over a shared variable list; the
/// system is solved over the fraction field of those variables.
using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Row echelon form by fraction-free (Bareiss) elimination.
struct Echelon {
  PolyMatrix rows;                  // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
  std::size_t cols = 0;
};

Echelon bareiss_echelon(PolyMatrix m);

/// Solution of A x = b with free unknowns set to zero, or nullopt when the
/// system is inconsistent.
std::optional<std::vector<RationalFunction>> solve_linear(const PolyMatrix& a, const std::vector<Polynomial>& b);

/// Basis of the right null space of A, one vector per free column, ordered
/// by free column.
std::vector<std::vector<RationalFunction>> null_space(const PolyMatrix& a, const VarList& vars);

}  // namespace wz::sym
