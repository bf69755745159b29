#pragma once

#include <span>
#include <string>

#include "wz/parser/identity.hpp"

namespace wz::sketch {

using ht::HyperTerm;
using sym::LinearForm;
using sym::Polynomial;
using sym::RationalFunction;
using sym::VarList;

/// Main variable, summation variable, then the remaining parameters.
VarList display_order(const parse::Identity& id);

/// Natural-number text with positive terms first: "n + 1", "2 * n", "n + 1 - k".
std::string lean_nat(const LinearForm& l);
/// Real-valued text with casts: "↑n - ↑k + 1".
std::string lean_real(const LinearForm& l, std::span<const std::string> order);
std::string lean_real(const Polynomial& p, std::span<const std::string> order);
/// Real-valued rendering of a hypergeometric term, e.g.
/// "(-1 : ℝ) ^ k * (Nat.choose n k : ℝ) * (↑m : ℝ) / (↑k + ↑m : ℝ)".
std::string lean_term(const HyperTerm& t, std::span<const std::string> order);
/// "m ≥ 1" from the constraint form m - 1 >= 0.
std::string lean_constraint(const LinearForm& l);
/// "∑ k ∈ Finset.range (n + 1), <summand> = <rhs>".
std::string lean_statement(const parse::Identity& id);
/// Binders and hypotheses of a theorem over the identity's parameters:
/// "(n m : ℕ) (h₀ : m ≥ 1)".
std::string lean_binders(const parse::Identity& id);
/// Theorem name made of letters, digits and underscores.
std::string lean_ident(std::string_view raw);

}  // namespace wz::sketch
