#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wz/hyperterm/hyperterm.hpp"

namespace wz::parse {

using ht::HyperTerm;
using sym::Facts;
using sym::LinearForm;
using sym::VarList;

enum class CaseTag { None, Even, Odd };

/// sum(k, lo, hi, summand) = rhs, with parameter declarations and linear
/// assumptions. The first parameter is the main variable n.
struct Identity {
  std::string sum_var = "k";
  LinearForm lo;
  LinearForm hi;
  HyperTerm summand;
  HyperTerm rhs;
  VarList params{"n"};
  std::vector<LinearForm> assumptions;  // each constraint reads form >= 0
  CaseTag case_tag = CaseTag::None;

  const std::string& main_var() const { return params.front(); }
  /// Variable list for rational functions: sum variable, then the parameters.
  VarList universe() const;
  Facts facts() const { return Facts(assumptions); }
  bool zero_rhs() const { return rhs.is_zero(); }
  bool operator==(const Identity& o) const;
};

Identity parse_identity(std::string_view text);
std::string print_identity(const Identity& id);

/// Canonical form of a constraint L >= 0: integer coefficients, reduced by
/// their gcd with the constant rounded down.
LinearForm normalize_constraint(const LinearForm& l);
/// "m >= 1", "n >= m + 1".
std::string constraint_to_string(const LinearForm& l);

/// Record of one index shift k -> k + offset performed by range_normalize.
struct RangeShift {
  LinearForm offset;
  LinearForm original_lo;
  LinearForm original_hi;
  HyperTerm original_summand;
  std::string goal_internal;
};

/// Rewrites the sum to start at 0; returns the shifts performed (empty when
/// the range already starts at 0).
std::pair<Identity, std::vector<RangeShift>> range_normalize(const Identity& id);

/// Replaces the main variable n by 2t (even) or 2t+1 (odd) with a fresh t,
/// which becomes the new main variable.
Identity instantiate_case(const Identity& id);

}  // namespace wz::parse
