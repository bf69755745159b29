#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wz/parser/identity.hpp"

namespace wz::orch {

using sym::Assignment;
using sym::Rational;

struct NumericOptions {
  int param_lo = 1;  // range sampled for every parameter other than n
  int param_hi = 5;
  Rational rhs_offset = 0;  // added to the rhs; nonzero only for negative controls
};

struct NumericPoint {
  enum class Outcome { Equal, Unequal, Skipped };
  int n = 0;
  Assignment params;
  Outcome outcome = Outcome::Equal;
  Rational lhs;
  Rational rhs;
  std::string note;  // reason for a skipped point
};

struct NumericReport {
  int n_max = 0;
  std::size_t equal = 0;
  std::size_t unequal = 0;
  std::size_t skipped = 0;
  std::size_t inadmissible = 0;  // points excluded by assumptions or the case tag
  std::vector<NumericPoint> points;

  /// Every admissible point evaluated equal, and at least one was evaluated.
  bool pass() const { return unequal == 0 && equal > 0; }
  const NumericPoint* first_unequal() const;
};

/// Brute-force exact check of sum_{k=lo}^{hi} summand = rhs for n = 0..n_max
/// and every parameter sample satisfying the assumptions. Points where a
/// factor has a pole or leaves its domain are skipped and counted.
NumericReport numeric_verify(const parse::Identity& id, int n_max, const NumericOptions& opts = {});

}  // namespace wz::orch
