#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wz/parser/identity.hpp"
#include "wz/telescope/telescope.hpp"

namespace wz::sketch {

using ht::HyperTerm;
using parse::Identity;
using sym::Rational;

enum class Kind { Rec, Bd, Side, Norm, Case };
enum class Status { Open, Discharged, Failed };

std::string_view kind_name(Kind k);
std::string_view status_name(Status s);
std::optional<Kind> parse_kind(std::string_view s);
std::optional<Status> parse_status(std::string_view s);

/// 16 hex digits of the FNV-1a 64-bit hash.
std::string fnv1a_hex(std::string_view text);

struct Obligation {
  std::string id;             // fnv1a_hex(goal_internal)
  Kind kind = Kind::Side;
  std::string name;           // Lean hypothesis name
  std::string goal_internal;  // canonical text, also the dedup key
  std::string goal_lean;
  Status status = Status::Open;
  std::string provenance;

  bool operator==(const Obligation&) const = default;
};

Obligation make_obligation(Kind kind, std::string name, std::string goal_internal, std::string goal_lean,
                           std::string provenance);

struct BaseCase {
  int n0 = 0;
  std::optional<Rational> value;  // absent when it could not be determined
};

struct ProofSketch {
  Identity identity;                // range-normalized, case-instantiated
  Identity original;
  HyperTerm F;                      // summand / rhs
  std::optional<tele::WZPair> pair;
  std::optional<tele::TelescopeRelation> relation;  // order >= 2 only
  BaseCase base_case;
  std::vector<Obligation> obligations;
  std::vector<std::string> diagnostics;
  bool uncovered = true;

  tele::Vars vars() const;
  /// The certificate R rendered in factored form; empty when uncovered.
  std::string certificate_text() const;
  /// Goal used when the identity is proved without a sketch.
  Obligation direct_goal() const;
  std::size_t count(Kind k) const;
};

/// Whole-identity goal keyed by the dedup hash of the printed identity; the
/// Lean text is the range-normalized statement.
Obligation direct_goal(const Identity& original);

/// F = summand / rhs together with the unnormalization equivalence (norm)
/// and the non-vanishing of the rhs (side). Throws PreconditionError with
/// "zero-RHS not normalizable" when the rhs is identically zero.
std::pair<HyperTerm, std::vector<Obligation>> normalize_identity(const Identity& id);

/// Nonzero goals for denominator factors of the certificate, of the term
/// ratios and of the summand, with isolated-index goals and parity splits.
std::vector<Obligation> infer_side_conditions(const ProofSketch& sk);

/// The three ratio lemmas for the summand and the rhs.
std::vector<Obligation> ratio_lemma_obligations(const ProofSketch& sk);

/// Range shift, normalization and certificate search only: the returned
/// sketch has no obligations or base case.
ProofSketch certify(const Identity& id, int max_order = tele::kDefaultMaxOrder);

/// Parse-level identity in, full sketch out. Range shifts and parity cases
/// are applied first. Never throws for hypergeometric inputs: failure to
/// certify leaves the sketch uncovered.
ProofSketch build_sketch(const Identity& id, int max_order = tele::kDefaultMaxOrder);

/// Exact value of sum_k F(n0, k), sampling parameters when the value cannot
/// be computed symbolically.
std::optional<Rational> base_value(const Identity& id, const HyperTerm& F, int n0);

/// Smallest n >= 0 not excluded by an assumption that only involves n.
int smallest_admissible_n(const Identity& id);

}  // namespace wz::sketch
