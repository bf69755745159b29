#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wz/sketch/sketch.hpp"

namespace wz::lean {

using sketch::Obligation;
using sketch::ProofSketch;

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kTaskMarker = "-- [LLM task: non-vanishing & ratio lemmas]";
inline constexpr std::string_view kDirectMarker = "-- [LLM task: direct proof]";
inline constexpr std::string_view kDischargedMarker = "-- discharged";

struct LeanConfig {
  std::string toolchain = "leanprover/lean4:v4.25.0";
  std::vector<std::string> imports{"Mathlib"};
  std::string opens = "open Real Nat Finset BigOperators";
};

/// Byte range [begin, end) of a placeholder (marker line through `sorry`).
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  bool operator==(const Span&) const = default;
};

struct LeanSketchFile {
  std::string theorem_name;
  std::string header;
  std::string text;  // complete file, header included
  std::map<std::string, Span> placeholder_map;
};

/// Proof text per obligation id, as supplied by a prover backend.
using Discharges = std::map<std::string, std::string>;

/// Template emission for a covered sketch; throws PreconditionError when uncovered.
LeanSketchFile emit_lean(const ProofSketch& sk, const std::string& theorem_name, const Discharges& discharges = {},
                         const LeanConfig& cfg = {});

/// Statement plus one full-proof placeholder keyed by the identity's dedup hash.
LeanSketchFile emit_direct(const parse::Identity& id, const std::string& theorem_name,
                           const Discharges& discharges = {}, const LeanConfig& cfg = {});

/// Splices discharged proofs into their placeholders. Ids already spliced
/// are left alone, so the operation is idempotent; an id with neither a
/// placeholder nor a spliced block raises Error.
std::string assemble(const std::string& text, const Discharges& fragments);

/// Lines consisting of `sorry`.
std::size_t count_sorry(std::string_view text);
/// Ids of the remaining placeholders, in file order.
std::vector<std::string> placeholder_ids(std::string_view text);

/// Structural problems in an emitted file: unbalanced brackets, missing
/// theorem or `:= by`, sums not over Finset.range, marker/sorry mismatch.
std::vector<std::string> lint_file(std::string_view text);
/// Problems with a proof fragment returned by a backend.
std::vector<std::string> lint_fragment(std::string_view proof);

/// Serialized obligation pool of one identity.
struct Manifest {
  int schema = 1;
  std::string tool_version{kToolVersion};
  std::string theorem;
  std::string identity;
  bool covered = false;
  std::optional<std::string> certificate;
  int order = 0;
  struct Base {
    int n0 = 0;
    std::optional<std::string> value;
    bool operator==(const Base&) const = default;
  };
  std::optional<Base> base_case;
  std::vector<std::string> diagnostics;
  std::vector<Obligation> obligations;
  std::optional<Obligation> direct_goal;
  std::string content_hash;

  bool operator==(const Manifest&) const = default;
};

class ManifestError : public Error {
 public:
  using Error::Error;
};

Manifest make_manifest(const ProofSketch& sk, const std::string& theorem_name);
/// Canonical JSON text. The stored content_hash is ignored and recomputed
/// over the serialization of every other field.
std::string write_manifest(const Manifest& m);
/// Parses and validates, including the content hash. Errors carry
/// "line:col" positions or the offending field path.
Manifest read_manifest(std::string_view bytes);

}  // namespace wz::lean
