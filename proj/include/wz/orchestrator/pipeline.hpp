#pragma once

#include <deque>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wz/orchestrator/backend.hpp"
#include "wz/orchestrator/config.hpp"
#include "wz/orchestrator/numeric.hpp"

namespace wz::orch {

using sketch::Obligation;

/// Pending goals in FIFO order with a seen-set keyed by goal id: a goal
/// enters the queue at most once, however often it is pushed.
class GoalQueue {
 public:
  /// False when the goal was seen before.
  bool push(const Obligation& goal);
  std::optional<Obligation> pop();
  bool seen(const std::string& id) const;
  void resolve(const std::string& id, std::string fragment);
  std::optional<std::string> fragment(const std::string& id) const;
  std::size_t seen_count() const;
  std::size_t pending_count() const;

 private:
  mutable std::mutex mu_;
  std::deque<Obligation> pending_;
  std::set<std::string> seen_;
  std::map<std::string, std::string> fragments_;
};

struct BackendStats {
  std::size_t submitted = 0;   // goals of this identity sent to the queue
  std::size_t processed = 0;   // of those, first seen here
  std::size_t discharged = 0;
  std::size_t failed = 0;
};

enum class ItemStatus { Pass, Fail, Error, Duplicate };
std::string_view item_status_name(ItemStatus s);

struct IdentityResult {
  std::string file;
  std::string theorem;
  ItemStatus status = ItemStatus::Error;
  std::string error;
  bool covered = false;
  std::string certificate;
  int order = 0;
  std::optional<int> base_n0;
  std::optional<std::string> base_value;
  std::map<std::string, std::size_t> counts;  // by kind, plus "open" and "discharged"
  std::optional<NumericReport> numeric;
  BackendStats backend;
  std::vector<std::string> diagnostics;
  std::string lean_path;
  std::string manifest_path;
  std::string duplicate_of;
};

struct BatchReport {
  std::string backend;
  std::vector<IdentityResult> items;
  std::size_t goals_unique = 0;
  std::size_t goals_discharged = 0;

  bool all_pass() const;
};

/// Parse, sketch, discharge, emit and verify every input. Files go to
/// out_dir as <theorem>.lean and <theorem>.manifest.json. A failing input
/// is recorded in its own item and never affects the others. Results do
/// not depend on cfg.jobs.
BatchReport run_pipeline(const std::vector<std::filesystem::path>& inputs, const Config& cfg,
                         ProverBackend& backend, const std::filesystem::path& out_dir);

/// *.wz files of a directory, sorted by name.
std::vector<std::filesystem::path> list_inputs(const std::filesystem::path& dir);

std::string report_json(const BatchReport& report);

}  // namespace wz::orch
