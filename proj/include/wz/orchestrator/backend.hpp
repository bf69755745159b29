#pragma once

#include <condition_variable>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "wz/orchestrator/config.hpp"

namespace wz::orch {

struct DischargeResult {
  bool ok = false;
  std::string proof;  // tactic block when ok
  std::string error;  // reason when not ok
  int attempts = 0;
};

struct Capabilities {
  std::string name;
  bool remote = false;
};

class ProverBackend {
 public:
  virtual ~ProverBackend() = default;
  /// Never throws; every failure is reported through the result.
  virtual DischargeResult discharge(const std::string& goal_lean, const std::string& context) = 0;
  virtual Capabilities capabilities() const = 0;
};

class NullBackend final : public ProverBackend {
 public:
  DischargeResult discharge(const std::string&, const std::string&) override {
    return {false, {}, "null backend", 1};
  }
  Capabilities capabilities() const override { return {"null", false}; }
};

/// Chat-completion style client:
///   POST {"model", "messages": [{"role": "system"}, {"role": "user"}]}
///   200 {"choices": [{"message": {"content": "... ```lean\n<proof>\n``` ..."}}]}
/// Non-200 replies, timeouts and replies without a fenced block are
/// failures; each is retried up to `retries` more times.
class HttpBackend final : public ProverBackend {
 public:
  explicit HttpBackend(BackendConfig cfg);
  DischargeResult discharge(const std::string& goal_lean, const std::string& context) override;
  Capabilities capabilities() const override { return {"http", true}; }

 private:
  BackendConfig cfg_;
  std::string scheme_host_port_;
  std::string path_;
  std::mutex mu_;
  std::condition_variable cv_;
  int in_flight_ = 0;
};

/// Body of the first ```lean (or bare ```) fence, verbatim.
std::optional<std::string> extract_lean_block(std::string_view text);

/// User message sent for one goal.
std::string prover_prompt(const std::string& goal_lean, const std::string& context);

std::unique_ptr<ProverBackend> make_backend(const BackendConfig& cfg);

}  // namespace wz::orch
