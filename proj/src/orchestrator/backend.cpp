#include "wz/orchestrator/backend.hpp"

#include <httplib.h>

#include <chrono>
#include <cstdlib>
#include <json.hpp>
#include <thread>

namespace wz::orch {

using json = nlohmann::json;

namespace {

constexpr std::string_view kSystemPrompt =
    "You are a Lean 4 prover working with Mathlib. First provide a detailed proof plan, then give the "
    "tactic proof of the goal in a single ```lean code block. The block must contain only tactics that "
    "close the goal, without `sorry`, `theorem` or `import`.";

class Slot {
 public:
  Slot(std::mutex& mu, std::condition_variable& cv, int& count, int limit) : mu_(mu), cv_(cv), count_(count) {
    std::unique_lock lock(mu_);
    cv_.wait(lock, [&] { return count_ < limit; });
    ++count_;
  }
  ~Slot() {
    {
      std::lock_guard lock(mu_);
      --count_;
    }
    cv_.notify_one();
  }
  Slot(const Slot&) = delete;
  Slot& operator=(const Slot&) = delete;

 private:
  std::mutex& mu_;
  std::condition_variable& cv_;
  int& count_;
};

}  // namespace

std::optional<std::string> extract_lean_block(std::string_view text) {
  std::size_t pos = 0;
  while ((pos = text.find("```", pos)) != std::string_view::npos) {
    const auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) return std::nullopt;
    std::string_view tag = text.substr(pos + 3, eol - pos - 3);
    while (!tag.empty() && (tag.back() == ' ' || tag.back() == '\r')) tag.remove_suffix(1);
    const auto close = text.find("```", eol + 1);
    if (close == std::string_view::npos) return std::nullopt;
    if (tag == "lean" || tag == "lean4" || tag.empty()) {
      std::string_view body = text.substr(eol + 1, close - eol - 1);
      if (!body.empty() && body.back() == '\n') body.remove_suffix(1);
      return std::string(body);
    }
    pos = close + 3;
  }
  return std::nullopt;
}

std::string prover_prompt(const std::string& goal_lean, const std::string& context) {
  std::string out = "Prove the following Lean 4 goal.\n\n";
  if (!context.empty()) out += "Context:\n" + context + "\n\n";
  out += "Goal:\n" + goal_lean + "\n\nProvide a detailed proof plan, then the Lean 4 proof.";
  return out;
}

HttpBackend::HttpBackend(BackendConfig cfg) : cfg_(std::move(cfg)) {
  const std::string& url = cfg_.endpoint;
  const auto scheme_end = url.find("://");
  const auto path_start = url.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
  if (scheme_end == std::string::npos) {
    scheme_host_port_ = "http://" + url.substr(0, path_start);
  } else {
    scheme_host_port_ = url.substr(0, path_start);
  }
  path_ = path_start == std::string::npos ? "/" : url.substr(path_start);
}

DischargeResult HttpBackend::discharge(const std::string& goal_lean, const std::string& context) {
  DischargeResult result;
  if (cfg_.endpoint.empty()) {
    result.error = "backend endpoint not configured";
    return result;
  }
  Slot slot(mu_, cv_, in_flight_, cfg_.max_concurrency);

  json body;
  body["model"] = cfg_.model;
  body["messages"] = json::array({{{"role", "system"}, {"content", kSystemPrompt}},
                                  {{"role", "user"}, {"content", prover_prompt(goal_lean, context)}}});
  const std::string payload = body.dump();

  httplib::Headers headers;
  if (!cfg_.api_key_env.empty()) {
    if (const char* key = std::getenv(cfg_.api_key_env.c_str())) headers.emplace("Authorization", std::string("Bearer ") + key);
  }

  for (int attempt = 0; attempt <= cfg_.retries; ++attempt) {
    result.attempts = attempt + 1;
    if (attempt > 0) std::this_thread::sleep_for(std::chrono::milliseconds(100 * attempt));
    try {
      httplib::Client client(scheme_host_port_);
      if (!client.is_valid()) {
        result.error = "unsupported endpoint " + cfg_.endpoint;
        return result;
      }
      client.set_connection_timeout(cfg_.timeout_s, 0);
      client.set_read_timeout(cfg_.timeout_s, 0);
      client.set_write_timeout(cfg_.timeout_s, 0);
      auto res = client.Post(path_, headers, payload, "application/json");
      if (!res) {
        result.error = "request failed: " + httplib::to_string(res.error());
        continue;
      }
      if (res->status != 200) {
        result.error = "HTTP " + std::to_string(res->status);
        continue;
      }
      const json reply = json::parse(res->body, nullptr, false);
      if (reply.is_discarded()) {
        result.error = "malformed response: not JSON";
        continue;
      }
      std::string content;
      if (reply.contains("choices") && reply["choices"].is_array() && !reply["choices"].empty() &&
          reply["choices"][0].contains("message") && reply["choices"][0]["message"].contains("content") &&
          reply["choices"][0]["message"]["content"].is_string()) {
        content = reply["choices"][0]["message"]["content"].get<std::string>();
      } else {
        result.error = "malformed response: no choices[0].message.content";
        continue;
      }
      auto block = extract_lean_block(content);
      if (!block) {
        result.error = "malformed response: no fenced lean block";
        continue;
      }
      result.ok = true;
      result.proof = std::move(*block);
      result.error.clear();
      return result;
    } catch (const std::exception& e) {
      result.error = std::string("backend exception: ") + e.what();
    }
  }
  return result;
}

std::unique_ptr<ProverBackend> make_backend(const BackendConfig& cfg) {
  if (cfg.kind == "http") return std::make_unique<HttpBackend>(cfg);
  if (cfg.kind == "null") return std::make_unique<NullBackend>();
  throw ConfigError("unknown backend '" + cfg.kind + "'");
}

}  // namespace wz::orch
