#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "wz/leanemit/leanemit.hpp"

namespace wz::orch {

struct BackendConfig {
  std::string kind = "null";  // "null" or "http"
  std::string endpoint;       // http://host:port/path
  std::string model = "wz-prover";
  std::string api_key_env;    // environment variable holding a bearer token
  int timeout_s = 60;
  int retries = 2;
  int max_concurrency = 4;
};

struct Config {
  lean::LeanConfig lean;
  BackendConfig backend;
  int max_order = 4;
  int n_max = 20;
  int param_lo = 1;
  int param_hi = 5;
  int jobs = 1;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// key = value lines; '#' starts a comment. Unknown keys and malformed
/// values raise ConfigError with the line number.
Config parse_config(std::string_view text, Config base = {});
Config load_config(const std::filesystem::path& path, Config base = {});

}  // namespace wz::orch
