#include "wz/orchestrator/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace wz::orch {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

int to_int(const std::string& v, int line, const std::string& key, int lo, int hi) {
  int out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size() || out < lo || out > hi)
    throw ConfigError("config:" + std::to_string(line) + ": " + key + " expects an integer in [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return out;
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

Config parse_config(std::string_view text, Config cfg) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config:" + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));

    if (key == "lean.toolchain") {
      cfg.lean.toolchain = value;
    } else if (key == "lean.imports") {
      cfg.lean.imports = split_list(value);
    } else if (key == "lean.opens") {
      cfg.lean.opens = value;
    } else if (key == "backend") {
      if (value != "null" && value != "http")
        throw ConfigError("config:" + std::to_string(line_no) + ": backend must be null or http");
      cfg.backend.kind = value;
    } else if (key == "backend.endpoint") {
      cfg.backend.endpoint = value;
    } else if (key == "backend.model") {
      cfg.backend.model = value;
    } else if (key == "backend.api_key_env") {
      cfg.backend.api_key_env = value;
    } else if (key == "backend.timeout") {
      cfg.backend.timeout_s = to_int(value, line_no, key, 1, 3600);
    } else if (key == "backend.retries") {
      cfg.backend.retries = to_int(value, line_no, key, 0, 20);
    } else if (key == "backend.max_concurrency") {
      cfg.backend.max_concurrency = to_int(value, line_no, key, 1, 256);
    } else if (key == "max_order") {
      cfg.max_order = to_int(value, line_no, key, 1, 8);
    } else if (key == "n_max") {
      cfg.n_max = to_int(value, line_no, key, 0, 200);
    } else if (key == "params.lo") {
      cfg.param_lo = to_int(value, line_no, key, 0, 1000);
    } else if (key == "params.hi") {
      cfg.param_hi = to_int(value, line_no, key, 0, 1000);
    } else if (key == "jobs") {
      cfg.jobs = to_int(value, line_no, key, 1, 256);
    } else {
      throw ConfigError("config:" + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (cfg.param_lo > cfg.param_hi) throw ConfigError("config: params.lo exceeds params.hi");
  return cfg;
}

Config load_config(const std::filesystem::path& path, Config base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

}  // namespace wz::orch
