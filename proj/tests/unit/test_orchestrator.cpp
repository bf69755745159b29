#include <gtest/gtest.h>
#include <httplib.h>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "wz/orchestrator/pipeline.hpp"

using namespace wz::orch;
using wz::parse::parse_identity;
namespace fs = std::filesystem;

namespace {

const char* kCentral = "params n; sum(k, 0, n, binom(n,k)^2) = binom(2*n,n)";
const char* kReciprocal = "params n m; assume m >= 1; sum(k, 0, n, (-1)^k * binom(n,k) * m/(m+k)) = 1/binom(m+n,n)";
const char* kZero = "params n; assume n >= 1; sum(k, 0, n, (-1)^k*binom(n,k)) = 0";

class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = fs::temp_directory_path() /
            ("wz_orch_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text << "\n";
    return path_ / name;
  }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CountingBackend : public ProverBackend {
 public:
  DischargeResult discharge(const std::string& goal, const std::string&) override {
    ++calls;
    if (goal.find("≠ 0") != std::string::npos) return {true, answer, {}, 1};
    return {false, {}, "no proof", 1};
  }
  Capabilities capabilities() const override { return {"counting", false}; }
  std::atomic<int> calls{0};
  std::string answer = "positivity";
};

const IdentityResult& item(const BatchReport& r, const std::string& theorem) {
  for (const auto& it : r.items)
    if (it.theorem == theorem) return it;
  throw std::runtime_error("no item " + theorem);
}

}  // namespace

TEST(Config, ParsesKeysAndRejectsUnknown) {
  const auto cfg = parse_config(
      "# comment\nlean.toolchain = leanprover/lean4:v4.9.0\nlean.imports = Mathlib, Mathlib.Tactic\n"
      "backend = http\nbackend.endpoint = http://127.0.0.1:9/v1\nbackend.retries = 0  # none\n"
      "max_order = 2\nn_max = 12\njobs = 3\n");
  EXPECT_EQ(cfg.lean.toolchain, "leanprover/lean4:v4.9.0");
  ASSERT_EQ(cfg.lean.imports.size(), 2u);
  EXPECT_EQ(cfg.lean.imports[1], "Mathlib.Tactic");
  EXPECT_EQ(cfg.backend.kind, "http");
  EXPECT_EQ(cfg.backend.retries, 0);
  EXPECT_EQ(cfg.max_order, 2);
  EXPECT_EQ(cfg.n_max, 12);
  EXPECT_EQ(cfg.jobs, 3);
  try {
    parse_config("n_max = 3\ncolour = red\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("config:2"), std::string::npos);
  }
  EXPECT_THROW(parse_config("n_max = -4"), ConfigError);
  EXPECT_THROW(parse_config("max_order = two"), ConfigError);
  EXPECT_THROW(parse_config("just text"), ConfigError);
}

TEST(Backend, FencedBlockExtraction) {
  EXPECT_EQ(*extract_lean_block("Plan: use simp.\n```lean\nsimp\nring\n```\nDone."), "simp\nring");
  EXPECT_EQ(*extract_lean_block("```python\nx\n```\n```lean4\nomega\n```"), "omega");
  EXPECT_FALSE(extract_lean_block("no code here"));
  EXPECT_FALSE(extract_lean_block("```lean\nunterminated"));
}

TEST(Backend, NullAlwaysFails) {
  NullBackend b;
  EXPECT_FALSE(b.discharge("True", "").ok);
  EXPECT_EQ(b.capabilities().name, "null");
}

class MockServer {
 public:
  explicit MockServer(std::function<void(const httplib::Request&, httplib::Response&)> handler) {
    server_.Post("/v1/chat", [this, handler](const httplib::Request& req, httplib::Response& res) {
      ++hits;
      last_body = req.body;
      handler(req, res);
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~MockServer() {
    server_.stop();
    thread_.join();
  }
  BackendConfig config() const {
    BackendConfig c;
    c.kind = "http";
    c.endpoint = "http://127.0.0.1:" + std::to_string(port_) + "/v1/chat";
    c.timeout_s = 1;
    c.retries = 1;
    return c;
  }
  std::atomic<int> hits{0};
  std::string last_body;

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

std::string chat_reply(const std::string& content) {
  nlohmann::json j;
  j["choices"] = nlohmann::json::array({{{"message", {{"role", "assistant"}, {"content", content}}}}});
  return j.dump();
}

TEST(Backend, HttpExtractsFencedProofVerbatim) {
  MockServer server([](const httplib::Request&, httplib::Response& res) {
    res.set_content(chat_reply("Plan: clear denominators.\n```lean\n  intro n\n  positivity\n```"),
                    "application/json");
  });
  HttpBackend backend(server.config());
  const auto r = backend.discharge("∀ n : ℕ, (↑n + 1 : ℝ) ≠ 0", "ctx");
  ASSERT_TRUE(r.ok) << r.error;
  EXPECT_EQ(r.proof, "  intro n\n  positivity");
  EXPECT_EQ(r.attempts, 1);
  const auto sent = nlohmann::json::parse(server.last_body);
  EXPECT_EQ(sent["messages"][1]["role"], "user");
  const std::string prompt = sent["messages"][1]["content"];
  EXPECT_NE(prompt.find("∀ n : ℕ, (↑n + 1 : ℝ) ≠ 0"), std::string::npos);
  EXPECT_NE(prompt.find("proof plan"), std::string::npos);
}

TEST(Backend, HttpMalformedReplyIsRetriedThenFails) {
  MockServer server([](const httplib::Request&, httplib::Response& res) {
    res.set_content(chat_reply("I think it is true."), "application/json");
  });
  HttpBackend backend(server.config());
  const auto r = backend.discharge("True", "");
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.attempts, 2);
  EXPECT_EQ(server.hits, 2);
  EXPECT_NE(r.error.find("fenced"), std::string::npos);
}

TEST(Backend, HttpErrorsAndTimeoutsAreFailures) {
  MockServer bad([](const httplib::Request&, httplib::Response& res) {
    res.status = 503;
    res.set_content("busy", "text/plain");
  });
  EXPECT_EQ(HttpBackend(bad.config()).discharge("True", "").error, "HTTP 503");

  MockServer slow([](const httplib::Request&, httplib::Response& res) {
    std::this_thread::sleep_for(std::chrono::milliseconds(2500));
    res.set_content(chat_reply("```lean\nrfl\n```"), "application/json");
  });
  auto cfg = slow.config();
  cfg.retries = 0;
  const auto r = HttpBackend(cfg).discharge("True", "");
  EXPECT_FALSE(r.ok);

  BackendConfig nowhere;
  nowhere.endpoint = "http://127.0.0.1:1/v1";
  nowhere.timeout_s = 1;
  nowhere.retries = 0;
  EXPECT_FALSE(HttpBackend(nowhere).discharge("True", "").ok);
  EXPECT_FALSE(HttpBackend(BackendConfig{}).discharge("True", "").ok);
}

TEST(Numeric, CentralBinomialHandCase) {
  const auto r = numeric_verify(parse_identity(kCentral), 20);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.equal, 21u);
  EXPECT_EQ(r.points[2].lhs, 6);
  EXPECT_EQ(r.points[2].rhs, 6);
}

TEST(Numeric, ParameterSamplesAndNegativeControl) {
  const auto id = parse_identity(kReciprocal);
  const auto r = numeric_verify(id, 12);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.equal, 13u * 5u);
  NumericOptions corrupt;
  corrupt.rhs_offset = 1;
  const auto bad = numeric_verify(id, 12, corrupt);
  EXPECT_FALSE(bad.pass());
  ASSERT_NE(bad.first_unequal(), nullptr);
  EXPECT_EQ(bad.first_unequal()->n, 0);
}

TEST(Numeric, PolesAreSkippedAndReported) {
  const auto r = numeric_verify(parse_identity("params n; sum(k, 0, n, binom(n,k)/(n-3)) = 2^n/(n-3)"), 6);
  EXPECT_EQ(r.skipped, 1u);
  EXPECT_EQ(r.equal, 6u);
  EXPECT_TRUE(r.pass());
  const auto all_poles = numeric_verify(parse_identity("params n; sum(k, 0, n, 1/(n-k)) = 1"), 3);
  EXPECT_EQ(all_poles.skipped, 4u);
  EXPECT_FALSE(all_poles.pass());
}

TEST(GoalQueue, SeenSetAdmitsEachGoalOnce) {
  GoalQueue q;
  const auto g = wz::sketch::make_obligation(wz::sketch::Kind::Side, "h", "x != 0", "x ≠ 0", "test");
  EXPECT_TRUE(q.push(g));
  EXPECT_FALSE(q.push(g));
  EXPECT_EQ(q.pending_count(), 1u);
  EXPECT_TRUE(q.pop());
  EXPECT_FALSE(q.pop());
  EXPECT_FALSE(q.push(g));
  EXPECT_TRUE(q.seen(g.id));
}

TEST(Pipeline, PaperIdentitiesWithNullBackend) {
  TempDir dir;
  const auto a = dir.write("central.wz", kCentral), b = dir.write("reciprocal.wz", kReciprocal);
  Config cfg;
  NullBackend backend;
  const auto report = run_pipeline({a, b}, cfg, backend, dir.path() / "out");
  ASSERT_TRUE(report.all_pass());
  for (const auto& r : report.items) {
    EXPECT_TRUE(r.covered);
    EXPECT_EQ(r.counts.at("discharged"), 0u);
    EXPECT_GT(r.counts.at("open"), 0u);
    EXPECT_TRUE(r.numeric->pass());
    EXPECT_TRUE(fs::exists(r.lean_path));
    const auto m = wz::lean::read_manifest(slurp(r.manifest_path));
    for (const auto& o : m.obligations) EXPECT_EQ(o.status, wz::sketch::Status::Open);
  }
  const std::string json = report_json(report);
  EXPECT_EQ(json.find("kernel_verified"), std::string::npos);
  EXPECT_NE(json.find("Lean kernel not run"), std::string::npos);
}

TEST(Pipeline, DuplicateGoalsProcessedOnce) {
  TempDir dir;
  const auto a = dir.write("a.wz", kCentral), b = dir.write("b.wz", kCentral), c = dir.write("c.wz", kReciprocal);
  CountingBackend backend;
  Config cfg;
  cfg.jobs = 4;
  const auto report = run_pipeline({a, b, c}, cfg, backend, dir.path() / "out");
  EXPECT_EQ(item(report, "b").status, ItemStatus::Duplicate);
  EXPECT_FALSE(fs::exists(dir.path() / "out" / "b.manifest.json"));
  // WZ_aux and ne_zeroB style goals shared by both identities are sent once.
  EXPECT_EQ(static_cast<std::size_t>(backend.calls), report.goals_unique);
  const auto& ra = item(report, "a");
  const auto& rc = item(report, "c");
  EXPECT_LT(report.goals_unique, ra.backend.submitted + rc.backend.submitted);
  EXPECT_EQ(ra.backend.processed + rc.backend.processed, report.goals_unique);
}

TEST(Pipeline, UncoveredIdentityRecordsFailAndEmitsStub) {
  TempDir dir;
  const auto z = dir.write("zero.wz", kZero);
  NullBackend backend;
  const auto report = run_pipeline({z}, Config{}, backend, dir.path() / "out");
  const auto& r = report.items.front();
  EXPECT_EQ(r.status, ItemStatus::Fail);
  EXPECT_FALSE(r.covered);
  const std::string lean = slurp(r.lean_path);
  EXPECT_NE(lean.find(wz::lean::kDirectMarker), std::string::npos);
  EXPECT_EQ(wz::lean::count_sorry(lean), 1u);
  const auto m = wz::lean::read_manifest(slurp(r.manifest_path));
  ASSERT_TRUE(m.direct_goal);
  EXPECT_EQ(m.direct_goal->status, wz::sketch::Status::Failed);
  EXPECT_FALSE(report.all_pass());
}

TEST(Pipeline, DischargedFragmentsAreSplicedAndLinted) {
  TempDir dir;
  const auto a = dir.write("central.wz", kCentral);
  CountingBackend backend;
  const auto report = run_pipeline({a}, Config{}, backend, dir.path() / "out");
  const auto& r = report.items.front();
  ASSERT_EQ(r.status, ItemStatus::Pass);
  EXPECT_GT(r.counts.at("discharged"), 0u);
  const std::string lean = slurp(r.lean_path);
  EXPECT_EQ(wz::lean::count_sorry(lean), r.counts.at("open"));
  EXPECT_TRUE(wz::lean::lint_file(lean).empty());
  const auto m = wz::lean::read_manifest(slurp(r.manifest_path));
  for (const auto& o : m.obligations)
    EXPECT_EQ(o.status == wz::sketch::Status::Discharged, o.goal_lean.find("≠ 0") != std::string::npos) << o.name;

  // A fragment that fails the lint leaves its goal open.
  TempDir dir2;
  CountingBackend cheat;
  cheat.answer = "sorry";
  const auto r2 = run_pipeline({dir2.write("central.wz", kCentral)}, Config{}, cheat, dir2.path() / "out");
  EXPECT_EQ(r2.items.front().counts.at("discharged"), 0u);
}

TEST(Pipeline, IsolationAndJobIndependence) {
  TempDir dir;
  const auto a = dir.write("central.wz", kCentral), b = dir.write("reciprocal.wz", kReciprocal);
  const auto poison = dir.write("poison.wz", "params n; sum(k, 0, n, binom(n,k) = 2^n");
  NullBackend backend;
  Config one;
  Config four;
  four.jobs = 4;
  const auto clean = run_pipeline({a, b}, one, backend, dir.path() / "clean");
  const auto mixed = run_pipeline({poison, a, b}, four, backend, dir.path() / "mixed");
  EXPECT_EQ(item(mixed, "poison").status, ItemStatus::Error);
  EXPECT_EQ(item(mixed, "central").status, ItemStatus::Pass);
  for (const char* f : {"central.lean", "central.manifest.json", "reciprocal.lean", "reciprocal.manifest.json"})
    EXPECT_EQ(slurp(dir.path() / "clean" / f), slurp(dir.path() / "mixed" / f)) << f;
}

TEST(Pipeline, ListsWzFilesSorted) {
  TempDir dir;
  dir.write("b.wz", kCentral);
  dir.write("a.wz", kReciprocal);
  dir.write("notes.txt", "x");
  const auto files = list_inputs(dir.path());
  ASSERT_EQ(files.size(), 2u);
  EXPECT_EQ(files[0].filename(), "a.wz");
}
