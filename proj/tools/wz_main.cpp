// wz: WZ certificates, proof sketches and Lean templates from identity files.
#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wz/orchestrator/pipeline.hpp"
#include "wz/sketch/sketch.hpp"

namespace fs = std::filesystem;
using namespace wz;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

parse::Identity load_identity(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse::parse_identity(ss.str());
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
}

int cmd_sketch(const std::string& file, const orch::Config& cfg) {
  const auto sk = sketch::build_sketch(load_identity(file), cfg.max_order);
  std::string printed = parse::print_identity(sk.original);
  while (!printed.empty() && printed.back() == '\n') printed.pop_back();
  std::cout << printed << "\n";
  std::cout << "F = " << sk.F.to_string() << "\n";
  if (sk.uncovered) {
    std::cout << "covered: no\n";
  } else {
    std::cout << "covered: yes\n";
    std::cout << "certificate R = " << sk.certificate_text() << "\n";
    if (sk.relation) std::cout << "order: " << sk.relation->order << "\n";
    std::cout << "base case: n0 = " << sk.base_case.n0 << ", value = "
              << (sk.base_case.value ? sym::to_string(*sk.base_case.value) : "unknown") << "\n";
  }
  for (const auto& d : sk.diagnostics) std::cout << "diagnostic: " << d << "\n";
  const auto& obligations = sk.uncovered ? std::vector<sketch::Obligation>{sk.direct_goal()} : sk.obligations;
  std::cout << "obligations: " << obligations.size() << "\n";
  for (const auto& o : obligations) {
    std::cout << "  [" << sketch::kind_name(o.kind) << "] " << o.name << " " << o.id << " ("
              << o.provenance << ")\n    " << o.goal_lean << "\n";
  }
  return sk.uncovered ? kFailed : kOk;
}

int cmd_certify(const std::string& file, const orch::Config& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const auto sk = sketch::certify(load_identity(file), cfg.max_order);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (sk.uncovered) {
    std::cout << "no certificate up to order " << cfg.max_order << "\n";
    for (const auto& d : sk.diagnostics) std::cout << "diagnostic: " << d << "\n";
    return kFailed;
  }
  bool zero = false;
  if (sk.pair) {
    zero = tele::verify_wz_equation(sk.F, sk.pair->R, sk.vars()).is_zero();
    std::cout << "WZ pair, order 1\n";
  } else {
    zero = tele::telescope_residual(sk.F, *sk.relation, sk.vars()).is_zero();
    std::cout << "telescoping relation, order " << sk.relation->order << "\n";
    for (std::size_t j = 0; j < sk.relation->coeffs.size(); ++j)
      std::cout << "a_" << j << " = " << sk.relation->coeffs[j].to_string() << "\n";
  }
  std::cout << "R = " << sk.certificate_text() << "\n";
  std::cout << "residual: " << (zero ? "0" : "nonzero") << "\n";
  std::cout << "time: " << static_cast<long>(ms) << " ms\n";
  return zero ? kOk : kFailed;
}

int cmd_verify(const std::string& file, const orch::Config& cfg) {
  orch::NumericOptions opts;
  opts.param_lo = cfg.param_lo;
  opts.param_hi = cfg.param_hi;
  const auto report = orch::numeric_verify(load_identity(file), cfg.n_max, opts);
  std::cout << "n <= " << report.n_max << ": " << report.equal << " equal, " << report.unequal << " unequal, "
            << report.skipped << " skipped, " << report.inadmissible << " inadmissible\n";
  for (const auto& p : report.points) {
    if (p.outcome != orch::NumericPoint::Outcome::Skipped) continue;
    std::cout << "skipped n=" << p.n;
    for (const auto& [k, v] : p.params)
      if (k != "n") std::cout << " " << k << "=" << v.get_str();
    std::cout << ": " << p.note << "\n";
  }
  if (const auto* bad = report.first_unequal()) {
    std::cout << "unequal at n=" << bad->n;
    for (const auto& [k, v] : bad->params)
      if (k != "n") std::cout << " " << k << "=" << v.get_str();
    std::cout << ": lhs " << bad->lhs.get_str() << ", rhs " << bad->rhs.get_str() << "\n";
  }
  std::cout << (report.pass() ? "PASS" : "FAIL") << "\n";
  return report.pass() ? kOk : kFailed;
}

void print_item(const orch::IdentityResult& r) {
  std::cout << orch::item_status_name(r.status) << "  " << r.file;
  if (r.status == orch::ItemStatus::Duplicate) std::cout << " (same identity as " << r.duplicate_of << ")";
  if (!r.error.empty()) std::cout << ": " << r.error;
  std::cout << "\n";
  for (const auto& d : r.diagnostics) std::cout << "    " << d << "\n";
}

int run_batch(const std::vector<fs::path>& inputs, const orch::Config& cfg, const fs::path& out_dir,
              const std::string& report_path) {
  auto backend = orch::make_backend(cfg.backend);
  const auto report = orch::run_pipeline(inputs, cfg, *backend, out_dir);
  for (const auto& r : report.items) print_item(r);
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + report_path);
    out << orch::report_json(report);
  }
  return report.all_pass() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"WZ certificates, proof sketches and Lean templates"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path, "key = value configuration file")->check(CLI::ExistingFile);
  int max_order = 0;
  app.add_option("--max-order", max_order, "largest telescoping order tried")->check(CLI::Range(1, 8));

  std::string file;
  auto* sketch_cmd = app.add_subcommand("sketch", "print the proof sketch and its obligations");
  sketch_cmd->add_option("file", file)->required();

  auto* certify_cmd = app.add_subcommand("certify", "print the certificate and its residual");
  certify_cmd->add_option("file", file)->required();

  int n_max = -1;
  auto* verify_cmd = app.add_subcommand("verify", "exact numeric check of the identity");
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_option("--n-max", n_max, "largest n checked")->check(CLI::Range(0, 200));

  std::string out_dir = ".";
  auto* emit_cmd = app.add_subcommand("emit", "write the Lean file and manifest");
  emit_cmd->add_option("file", file)->required();
  emit_cmd->add_option("-o,--out", out_dir, "output directory");

  std::string dir, backend, report_path;
  int jobs = 0;
  auto* batch_cmd = app.add_subcommand("batch", "process every .wz file of a directory");
  batch_cmd->add_option("dir", dir)->required()->check(CLI::ExistingDirectory);
  batch_cmd->add_option("--backend", backend, "prover backend")->check(CLI::IsMember({"null", "http"}));
  batch_cmd->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::Range(1, 256));
  batch_cmd->add_option("--report", report_path, "JSON report path");
  batch_cmd->add_option("-o,--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    orch::Config cfg;
    if (!config_path.empty()) cfg = orch::load_config(config_path);
    if (max_order > 0) cfg.max_order = max_order;
    if (n_max >= 0) cfg.n_max = n_max;
    if (!backend.empty()) cfg.backend.kind = backend;
    if (jobs > 0) cfg.jobs = jobs;

    if (*sketch_cmd) return cmd_sketch(file, cfg);
    if (*certify_cmd) return cmd_certify(file, cfg);
    if (*verify_cmd) return cmd_verify(file, cfg);
    if (*emit_cmd) {
      load_identity(file);  // report syntax errors as usage errors
      return run_batch({file}, cfg, out_dir, "");
    }
    return run_batch(orch::list_inputs(dir), cfg, out_dir, report_path);
  } catch (const std::exception& e) {
    std::cerr << "wz: " << e.what() << "\n";
    return kUsage;
  }
}
