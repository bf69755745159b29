#include "wz/orchestrator/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "wz/leanemit/leanemit.hpp"
#include "wz/sketch/lean_expr.hpp"

namespace wz::orch {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using sketch::Kind;
using sketch::ProofSketch;
using sketch::Status;

bool GoalQueue::push(const Obligation& goal) {
  std::lock_guard lock(mu_);
  if (!seen_.insert(goal.id).second) return false;
  pending_.push_back(goal);
  return true;
}

std::optional<Obligation> GoalQueue::pop() {
  std::lock_guard lock(mu_);
  if (pending_.empty()) return std::nullopt;
  Obligation g = std::move(pending_.front());
  pending_.pop_front();
  return g;
}

bool GoalQueue::seen(const std::string& id) const {
  std::lock_guard lock(mu_);
  return seen_.count(id) > 0;
}

void GoalQueue::resolve(const std::string& id, std::string fragment) {
  std::lock_guard lock(mu_);
  fragments_[id] = std::move(fragment);
}

std::optional<std::string> GoalQueue::fragment(const std::string& id) const {
  std::lock_guard lock(mu_);
  auto it = fragments_.find(id);
  if (it == fragments_.end()) return std::nullopt;
  return it->second;
}

std::size_t GoalQueue::seen_count() const {
  std::lock_guard lock(mu_);
  return seen_.size();
}

std::size_t GoalQueue::pending_count() const {
  std::lock_guard lock(mu_);
  return pending_.size();
}

std::string_view item_status_name(ItemStatus s) {
  switch (s) {
    case ItemStatus::Pass: return "pass";
    case ItemStatus::Fail: return "fail";
    case ItemStatus::Error: return "error";
    case ItemStatus::Duplicate: return "duplicate";
  }
  return "?";
}

bool BatchReport::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const IdentityResult& r) {
    return r.status == ItemStatus::Pass || r.status == ItemStatus::Duplicate;
  });
}

namespace {

struct Work {
  fs::path path;
  IdentityResult result;
  std::optional<ProofSketch> sketch;
  std::string identity_key;
  std::string context;
  std::vector<Obligation> goals;  // obligations, or the direct goal
};

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + p.string());
  out << text;
  if (!out) throw Error("cannot write " + p.string());
}

void prepare(Work& w, const Config& cfg) {
  IdentityResult& r = w.result;
  r.file = w.path.string();
  r.theorem = sketch::lean_ident(w.path.stem().string());
  try {
    const auto id = parse::parse_identity(read_file(w.path));
    w.identity_key = parse::print_identity(id);
    w.sketch = sketch::build_sketch(id, cfg.max_order);
    const ProofSketch& sk = *w.sketch;
    r.covered = !sk.uncovered;
    r.diagnostics = sk.diagnostics;
    if (r.covered) {
      r.certificate = sk.certificate_text();
      r.order = sk.relation ? sk.relation->order : 1;
      r.base_n0 = sk.base_case.n0;
      if (sk.base_case.value) r.base_value = sym::to_string(*sk.base_case.value);
      w.goals = sk.obligations;
    } else {
      w.goals = {sk.direct_goal()};
    }
    const auto stated = parse::instantiate_case(sk.original);
    w.context = "theorem " + r.theorem + " " + sketch::lean_binders(stated) + " :\n    " +
                sketch::lean_statement(stated);
    if (r.covered) w.context += "\n-- WZ certificate R(n, k) = " + r.certificate;
    NumericOptions opts;
    opts.param_lo = cfg.param_lo;
    opts.param_hi = cfg.param_hi;
    r.numeric = numeric_verify(id, cfg.n_max, opts);
  } catch (const std::exception& e) {
    r.status = ItemStatus::Error;
    r.error = e.what();
    w.sketch.reset();
  }
}

void finish(Work& w, const Config& cfg, const GoalQueue& queue, const std::set<std::string>& owned,
            const std::set<std::string>& attempted, const fs::path& out_dir) {
  IdentityResult& r = w.result;
  ProofSketch sk = *w.sketch;
  lean::Discharges discharges;
  for (const auto& g : w.goals) {
    ++r.backend.submitted;
    if (owned.count(g.id)) ++r.backend.processed;
    if (auto frag = queue.fragment(g.id)) {
      discharges[g.id] = *frag;
      ++r.backend.discharged;
    } else if (attempted.count(g.id)) {
      ++r.backend.failed;
    }
  }
  for (auto& o : sk.obligations)
    if (discharges.count(o.id)) o.status = Status::Discharged;

  for (Kind k : {Kind::Rec, Kind::Bd, Kind::Side, Kind::Norm, Kind::Case})
    r.counts[std::string(sketch::kind_name(k))] = sk.count(k);
  std::size_t open = 0;
  for (const auto& o : sk.obligations) open += o.status == Status::Open;
  r.counts["open"] = open;
  r.counts["discharged"] = sk.obligations.size() - open;

  lean::Manifest manifest = lean::make_manifest(sk, r.theorem);
  lean::LeanSketchFile file;
  bool direct_ok = true;
  if (r.covered) {
    file = lean::emit_lean(sk, r.theorem, discharges, cfg.lean);
  } else {
    direct_ok = discharges.count(manifest.direct_goal->id) > 0;
    manifest.direct_goal->status = direct_ok ? Status::Discharged : Status::Failed;
    if (!direct_ok) manifest.diagnostics.push_back("direct proof failed");
    file = lean::emit_direct(sk.original, r.theorem, discharges, cfg.lean);
  }
  const fs::path lean_path = out_dir / (r.theorem + ".lean");
  const fs::path manifest_path = out_dir / (r.theorem + ".manifest.json");
  write_file(lean_path, file.text);
  write_file(manifest_path, lean::write_manifest(manifest));
  r.lean_path = lean_path.string();
  r.manifest_path = manifest_path.string();
  if (!direct_ok) r.diagnostics.push_back("direct proof failed");

  const bool base_ok = !r.covered || (r.base_value && *r.base_value == "1");
  r.status = (direct_ok && base_ok && r.numeric && r.numeric->pass()) ? ItemStatus::Pass : ItemStatus::Fail;
}

}  // namespace

BatchReport run_pipeline(const std::vector<fs::path>& inputs, const Config& cfg, ProverBackend& backend,
                         const fs::path& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error("cannot create " + out_dir.string() + ": " + ec.message());

  std::vector<Work> work(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) work[i].path = inputs[i];
  parallel_for(work.size(), cfg.jobs, [&](std::size_t i) { prepare(work[i], cfg); });

  // Enqueue in input order so ownership of shared goals is deterministic.
  GoalQueue queue;
  std::map<std::string, std::string> first_file;
  std::map<std::string, std::string> context_of;
  std::vector<std::set<std::string>> owned(work.size());
  for (std::size_t i = 0; i < work.size(); ++i) {
    Work& w = work[i];
    if (!w.sketch) continue;
    auto [it, fresh] = first_file.emplace(w.identity_key, w.result.file);
    if (!fresh) {
      w.result.status = ItemStatus::Duplicate;
      w.result.duplicate_of = it->second;
      w.sketch.reset();
      continue;
    }
    for (const auto& g : w.goals) {
      if (queue.push(g)) {
        owned[i].insert(g.id);
        context_of[g.id] = w.context;
      }
    }
  }

  std::mutex attempted_mu;
  std::set<std::string> attempted;
  const std::size_t unique = queue.pending_count();
  parallel_for(unique, cfg.jobs, [&](std::size_t) {
    auto goal = queue.pop();
    if (!goal) return;
    DischargeResult res;
    try {
      res = backend.discharge(goal->goal_lean, context_of.at(goal->id));
    } catch (const std::exception& e) {
      res.ok = false;
      res.error = e.what();
    }
    if (res.ok && lean::lint_fragment(res.proof).empty()) queue.resolve(goal->id, res.proof);
    std::lock_guard lock(attempted_mu);
    attempted.insert(goal->id);
  });

  parallel_for(work.size(), cfg.jobs, [&](std::size_t i) {
    Work& w = work[i];
    if (!w.sketch) return;
    try {
      finish(w, cfg, queue, owned[i], attempted, out_dir);
    } catch (const std::exception& e) {
      w.result.status = ItemStatus::Error;
      w.result.error = e.what();
    }
  });

  BatchReport report;
  report.backend = backend.capabilities().name;
  report.goals_unique = queue.seen_count();
  for (const auto& id : attempted) report.goals_discharged += queue.fragment(id).has_value();
  for (auto& w : work) report.items.push_back(std::move(w.result));
  return report;
}

std::vector<fs::path> list_inputs(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".wz") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

json numeric_json(const NumericReport& n) {
  json j;
  j["n_max"] = n.n_max;
  j["pass"] = n.pass();
  j["equal"] = n.equal;
  j["unequal"] = n.unequal;
  j["skipped"] = n.skipped;
  j["inadmissible"] = n.inadmissible;
  json skipped = json::array();
  for (const auto& p : n.points) {
    if (p.outcome != NumericPoint::Outcome::Skipped) continue;
    json s;
    s["n"] = p.n;
    for (const auto& [k, v] : p.params) s["params"][k] = v.get_str();
    s["reason"] = p.note;
    skipped.push_back(s);
  }
  j["skipped_points"] = skipped;
  if (const auto* bad = n.first_unequal()) {
    json b;
    b["n"] = bad->n;
    for (const auto& [k, v] : bad->params) b["params"][k] = v.get_str();
    b["lhs"] = bad->lhs.get_str();
    b["rhs"] = bad->rhs.get_str();
    j["first_unequal"] = b;
  } else {
    j["first_unequal"] = nullptr;
  }
  return j;
}

}  // namespace

std::string report_json(const BatchReport& report) {
  json j;
  j["tool_version"] = std::string(lean::kToolVersion);
  j["backend"] = report.backend;
  j["verification"] = "exact numeric check and structural lint only; Lean kernel not run";
  std::size_t passed = 0, failed = 0, duplicates = 0;
  for (const auto& r : report.items) {
    if (r.status == ItemStatus::Pass) ++passed;
    else if (r.status == ItemStatus::Duplicate) ++duplicates;
    else ++failed;
  }
  j["summary"] = {{"identities", report.items.size()},
                  {"passed", passed},
                  {"failed", failed},
                  {"duplicates", duplicates},
                  {"goals_unique", report.goals_unique},
                  {"goals_discharged", report.goals_discharged}};
  json items = json::array();
  for (const auto& r : report.items) {
    json it;
    it["file"] = r.file;
    it["theorem"] = r.theorem;
    it["status"] = std::string(item_status_name(r.status));
    if (!r.error.empty()) it["error"] = r.error;
    if (r.status == ItemStatus::Duplicate) it["duplicate_of"] = r.duplicate_of;
    if (r.status == ItemStatus::Duplicate || !r.numeric) {
      items.push_back(it);
      continue;
    }
    it["covered"] = r.covered;
    it["certificate"] = r.certificate.empty() ? json(nullptr) : json(r.certificate);
    it["order"] = r.order;
    if (r.base_n0) {
      it["base_case"] = {{"n0", *r.base_n0}, {"value", r.base_value ? json(*r.base_value) : json(nullptr)}};
    } else {
      it["base_case"] = nullptr;
    }
    json counts = json::object();
    for (const auto& [k, v] : r.counts) counts[k] = v;
    it["obligations"] = counts;
    it["numeric_verify"] = r.numeric ? numeric_json(*r.numeric) : json(nullptr);
    it["backend"] = {{"submitted", r.backend.submitted},
                     {"processed", r.backend.processed},
                     {"discharged", r.backend.discharged},
                     {"failed", r.backend.failed}};
    it["diagnostics"] = r.diagnostics;
    it["outputs"] = {{"lean", r.lean_path}, {"manifest", r.manifest_path}};
    items.push_back(it);
  }
  j["identities"] = items;
  return j.dump(2) + "\n";
}

}  // namespace wz::orch
