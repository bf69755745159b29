#include <json.hpp>

#include "wz/leanemit/leanemit.hpp"

namespace wz::lean {

using json = nlohmann::ordered_json;
using sketch::Kind;
using sketch::Status;

namespace {

json obligation_json(const Obligation& o, bool with_kind) {
  json j;
  j["id"] = o.id;
  if (with_kind) j["kind"] = sketch::kind_name(o.kind);
  j["name"] = o.name;
  j["goal_internal"] = o.goal_internal;
  j["goal_lean"] = o.goal_lean;
  j["status"] = sketch::status_name(o.status);
  j["provenance"] = o.provenance;
  return j;
}

json body_json(const Manifest& m) {
  json j;
  j["schema"] = m.schema;
  j["tool_version"] = m.tool_version;
  j["theorem"] = m.theorem;
  j["identity"] = m.identity;
  j["covered"] = m.covered;
  j["certificate"] = m.certificate ? json(*m.certificate) : json(nullptr);
  j["order"] = m.order;
  if (m.base_case) {
    j["base_case"] = {{"n0", m.base_case->n0},
                      {"value", m.base_case->value ? json(*m.base_case->value) : json(nullptr)}};
  } else {
    j["base_case"] = nullptr;
  }
  j["diagnostics"] = m.diagnostics;
  j["obligations"] = json::array();
  for (const auto& o : m.obligations) j["obligations"].push_back(obligation_json(o, true));
  j["direct_goal"] = m.direct_goal ? obligation_json(*m.direct_goal, false) : json(nullptr);
  return j;
}

std::string hash_of(const json& body) { return sketch::fnv1a_hex(body.dump(2)); }

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ManifestError("manifest field '" + path + "': " + what);
}

const json& field(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) fail(path.empty() ? key : path + "." + key, "missing");
  return obj.at(key);
}

std::string get_string(const json& obj, const std::string& path, const char* key) {
  const json& v = field(obj, path, key);
  if (!v.is_string()) fail(path.empty() ? key : path + "." + key, "expected string");
  return v.get<std::string>();
}

int get_int(const json& obj, const std::string& path, const char* key) {
  const json& v = field(obj, path, key);
  if (!v.is_number_integer()) fail(path.empty() ? key : path + "." + key, "expected integer");
  return v.get<int>();
}

void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) fail(path, "expected object");
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) fail(path.empty() ? k : path + "." + k, "unknown field");
  }
}

Obligation read_obligation(const json& j, const std::string& path, bool with_kind) {
  if (with_kind) {
    check_keys(j, path, {"id", "kind", "name", "goal_internal", "goal_lean", "status", "provenance"});
  } else {
    check_keys(j, path, {"id", "name", "goal_internal", "goal_lean", "status", "provenance"});
  }
  Obligation o;
  o.id = get_string(j, path, "id");
  if (with_kind) {
    auto kind = sketch::parse_kind(get_string(j, path, "kind"));
    if (!kind) fail(path + ".kind", "unknown kind");
    o.kind = *kind;
  } else {
    o.kind = Kind::Rec;
  }
  o.name = get_string(j, path, "name");
  o.goal_internal = get_string(j, path, "goal_internal");
  o.goal_lean = get_string(j, path, "goal_lean");
  auto status = sketch::parse_status(get_string(j, path, "status"));
  if (!status) fail(path + ".status", "unknown status");
  o.status = *status;
  o.provenance = get_string(j, path, "provenance");
  if (o.id != sketch::fnv1a_hex(o.goal_internal)) fail(path + ".id", "does not match goal_internal");
  return o;
}

std::string position(std::string_view bytes, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < bytes.size(); ++i) {
    if (bytes[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

}  // namespace

Manifest make_manifest(const ProofSketch& sk, const std::string& theorem_name) {
  Manifest m;
  m.theorem = theorem_name;
  m.identity = parse::print_identity(sk.original);
  m.covered = !sk.uncovered;
  if (m.covered) {
    m.certificate = sk.certificate_text();
    m.order = sk.relation ? sk.relation->order : 1;
    Manifest::Base base;
    base.n0 = sk.base_case.n0;
    if (sk.base_case.value) base.value = sym::to_string(*sk.base_case.value);
    m.base_case = base;
  } else {
    m.direct_goal = sk.direct_goal();
  }
  m.diagnostics = sk.diagnostics;
  m.obligations = sk.obligations;
  m.content_hash = hash_of(body_json(m));
  return m;
}

std::string write_manifest(const Manifest& m) {
  json j = body_json(m);
  j["content_hash"] = hash_of(j);
  return j.dump(2) + "\n";
}

Manifest read_manifest(std::string_view bytes) {
  json j;
  try {
    j = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw ManifestError("manifest:" + position(bytes, e.byte) + ": malformed JSON");
  }
  check_keys(j, "", {"schema", "tool_version", "theorem", "identity", "covered", "certificate", "order", "base_case",
                     "diagnostics", "obligations", "direct_goal", "content_hash"});
  Manifest m;
  m.schema = get_int(j, "", "schema");
  if (m.schema != 1) fail("schema", "unsupported version " + std::to_string(m.schema));
  m.tool_version = get_string(j, "", "tool_version");
  m.theorem = get_string(j, "", "theorem");
  m.identity = get_string(j, "", "identity");
  if (!field(j, "", "covered").is_boolean()) fail("covered", "expected boolean");
  m.covered = j["covered"].get<bool>();
  const json& cert = field(j, "", "certificate");
  if (cert.is_string()) {
    m.certificate = cert.get<std::string>();
  } else if (!cert.is_null()) {
    fail("certificate", "expected string or null");
  }
  m.order = get_int(j, "", "order");
  const json& base = field(j, "", "base_case");
  if (!base.is_null()) {
    check_keys(base, "base_case", {"n0", "value"});
    Manifest::Base b;
    b.n0 = get_int(base, "base_case", "n0");
    const json& v = field(base, "base_case", "value");
    if (v.is_string()) {
      b.value = v.get<std::string>();
    } else if (!v.is_null()) {
      fail("base_case.value", "expected string or null");
    }
    m.base_case = b;
  }
  const json& diags = field(j, "", "diagnostics");
  if (!diags.is_array()) fail("diagnostics", "expected array");
  for (std::size_t i = 0; i < diags.size(); ++i) {
    if (!diags[i].is_string()) fail("diagnostics[" + std::to_string(i) + "]", "expected string");
    m.diagnostics.push_back(diags[i].get<std::string>());
  }
  const json& obs = field(j, "", "obligations");
  if (!obs.is_array()) fail("obligations", "expected array");
  for (std::size_t i = 0; i < obs.size(); ++i)
    m.obligations.push_back(read_obligation(obs[i], "obligations[" + std::to_string(i) + "]", true));
  const json& direct = field(j, "", "direct_goal");
  if (!direct.is_null()) m.direct_goal = read_obligation(direct, "direct_goal", false);
  m.content_hash = get_string(j, "", "content_hash");
  if (m.content_hash != hash_of(body_json(m))) fail("content_hash", "does not match content");
  return m;
}

}  // namespace wz::lean
