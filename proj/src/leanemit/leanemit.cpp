#include "wz/leanemit/leanemit.hpp"

#include <regex>

#include "wz/sketch/lean_expr.hpp"

namespace wz::lean {

using sketch::Kind;

namespace {

const std::string kIndent = "    ";
const std::string kRule = kIndent + "--------------------------------------------------------------------\n";

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    out.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

std::string indent_block(std::string_view proof, const std::string& indent) {
  std::string out;
  for (auto line : lines_of(proof)) {
    if (trim(line).empty()) continue;
    out += indent;
    out += line;
    out += '\n';
  }
  return out;
}

// Shortest common indentation is stripped so fragments can be re-indented.
std::string dedent(std::string_view proof) {
  std::size_t common = std::string::npos;
  for (auto line : lines_of(proof)) {
    if (trim(line).empty()) continue;
    common = std::min(common, line.find_first_not_of(' '));
  }
  std::string out;
  for (auto line : lines_of(proof)) {
    if (trim(line).empty()) continue;
    out += line.substr(common == std::string::npos ? 0 : common);
    out += '\n';
  }
  return out;
}

class Writer {
 public:
  Writer(const Discharges& d, std::map<std::string, Span>& spans) : discharges_(d), spans_(spans) {}

  void raw(std::string_view s) { out_ += s; }
  void line(std::string_view s) {
    out_ += kIndent;
    out_ += s;
    out_ += '\n';
  }
  void section(std::string_view title, std::initializer_list<std::string_view> more = {}) {
    out_ += '\n';
    out_ += kRule;
    out_ += kIndent + "-- ";
    out_ += title;
    out_ += '\n';
    for (auto m : more) {
      out_ += kIndent + "--     ";
      out_ += m;
      out_ += '\n';
    }
    out_ += kRule;
  }
  void obligation(const Obligation& o) {
    line("have " + o.name + " : " + o.goal_lean + " := by");
    placeholder(o.id, kTaskMarker, kIndent + "  ");
  }
  void placeholder(const std::string& id, std::string_view marker, const std::string& indent) {
    auto it = discharges_.find(id);
    if (it != discharges_.end()) {
      out_ += indent + std::string(kDischargedMarker) + " " + id + "\n";
      out_ += indent_block(dedent(it->second), indent);
      return;
    }
    const std::size_t begin = out_.size();
    out_ += indent + std::string(marker) + " " + id + "\n";
    out_ += indent + "sorry\n";
    spans_[id] = Span{begin, out_.size()};
  }
  std::string take() { return std::move(out_); }

 private:
  const Discharges& discharges_;
  std::map<std::string, Span>& spans_;
  std::string out_;
};

std::string header_text(const LeanConfig& cfg) {
  std::string h = "-- Lean toolchain: " + cfg.toolchain + "\n";
  for (const auto& imp : cfg.imports) h += "import " + imp + "\n";
  if (!cfg.opens.empty()) h += cfg.opens + "\n";
  return h;
}

std::string one_line(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  for (auto& c : s)
    if (c == '\n') c = ' ';
  return s;
}

// " (by omega)" once per hypothesis on the main variable.
std::string hyp_args(const parse::Identity& id) {
  std::string out;
  for (const auto& a : id.assumptions)
    if (a.involves(id.main_var())) out += " (by omega)";
  return out;
}

int section_of(const Obligation& o) {
  switch (o.kind) {
    case Kind::Bd:
    case Kind::Case: return 2;
    case Kind::Norm: return 3;
    case Kind::Rec: return o.provenance == "recurrence_solution" ? 6 : 5;
    case Kind::Side: break;
  }
  if (o.provenance == "ratio_lemma") return 4;
  if (o.provenance == "wz_invariant") return 5;
  if (o.provenance == "base_case") return 6;
  return 1;
}

}  // namespace

LeanSketchFile emit_lean(const ProofSketch& sk, const std::string& theorem_name, const Discharges& discharges,
                         const LeanConfig& cfg) {
  if (sk.uncovered) throw PreconditionError("emit_lean needs a covered sketch");
  LeanSketchFile file;
  file.theorem_name = theorem_name;
  file.header = header_text(cfg);
  Writer w(discharges, file.placeholder_map);

  const parse::Identity& id = sk.identity;
  const parse::Identity stated = parse::instantiate_case(sk.original);
  const auto order = sketch::display_order(id);
  const std::string& n = id.main_var();
  const std::string& k = id.sum_var;
  const std::string range = "Finset.range (" + sketch::lean_nat(id.hi + sym::LinearForm(1)) + ")";

  w.raw(file.header);
  w.raw("\n-- " + one_line(parse::print_identity(sk.original)) + "\n");
  w.raw("theorem " + theorem_name + " " + sketch::lean_binders(stated) + " :\n");
  w.raw(kIndent + sketch::lean_statement(stated) + " := by\n");

  std::vector<const Obligation*> by_section[8];
  for (const auto& o : sk.obligations) by_section[section_of(o)].push_back(&o);
  auto emit_all = [&](int s) {
    for (const auto* o : by_section[s]) w.obligation(*o);
  };

  w.section("(0) WZ-style normalization: summand A, target B, normalized term",
            {"F = A/B and its sum f; certificate R and companion G = R*F."});
  w.line("let A : ℕ → ℕ → ℝ := fun " + n + " " + k + " => " + sketch::lean_term(id.summand, order));
  w.line("let B : ℕ → ℝ := fun " + n + " => " + sketch::lean_term(id.rhs, order));
  w.line("let F : ℕ → ℕ → ℝ := fun " + n + " " + k + " => A " + n + " " + k + " / B " + n);
  w.line("let f : ℕ → ℝ := fun " + n + " => ∑ " + k + " ∈ " + range + ", F " + n + " " + k);
  w.line("let R : ℕ → ℕ → ℝ := fun " + n + " " + k + " => (" + sk.certificate_text() + " : ℝ)");
  w.line("let G : ℕ → ℕ → ℝ := fun " + n + " " + k + " => R " + n + " " + k + " * F " + n + " " + k);

  w.section("(1) Non-vanishing side conditions for field_simp and division.");
  emit_all(1);
  w.section("(2) Boundary terms of the telescoping sum and parity cases.");
  emit_all(2);
  w.section("(3) Normalization lemma: sum (A/B) = 1 <-> sum A = B.");
  emit_all(3);
  w.section("(4) Ratio lemmas A(n,k+1)/A(n,k), A(n+1,k)/A(n,k), B(n+1)/B(n).");
  emit_all(4);
  w.section("(5) WZ invariant and telescoping step f(n+1) - f(n) = 0.");
  emit_all(5);
  w.section("(6) Base case; f is constant.");
  emit_all(6);

  const int n0 = sk.base_case.n0;
  const std::string args = hyp_args(id);
  const bool plain = args.empty() && n0 == 0;
  std::string step3_args;
  if (!sk.relation) {
    if (plain) {
      w.line("have Step3 : ∀ " + n + " : ℕ, f " + n + " = 1 := by");
      w.line("  intro " + n);
      w.line("  induction " + n + " with");
      w.line("  | zero => exact base_case");
      w.line("  | succ " + n + " ih => exact (sub_eq_zero.mp (Step2 " + n + ")).trans ih");
    } else {
      w.line("have Step3 : ∀ " + n + " : ℕ, " + std::to_string(n0) + " ≤ " + n + " → f " + n + " = 1 := by");
      w.line("  intro " + n + " hn");
      w.line("  induction " + n + ", hn using Nat.le_induction with");
      w.line("  | base => exact base_case");
      w.line("  | succ " + n + " hn ih => exact (sub_eq_zero.mp (Step2 " + n + args + ")).trans ih");
      step3_args = " (by omega)";
    }
  } else {
    step3_args = args;
  }

  w.section("(7) Unnormalize back to the original statement.");
  for (const auto* o : by_section[3])
    if (o->provenance == "range_transform") w.line("rw [" + o->name + " " + n + args + "]");
  w.line("exact (WZ_aux " + n + " A B (ne_zeroB " + n + args + ")).mp (Step3 " + n + step3_args + ")");

  file.text = w.take();
  return file;
}

LeanSketchFile emit_direct(const parse::Identity& original, const std::string& theorem_name,
                           const Discharges& discharges, const LeanConfig& cfg) {
  LeanSketchFile file;
  file.theorem_name = theorem_name;
  file.header = header_text(cfg);
  Writer w(discharges, file.placeholder_map);
  const parse::Identity id = parse::range_normalize(parse::instantiate_case(original)).first;
  const Obligation goal = sketch::direct_goal(original);
  w.raw(file.header);
  w.raw("\n-- " + one_line(parse::print_identity(original)) + "\n");
  w.raw("theorem " + theorem_name + " " + sketch::lean_binders(id) + " :\n");
  w.raw(kIndent + goal.goal_lean + " := by\n");
  w.placeholder(goal.id, kDirectMarker, kIndent);
  file.text = w.take();
  return file;
}

std::string assemble(const std::string& text, const Discharges& fragments) {
  std::string out = text;
  for (const auto& [id, proof] : fragments) {
    std::size_t at = std::string::npos;
    for (auto marker : {kTaskMarker, kDirectMarker}) {
      at = out.find(std::string(marker) + " " + id + "\n");
      if (at != std::string::npos) break;
    }
    if (at == std::string::npos) {
      if (out.find(std::string(kDischargedMarker) + " " + id + "\n") != std::string::npos) continue;
      throw Error("assemble: no placeholder for obligation " + id);
    }
    const std::size_t line_begin = out.rfind('\n', at) + 1;
    const std::string indent = out.substr(line_begin, at - line_begin);
    const std::size_t sorry_line = out.find('\n', at) + 1;
    const std::size_t end = out.find('\n', sorry_line) + 1;
    if (trim(std::string_view(out).substr(sorry_line, end - sorry_line)) != "sorry")
      throw Error("assemble: malformed placeholder for obligation " + id);
    const std::string block =
        indent + std::string(kDischargedMarker) + " " + id + "\n" + indent_block(dedent(proof), indent);
    out.replace(line_begin, end - line_begin, block);
  }
  return out;
}

std::size_t count_sorry(std::string_view text) {
  std::size_t n = 0;
  for (auto line : lines_of(text))
    if (trim(line) == "sorry") ++n;
  return n;
}

std::vector<std::string> placeholder_ids(std::string_view text) {
  std::vector<std::string> out;
  for (auto line : lines_of(text)) {
    const auto t = trim(line);
    for (auto marker : {kTaskMarker, kDirectMarker})
      if (t.starts_with(marker) && t.size() > marker.size() + 1) out.emplace_back(t.substr(marker.size() + 1));
  }
  return out;
}

namespace {

void check_brackets(std::string_view text, std::vector<std::string>& problems) {
  std::string stack;
  int line_no = 1;
  for (auto line : lines_of(text)) {
    const auto comment = line.find("--");
    for (char c : line.substr(0, comment)) {
      if (c == '(' || c == '[' || c == '{') stack.push_back(c);
      if (c == ')' || c == ']' || c == '}') {
        const char open = c == ')' ? '(' : c == ']' ? '[' : '{';
        if (stack.empty() || stack.back() != open) {
          problems.push_back("line " + std::to_string(line_no) + ": unbalanced '" + std::string(1, c) + "'");
          return;
        }
        stack.pop_back();
      }
    }
    ++line_no;
  }
  if (!stack.empty()) problems.push_back("unclosed '" + std::string(1, stack.back()) + "'");
}

}  // namespace

std::vector<std::string> lint_file(std::string_view text) {
  std::vector<std::string> problems;
  check_brackets(text, problems);
  if (text.find("\ntheorem ") == std::string_view::npos) problems.push_back("missing theorem");
  if (text.find(":= by\n") == std::string_view::npos) problems.push_back("missing ':= by'");
  if (text.find('\t') != std::string_view::npos) problems.push_back("tab character");
  static const std::regex sum_re("∑ [A-Za-z_][A-Za-z0-9_']* ∈ Finset\\.(range|Icc) ");
  std::size_t sums = 0, good = 0;
  for (auto line : lines_of(text)) {
    const std::string s(line.substr(0, line.find("--")));
    for (std::size_t p = s.find("∑"); p != std::string::npos; p = s.find("∑", p + 1)) ++sums;
    good += std::distance(std::sregex_iterator(s.begin(), s.end(), sum_re), std::sregex_iterator());
  }
  if (good != sums) problems.push_back("sum not rendered over a Finset range");
  if (placeholder_ids(text).size() != count_sorry(text)) problems.push_back("placeholder and sorry counts differ");
  return problems;
}

std::vector<std::string> lint_fragment(std::string_view proof) {
  std::vector<std::string> problems;
  if (trim(proof).empty()) problems.push_back("empty proof");
  static const std::regex bad("\\b(sorry|admit)\\b");
  const std::string s(proof);
  if (std::regex_search(s, bad)) problems.push_back("proof uses sorry or admit");
  if (s.find("theorem ") != std::string::npos || s.find("import ") != std::string::npos)
    problems.push_back("proof must be a tactic block");
  check_brackets(proof, problems);
  return problems;
}

}  // namespace wz::lean
