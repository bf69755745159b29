#include <cctype>
#include <optional>

#include "wz/parser/identity.hpp"

namespace wz::parse {

namespace {

using sym::Polynomial;
using sym::Rational;

enum class Tok { Int, Name, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    std::size_t j = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Int;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Tok::Name;
    } else if ((c == '>' || c == '<') && i + 1 < src.size() && src[i + 1] == '=') {
      j = i + 2;
      t.kind = Tok::Punct;
    } else if (std::string_view("(),;=+-*/^<>").find(c) != std::string_view::npos) {
      j = i + 1;
      t.kind = Tok::Punct;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    t.text = std::string(src.substr(i, j - i));
    advance(j - i);
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

// Expression value: always a term; also a polynomial when the expression is one.
struct Value {
  HyperTerm term;
  std::optional<Polynomial> poly;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  Identity run() {
    Identity id;
    bool have_params = false;
    while (peek_name("params") || peek_name("assume") || peek_name("case")) {
      const Token kw = next();
      if (kw.text == "params") {
        if (have_params) fail(kw, "duplicate params declaration");
        have_params = true;
        id.params.clear();
        while (peek().kind == Tok::Name) {
          const Token t = next();
          if (is_keyword(t.text)) fail(t, "reserved word '" + t.text + "' used as a name");
          if (std::find(id.params.begin(), id.params.end(), t.text) != id.params.end()) {
            fail(t, "duplicate parameter '" + t.text + "'");
          }
          id.params.push_back(t.text);
        }
        if (id.params.empty()) fail(peek(), "expected parameter names");
        expect(";");
      } else if (kw.text == "assume") {
        pending_assumptions_.push_back(pos_);
        skip_to_semicolon();
      } else {
        const Token which = next();
        if (which.text == "even") {
          id.case_tag = CaseTag::Even;
        } else if (which.text == "odd") {
          id.case_tag = CaseTag::Odd;
        } else {
          fail(which, "expected 'even' or 'odd'");
        }
        expect("(");
        const Token v = next();
        if (v.kind != Tok::Name) fail(v, "expected a name");
        case_var_ = v;
        expect(")");
        expect(";");
      }
    }
    params_ = id.params;
    if (case_var_ && case_var_->text != id.main_var()) fail(*case_var_, "case split must be on the main variable");

    const Token sum = next();
    if (sum.kind != Tok::Name || sum.text != "sum") fail(sum, "expected 'sum'");
    expect("(");
    const Token var = next();
    if (var.kind != Tok::Name || is_keyword(var.text)) fail(var, "expected the summation variable");
    if (std::find(params_.begin(), params_.end(), var.text) != params_.end()) {
      fail(var, "summation variable '" + var.text + "' is also a parameter");
    }
    id.sum_var = var.text;
    universe_ = id.universe();
    expect(",");
    id.lo = bound(false);
    expect(",");
    id.hi = bound(false);
    expect(",");
    id.summand = expr().term;
    expect(")");
    expect("=");
    const Token rhs_at = peek();
    id.rhs = expr().term;
    if (id.rhs.involves(id.sum_var)) fail(rhs_at, "summation variable '" + id.sum_var + "' appears on the right-hand side");
    if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "' after identity");

    // Assumptions are parsed last so they can use the full variable list.
    const std::size_t end = pos_;
    for (std::size_t start : pending_assumptions_) {
      pos_ = start;
      id.assumptions.push_back(constraint());
    }
    pos_ = end;
    return id;
  }

 private:
  static bool is_keyword(const std::string& s) {
    return s == "params" || s == "assume" || s == "case" || s == "sum" || s == "binom" || s == "fact";
  }

  [[noreturn]] static void fail(const Token& t, const std::string& msg) { throw ParseError(msg, t.line, t.column); }

  const Token& peek() const { return toks_[pos_]; }
  bool peek_name(const char* s) const { return peek().kind == Tok::Name && peek().text == s; }
  bool peek_punct(const char* s) const { return peek().kind == Tok::Punct && peek().text == s; }
  Token next() {
    Token t = toks_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }
  void expect(const char* s) {
    if (!peek_punct(s)) {
      fail(peek(), std::string("expected '") + s + "'" + (peek().kind == Tok::End ? " before end of input" : " but found '" + peek().text + "'"));
    }
    ++pos_;
  }
  void skip_to_semicolon() {
    while (peek().kind != Tok::End && !peek_punct(";")) ++pos_;
    expect(";");
  }

  LinearForm linear(const Value& v, const Token& at, const char* what) {
    if (!v.poly) fail(at, std::string("non-linear ") + what + ": not a polynomial");
    auto lf = LinearForm::from_polynomial(*v.poly);
    if (!lf) fail(at, std::string("non-linear ") + what);
    if (!lf->is_integral()) fail(at, std::string(what) + " must have integer coefficients");
    return *lf;
  }

  LinearForm bound(bool) {
    const Token at = peek();
    LinearForm lf = linear(expr(), at, "summation bound");
    if (lf.involves(universe_.front())) fail(at, "summation bound depends on the summation variable");
    return lf;
  }

  LinearForm constraint() {
    const Token at = peek();
    const LinearForm a = linear(expr(), at, "assumption");
    const Token op = next();
    const LinearForm b = linear(expr(), at, "assumption");
    expect(";");
    LinearForm l;
    if (op.text == ">=") {
      l = a - b;
    } else if (op.text == ">") {
      l = a - b - LinearForm(1);
    } else if (op.text == "<=") {
      l = b - a;
    } else if (op.text == "<") {
      l = b - a - LinearForm(1);
    } else {
      fail(op, "expected a comparison operator");
    }
    if (l.involves(universe_.front())) fail(at, "assumption mentions the summation variable");
    return normalize_constraint(l);
  }

  Value from_poly(const Polynomial& p) { return Value{HyperTerm::polynomial(p), p}; }

  Value expr() {
    Value v = term();
    while (peek_punct("+") || peek_punct("-")) {
      const Token op = next();
      const Value w = term();
      if (!v.poly || !w.poly) fail(op, "not hypergeometric: '" + op.text + "' between non-polynomial terms");
      v = from_poly(op.text == "+" ? *v.poly + *w.poly : *v.poly - *w.poly);
    }
    return v;
  }

  Value term() {
    Value v = unary();
    while (peek_punct("*") || peek_punct("/")) {
      const Token op = next();
      const Value w = unary();
      if (op.text == "*") {
        if (v.poly && w.poly) {
          v = from_poly(*v.poly * *w.poly);
        } else {
          v = Value{v.term * w.term, std::nullopt};
        }
      } else {
        if (w.term.is_zero()) fail(op, "division by zero");
        if (v.poly && w.poly && w.poly->is_constant()) {
          v = from_poly(v.poly->scaled(1 / w.poly->constant_value()));
        } else {
          v = Value{v.term / w.term, std::nullopt};
        }
      }
    }
    return v;
  }

  Value unary() {
    bool negate = false;
    if (peek_punct("-")) {
      next();
      negate = true;
    }
    const Token base_at = peek();
    Value v = atom();
    if (peek_punct("^")) {
      const Token op = next();
      const Token exp_at = peek();
      Value e;
      if (peek().kind == Tok::Int || peek().kind == Tok::Name || peek_punct("(")) {
        e = atom();
      } else {
        fail(exp_at, "expected an integer or atom after '^'");
      }
      if (e.poly && e.poly->is_constant()) {
        const Rational x = e.poly->constant_value();
        if (x.get_den() != 1) fail(exp_at, "fractional exponent");
        const long n = x.get_num().get_si();
        if (v.term.is_zero() && n < 0) fail(op, "division by zero");
        Value r{v.term.pow(static_cast<int>(n)), std::nullopt};
        if (v.poly && n >= 0) r.poly = v.poly->pow(static_cast<unsigned>(n));
        v = r;
      } else {
        const LinearForm ex = linear(e, exp_at, "exponent");
        if (!v.poly) fail(base_at, "not hypergeometric: symbolic exponent on a non-polynomial base");
        const Polynomial& b = *v.poly;
        for (const auto& name : {universe_.front(), params_.front()}) {
          if (b.involves(b.require_var(name))) {
            fail(base_at, "not hypergeometric: base of a symbolic power depends on '" + name + "'");
          }
        }
        if (b.is_zero()) fail(base_at, "zero base of a symbolic power");
        v = Value{HyperTerm::power(b, ex), std::nullopt};
      }
    }
    if (negate) {
      v.term = v.term.scaled(-1);
      if (v.poly) v.poly = -*v.poly;
    }
    return v;
  }

  Value atom() {
    const Token t = next();
    if (t.kind == Tok::Int) {
      return from_poly(Polynomial::constant(universe_, Rational(sym::Integer(t.text))));
    }
    if (t.kind == Tok::Name) {
      if (t.text == "binom") {
        expect("(");
        const Token a_at = peek();
        const LinearForm a = linear(expr(), a_at, "binomial argument");
        expect(",");
        const Token b_at = peek();
        const LinearForm b = linear(expr(), b_at, "binomial argument");
        expect(")");
        return Value{HyperTerm::binom(a, b), std::nullopt};
      }
      if (t.text == "fact") {
        expect("(");
        const Token a_at = peek();
        const LinearForm a = linear(expr(), a_at, "factorial argument");
        expect(")");
        return Value{HyperTerm::factorial(a), std::nullopt};
      }
      if (is_keyword(t.text)) fail(t, "unexpected '" + t.text + "'");
      if (std::find(universe_.begin(), universe_.end(), t.text) == universe_.end()) {
        fail(t, "unknown name '" + t.text + "' (declare it with params)");
      }
      return from_poly(Polynomial::variable(universe_, t.text));
    }
    if (t.kind == Tok::Punct && t.text == "(") {
      Value v = expr();
      expect(")");
      return v;
    }
    fail(t, t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  VarList params_;
  VarList universe_;
  std::vector<std::size_t> pending_assumptions_;
  std::optional<Token> case_var_;
};

}  // namespace

VarList Identity::universe() const {
  VarList u{sum_var};
  u.insert(u.end(), params.begin(), params.end());
  return u;
}

bool Identity::operator==(const Identity& o) const {
  return sum_var == o.sum_var && lo == o.lo && hi == o.hi && summand == o.summand && rhs == o.rhs &&
         params == o.params && assumptions == o.assumptions && case_tag == o.case_tag;
}

Identity parse_identity(std::string_view text) {
  Parser p(text);
  return p.run();
}

}  // namespace wz::parse
