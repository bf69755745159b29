#include "wz/symcore/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wz::sym {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

std::shared_ptr<const VarList> empty_vars() {
  static const auto empty = std::make_shared<const VarList>();
  return empty;
}

int total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Graded-lex comparison in variable-list order: true if a < b.
bool grlex_less(const Exponents& a, const Exponents& b) {
  const int ta = total(a);
  const int tb = total(b);
  if (ta != tb) return ta < tb;
  return a < b;
}

}  // namespace

Polynomial::Polynomial() : vars_(empty_vars()) {}

Polynomial::Polynomial(VarList vars) : vars_(std::make_shared<const VarList>(std::move(vars))) {}

Polynomial::Polynomial(std::shared_ptr<const VarList> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != vars_->size()) throw VariableMismatch("exponent vector length mismatch");
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

Polynomial Polynomial::constant(VarList vars, const Rational& c) {
  Polynomial p(std::move(vars));
  if (c != 0) p.terms_.emplace(Exponents(p.num_vars(), 0), c);
  return p;
}

Polynomial Polynomial::variable(VarList vars, std::string_view name) {
  Polynomial p(std::move(vars));
  Exponents e(p.num_vars(), 0);
  e[p.require_var(name)] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

std::optional<std::size_t> Polynomial::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if ((*vars_)[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Polynomial::require_var(std::string_view name) const {
  auto idx = var_index(name);
  if (!idx) throw VariableMismatch("unknown variable '" + std::string(name) + "'");
  return *idx;
}

bool Polynomial::same_vars(const Polynomial& other) const {
  return vars_ == other.vars_ || *vars_ == *other.vars_;
}

void Polynomial::check_same_vars(const Polynomial& o, const char* op) const {
  if (!same_vars(o)) throw VariableMismatch(std::string("variable-list mismatch in ") + op);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_value() const {
  auto it = terms_.find(Exponents(num_vars(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree(std::size_t var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return terms_.empty() ? -1 : d;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total(e));
  return d;
}

Polynomial Polynomial::coeff(std::size_t var, int d) const {
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (e[var] != d) continue;
    Exponents f = e;
    f[var] = 0;
    out.emplace(std::move(f), c);
  }
  return Polynomial(vars_, std::move(out));
}

Polynomial Polynomial::leading_coeff(std::size_t var) const { return coeff(var, degree(var)); }

Polynomial::TermMap::const_iterator Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (grlex_less(best->first, it->first)) best = it;
  }
  return best;
}

Exponents Polynomial::leading_monomial() const { return leading_term()->first; }

Rational Polynomial::leading_coefficient() const { return leading_term()->second; }

Polynomial Polynomial::operator-() const {
  TermMap out = terms_;
  for (auto& [e, c] : out) c = -c;
  return Polynomial(vars_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_vars(o, "add");
  TermMap out = terms_;
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = out.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return Polynomial(vars_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_vars(o, "mul");
  TermMap out;
  const std::size_t n = num_vars();
  Exponents e(n);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      Rational prod = ca * cb;
      auto [it, inserted] = out.emplace(e, prod);
      if (!inserted) it->second += prod;
    }
  }
  return Polynomial(vars_, std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(vars_, {});
  TermMap out = terms_;
  for (auto& [e, v] : out) v *= c;
  return Polynomial(vars_, std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(vars_, {{Exponents(num_vars(), 0), Rational(1)}});
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& o) const { return same_vars(o) && terms_ == o.terms_; }

Polynomial Polynomial::derivative(std::size_t var) const {
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    f[var] -= 1;
    out.emplace(std::move(f), c * e[var]);
  }
  return Polynomial(vars_, std::move(out));
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  check_same_vars(value, "substitute");
  const int d = degree(var);
  if (d <= 0) return *this;
  // Horner in var over coefficient polynomials.
  Polynomial acc = coeff(var, d);
  for (int i = d - 1; i >= 0; --i) acc = acc * value + coeff(var, i);
  return acc;
}

Polynomial Polynomial::shift(std::size_t var, const Rational& offset) const {
  if (offset == 0) return *this;
  Polynomial x = variable(*vars_, (*vars_)[var]);
  Polynomial target = x + constant(*vars_, offset);
  return substitute(var, Polynomial(vars_, target.terms()));
}

Polynomial Polynomial::evaluate_var(std::size_t var, const Rational& value) const {
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] = 0;
    Rational v = c;
    for (int i = 0; i < e[var]; ++i) v *= value;
    auto [it, inserted] = out.emplace(std::move(f), v);
    if (!inserted) it->second += v;
  }
  return Polynomial(vars_, std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars()) throw VariableMismatch("evaluation point has wrong arity");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int j = 0; j < e[i]; ++j) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::embed(const VarList& target) const {
  return embed(std::make_shared<const VarList>(target));
}

Polynomial Polynomial::embed(const std::shared_ptr<const VarList>& target) const {
  if (*target == *vars_) return Polynomial(target, terms_);
  std::vector<std::optional<std::size_t>> map(num_vars());
  for (std::size_t i = 0; i < num_vars(); ++i) {
    auto it = std::find(target->begin(), target->end(), (*vars_)[i]);
    if (it != target->end()) map[i] = static_cast<std::size_t>(it - target->begin());
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents f(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!map[i]) throw VariableMismatch("cannot embed: variable '" + (*vars_)[i] + "' missing from target");
      f[*map[i]] = e[i];
    }
    out.emplace(std::move(f), c);
  }
  return Polynomial(target, std::move(out));
}

VarList Polynomial::used_vars() const {
  VarList out;
  for (std::size_t i = 0; i < num_vars(); ++i) {
    if (degree(i) > 0) out.push_back((*vars_)[i]);
  }
  return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
  check_same_vars(d, "divide");
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return *this;
  const auto dl = d.leading_term();
  const Exponents dm = dl->first;
  const Rational dc = dl->second;
  const std::size_t n = num_vars();
  Polynomial rem = *this;
  TermMap quot;
  while (!rem.is_zero()) {
    const auto rl = rem.leading_term();
    Exponents qm(n);
    for (std::size_t i = 0; i < n; ++i) {
      qm[i] = rl->first[i] - dm[i];
      if (qm[i] < 0) return std::nullopt;
    }
    const Rational qc = rl->second / dc;
    quot.emplace(qm, qc);
    Polynomial step(vars_, {{qm, qc}});
    rem = rem - step * d;
  }
  return Polynomial(vars_, std::move(quot));
}

Polynomial Polynomial::operator/(const Polynomial& d) const {
  auto q = divide_exact(d);
  if (!q) throw Error("inexact polynomial division");
  return *q;
}

Polynomial Polynomial::primitive_integer(Rational* scale) const {
  if (is_zero()) {
    if (scale) *scale = 1;
    return *this;
  }
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational s(num_gcd, den_lcm);
  s.canonicalize();
  if (leading_coefficient() < 0) s = -s;
  if (scale) *scale = s;
  return scaled(1 / s);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading_coefficient());
}

DisplayForm display_form(const Polynomial& p, std::span<const std::string> order) {
  const std::size_t n = p.num_vars();
  // Display permutation: variables listed in `order` first, the rest alphabetically.
  std::vector<std::size_t> perm;
  for (const auto& name : order) {
    if (auto idx = p.var_index(name); idx && std::find(perm.begin(), perm.end(), *idx) == perm.end()) {
      perm.push_back(*idx);
    }
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(perm.begin(), perm.end(), i) == perm.end()) rest.push_back(i);
  }
  std::sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) { return p.vars()[a] < p.vars()[b]; });
  perm.insert(perm.end(), rest.begin(), rest.end());

  DisplayForm form;
  for (std::size_t i : perm) form.names.push_back(p.vars()[i]);
  for (const auto& [e, c] : p.terms()) {
    Exponents key(n);
    for (std::size_t i = 0; i < n; ++i) key[i] = e[perm[i]];
    form.terms.emplace_back(std::move(key), c);
  }
  std::sort(form.terms.begin(), form.terms.end(),
            [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
  return form;
}

bool display_key_less(const Exponents& a, const Exponents& b) { return grlex_less(a, b); }

std::string render_monomial(const VarList& names, const Exponents& key) {
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (key[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (key[i] > 1) out += '^' + std::to_string(key[i]);
  }
  return out;
}

std::string Polynomial::to_string(std::span<const std::string> order, bool compact) const {
  if (terms_.empty()) return "0";
  const DisplayForm form = display_form(*this, order);
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, coeff] : form.terms) {
    Rational c = coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (compact ? (negative ? "-" : "+") : (negative ? " - " : " + "));
    }
    first = false;
    const std::string mono = render_monomial(form.names, key);
    if (mono.empty()) {
      out << c.get_str();
    } else if (c == 1) {
      out << mono;
    } else {
      out << c.get_str() << '*' << mono;
    }
  }
  return out.str();
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  if (b.is_zero()) throw DivisionByZero("pseudo-remainder by zero");
  const int db = b.degree(var);
  const Polynomial lb = b.leading_coeff(var);
  Polynomial r = a;
  while (!r.is_zero() && r.degree(var) >= db) {
    const int dr = r.degree(var);
    Exponents shift(r.num_vars(), 0);
    shift[var] = dr - db;
    Polynomial xs(r.shared_vars(), {{shift, Rational(1)}});
    r = lb * r - r.leading_coeff(var) * xs * b;
  }
  return r;
}

Polynomial content(const Polynomial& p, std::size_t var) {
  const int d = p.degree(var);
  Polynomial g(p.shared_vars(), {});
  for (int i = d; i >= 0; --i) {
    Polynomial c = p.coeff(var, i);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial primitive_part(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  return (p / content(p, var)).primitive_integer();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (!a.same_vars(b)) throw VariableMismatch("variable-list mismatch in gcd");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  Polynomial one = Polynomial::constant(a.vars(), 1).embed(a.shared_vars());
  if (a.is_constant() || b.is_constant()) return one;

  std::size_t x = 0;
  while (x < a.num_vars() && a.degree(x) == 0 && b.degree(x) == 0) ++x;
  if (a.degree(x) == 0) return gcd(a, content(b, x));
  if (b.degree(x) == 0) return gcd(content(a, x), b);

  const Polynomial ca = content(a, x);
  const Polynomial cb = content(b, x);
  Polynomial pa = a / ca;
  Polynomial pb = b / cb;
  const Polynomial c = gcd(ca, cb);
  if (pa.degree(x) < pb.degree(x)) std::swap(pa, pb);
  // Primitive remainder sequence in x.
  Polynomial g = one;
  while (true) {
    Polynomial r = pseudo_remainder(pa, pb, x);
    if (r.is_zero()) {
      g = primitive_part(pb, x);
      break;
    }
    if (r.degree(x) == 0) break;  // coprime in x
    pa = std::move(pb);
    pb = primitive_part(r, x);
  }
  return (c * g).monic();
}

Polynomial resultant(const Polynomial& a, const Polynomial& b, std::size_t var) {
  if (!a.same_vars(b)) throw VariableMismatch("variable-list mismatch in resultant");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.shared_vars(), {});
  const int m = a.degree(var);
  const int n = b.degree(var);
  if (m == 0) return a.pow(static_cast<unsigned>(n));
  if (n == 0) return b.pow(static_cast<unsigned>(m));
  const int size = m + n;
  const Polynomial zero(a.shared_vars(), {});
  std::vector<std::vector<Polynomial>> mat(size, std::vector<Polynomial>(size, zero));
  for (int row = 0; row < n; ++row) {
    for (int i = 0; i <= m; ++i) mat[row][row + (m - i)] = a.coeff(var, i);
  }
  for (int row = 0; row < m; ++row) {
    for (int i = 0; i <= n; ++i) mat[n + row][row + (n - i)] = b.coeff(var, i);
  }
  // Bareiss fraction-free elimination.
  Polynomial prev = Polynomial::constant(a.vars(), 1).embed(a.shared_vars());
  bool negate = false;
  for (int k = 0; k < size - 1; ++k) {
    int pivot = k;
    while (pivot < size && mat[pivot][k].is_zero()) ++pivot;
    if (pivot == size) return zero;
    if (pivot != k) {
      std::swap(mat[pivot], mat[k]);
      negate = !negate;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        mat[i][j] = (mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j]) / prev;
      }
      mat[i][k] = zero;
    }
    prev = mat[k][k];
  }
  Polynomial det = mat[size - 1][size - 1];
  return negate ? -det : det;
}

VarList merge_vars(const VarList& a, const VarList& b) {
  VarList out = a;
  for (const auto& v : b) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

}  // namespace wz::sym
