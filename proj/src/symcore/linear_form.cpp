#include "wz/symcore/linear_form.hpp"

#include <set>

namespace wz::sym {

LinearForm LinearForm::var(std::string_view name, const Rational& c) {
  LinearForm f;
  f.add(name, c);
  return f;
}

std::optional<LinearForm> LinearForm::from_polynomial(const Polynomial& p) {
  if (p.total_degree() > 1) return std::nullopt;
  LinearForm f;
  for (const auto& [e, c] : p.terms()) {
    bool found = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 1) {
        f.add(p.vars()[i], c);
        found = true;
      }
    }
    if (!found) f.constant_ += c;
  }
  return f;
}

void LinearForm::add(std::string_view name, const Rational& c) {
  if (c == 0) return;
  auto it = coeffs_.find(name);
  if (it == coeffs_.end()) {
    coeffs_.emplace(std::string(name), c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Rational LinearForm::coefficient(std::string_view name) const {
  auto it = coeffs_.find(name);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

bool LinearForm::is_integral() const {
  if (constant_.get_den() != 1) return false;
  for (const auto& [v, c] : coeffs_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

VarList LinearForm::vars() const {
  VarList out;
  for (const auto& [v, c] : coeffs_) out.push_back(v);
  return out;
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
  LinearForm r = *this;
  for (const auto& [v, c] : o.coeffs_) r.add(v, c);
  r.constant_ += o.constant_;
  return r;
}

LinearForm LinearForm::operator-(const LinearForm& o) const { return *this + o.scaled(-1); }

LinearForm LinearForm::scaled(const Rational& c) const {
  LinearForm r;
  if (c == 0) return r;
  for (const auto& [v, x] : coeffs_) r.coeffs_.emplace(v, x * c);
  r.constant_ = constant_ * c;
  return r;
}

bool LinearForm::operator<(const LinearForm& o) const {
  if (coeffs_ != o.coeffs_) return coeffs_ < o.coeffs_;
  return constant_ < o.constant_;
}

LinearForm LinearForm::substitute(std::string_view name, const LinearForm& value) const {
  auto it = coeffs_.find(name);
  if (it == coeffs_.end()) return *this;
  const Rational c = it->second;
  LinearForm r = *this;
  r.coeffs_.erase(std::string(name));
  return r + value.scaled(c);
}

LinearForm LinearForm::shift(std::string_view name, const Rational& offset) const {
  LinearForm r = *this;
  r.constant_ += coefficient(name) * offset;
  return r;
}

LinearForm LinearForm::partial(const Assignment& point) const {
  LinearForm r(constant_);
  for (const auto& [v, c] : coeffs_) {
    auto it = point.find(v);
    if (it == point.end()) {
      r.add(v, c);
    } else {
      r.constant_ += c * it->second;
    }
  }
  return r;
}

Rational LinearForm::evaluate(const Assignment& point) const {
  LinearForm r = partial(point);
  if (!r.is_constant()) throw Error("evaluation point does not assign '" + r.coeffs_.begin()->first + "'");
  return r.constant_;
}

Polynomial LinearForm::to_polynomial(const VarList& vars) const {
  Polynomial p = Polynomial::constant(vars, constant_);
  for (const auto& [v, c] : coeffs_) p += Polynomial::variable(vars, v).scaled(c);
  return p;
}

std::string LinearForm::to_string() const {
  std::string out;
  auto term = [&](const std::string& v, const Rational& c) {
    Rational a = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? '-' : '+';
    }
    if (a != 1) out += a.get_str() + "*";
    out += v;
  };
  for (const auto& [v, c] : coeffs_) {
    if (c > 0) term(v, c);
  }
  for (const auto& [v, c] : coeffs_) {
    if (c < 0) term(v, c);
  }
  if (constant_ != 0 || out.empty()) {
    if (!out.empty() && constant_ > 0) out += '+';
    out += constant_.get_str();
  }
  return out;
}

namespace {

// Constraint a1*x + a2*y <= b over x, y >= 0.
struct Halfplane {
  Rational a1, a2, b;
};

bool feasible(const std::vector<Halfplane>& hs) {
  std::vector<Halfplane> all = hs;
  all.push_back({-1, 0, 0});
  all.push_back({0, -1, 0});
  auto ok = [&](const Rational& x, const Rational& y) {
    for (const auto& h : all) {
      if (h.a1 * x + h.a2 * y > h.b) return false;
    }
    return true;
  };
  // A nonempty polyhedron inside the orthant has a vertex.
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const Rational det = all[i].a1 * all[j].a2 - all[i].a2 * all[j].a1;
      if (det == 0) continue;
      const Rational x = (all[i].b * all[j].a2 - all[i].a2 * all[j].b) / det;
      const Rational y = (all[i].a1 * all[j].b - all[i].b * all[j].a1) / det;
      if (ok(x, y)) return true;
    }
  }
  return false;
}

// Is l - x*f - y*g >= 0 coefficientwise (and in the constant) for some x, y >= 0?
bool dominated(const LinearForm& l, const LinearForm& f, const LinearForm& g) {
  std::set<std::string> names;
  for (const auto& v : l.vars()) names.insert(v);
  for (const auto& v : f.vars()) names.insert(v);
  for (const auto& v : g.vars()) names.insert(v);
  std::vector<Halfplane> hs;
  for (const auto& v : names) hs.push_back({f.coefficient(v), g.coefficient(v), l.coefficient(v)});
  hs.push_back({f.constant(), g.constant(), l.constant()});
  return feasible(hs);
}

}  // namespace

bool Facts::proves_nonneg(const LinearForm& l) const {
  const LinearForm zero;
  if (dominated(l, zero, zero)) return true;
  for (std::size_t i = 0; i < facts_.size(); ++i) {
    if (dominated(l, facts_[i], zero)) return true;
    for (std::size_t j = i + 1; j < facts_.size(); ++j) {
      if (dominated(l, facts_[i], facts_[j])) return true;
    }
  }
  return false;
}

bool Facts::proves_positive(const LinearForm& l) const {
  // Variables are integers, so an integral form is positive iff it is >= 1;
  // for other forms the margin is merely conservative.
  return proves_nonneg(l - LinearForm(1));
}

bool Facts::proves_between(const LinearForm& x, const LinearForm& lo, const LinearForm& hi) const {
  return proves_nonneg(x - lo) && proves_nonneg(hi - x);
}

bool Facts::proves_outside(const LinearForm& x, const LinearForm& lo, const LinearForm& hi) const {
  return proves_positive(lo - x) || proves_positive(x - hi);
}

}  // namespace wz::sym
