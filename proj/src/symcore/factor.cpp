#include "wz/symcore/factor.hpp"

#include <algorithm>
#include <map>

namespace wz::sym {

namespace {

const Integer kDivisorLimit("1000000000000");

// Positive divisors of |n| (n != 0) by trial division; nullopt if |n| is too big.
std::optional<std::vector<Integer>> divisors(const Integer& n) {
  Integer m = abs(n);
  if (m > kDivisorLimit) return std::nullopt;
  std::vector<std::pair<Integer, int>> primes;
  for (Integer p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) primes.emplace_back(p, e);
  }
  if (m > 1) primes.emplace_back(m, 1);
  std::vector<Integer> out{1};
  for (const auto& [p, e] : primes) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial var_poly(const Polynomial& shape, std::size_t v) {
  return Polynomial::variable(shape.vars(), shape.vars()[v]).embed(shape.shared_vars());
}

Polynomial const_poly(const Polynomial& shape, const Rational& c) {
  return Polynomial::constant(shape.vars(), c).embed(shape.shared_vars());
}

// Yun's square-free decomposition in variable x of a primitive polynomial.
std::vector<PolyFactor> square_free(const Polynomial& a, std::size_t x) {
  std::vector<PolyFactor> out;
  Polynomial b = a.derivative(x);
  Polynomial c = gcd(a, b);
  Polynomial w = a / c;
  Polynomial y = b / c;
  Polynomial z = y - w.derivative(x);
  for (int i = 1; !w.is_constant(); ++i) {
    Polynomial g = gcd(w, z);
    if (!g.is_constant()) out.push_back({g, i});
    w = w / g;
    y = z / g;
    z = y - w.derivative(x);
  }
  return out;
}

// Candidate evaluation points for the variables other than x.
std::vector<Rational> sample_point(std::size_t n, std::size_t x, int attempt) {
  std::vector<Rational> pt(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == x) continue;
    pt[i] = Rational(static_cast<long>((i + 2) * (attempt + 2) + attempt * attempt + 1));
  }
  return pt;
}

Polynomial specialize_except(const Polynomial& p, std::size_t x, const std::vector<Rational>& pt) {
  Polynomial u = p;
  for (std::size_t i = 0; i < p.num_vars(); ++i) {
    if (i != x) u = u.evaluate_var(i, pt[i]);
  }
  return u;
}

// Splits affine-linear factors off a square-free primitive polynomial whose
// irreducible factors each involve every variable it uses.
std::vector<Polynomial> split_linear(Polynomial a) {
  std::vector<Polynomial> out;
  const VarList used = a.used_vars();
  if (used.empty()) return out;
  std::size_t x = a.require_var(used.front());
  for (const auto& name : used) {
    const std::size_t i = a.require_var(name);
    if (a.degree(i) > a.degree(x)) x = i;
  }
  if (a.degree(x) <= 1 || a.total_degree() <= 1) {
    out.push_back(a);
    return out;
  }
  std::vector<std::size_t> others;
  for (const auto& name : used) {
    const std::size_t i = a.require_var(name);
    if (i != x) others.push_back(i);
  }

  for (int attempt = 0; attempt < 6 && a.degree(x) > 1; ++attempt) {
    const auto base = sample_point(a.num_vars(), x, attempt);
    const Polynomial u0 = specialize_except(a, x, base);
    if (u0.degree(x) != a.degree(x)) continue;
    if (!gcd(u0, u0.derivative(x)).is_constant()) continue;
    const auto roots0 = rational_roots(u0, x);
    // Roots at base + e_y for each other variable y.
    std::vector<std::vector<Rational>> stepped;
    bool ok = true;
    for (std::size_t y : others) {
      auto pt = base;
      pt[y] += 1;
      const Polynomial uy = specialize_except(a, x, pt);
      if (uy.degree(x) != a.degree(x)) {
        ok = false;
        break;
      }
      stepped.push_back(rational_roots(uy, x));
    }
    if (!ok) continue;

    for (const Rational& r0 : roots0) {
      if (a.degree(x) <= 1) break;
      // Enumerate slope choices alpha_y = r' - r0.
      std::vector<std::size_t> pick(others.size(), 0);
      bool exhausted = std::any_of(stepped.begin(), stepped.end(), [](const auto& v) { return v.empty(); });
      std::size_t budget = 4096;
      while (!exhausted && budget-- > 0) {
        Polynomial lin = var_poly(a, x);
        Rational beta = r0;
        for (std::size_t j = 0; j < others.size(); ++j) {
          const Rational alpha = stepped[j][pick[j]] - r0;
          beta -= alpha * base[others[j]];
          lin -= var_poly(a, others[j]).scaled(alpha);
        }
        lin -= const_poly(a, beta);
        if (auto q = a.divide_exact(lin)) {
          out.push_back(lin.primitive_integer());
          a = *q;
          break;
        }
        std::size_t j = 0;
        for (; j < pick.size(); ++j) {
          if (++pick[j] < stepped[j].size()) break;
          pick[j] = 0;
        }
        if (j == pick.size()) exhausted = true;
      }
    }
    // A good specialization already exposes every linear factor.
    break;
  }
  if (!a.is_constant()) out.push_back(a.primitive_integer());
  return out;
}

void split_contents(const Polynomial& p, std::vector<Polynomial>& out) {
  if (p.is_constant()) return;
  for (const auto& name : p.used_vars()) {
    const std::size_t v = p.require_var(name);
    Polynomial c = content(p, v);
    if (!c.is_constant()) {
      split_contents(c, out);
      split_contents(p / c, out);
      return;
    }
  }
  out.push_back(p);
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p, std::size_t var) {
  std::vector<Rational> roots;
  if (p.is_zero() || p.degree(var) == 0) return roots;
  Polynomial q = p.primitive_integer();
  if (q.coeff(var, 0).is_zero()) {
    roots.push_back(0);
    while (q.coeff(var, 0).is_zero()) q = q / var_poly(q, var);
    if (q.degree(var) == 0) return roots;
  }
  const Integer a0 = q.coeff(var, 0).constant_value().get_num();
  const Integer ad = q.leading_coeff(var).constant_value().get_num();
  const auto dp = divisors(a0);
  const auto dq = divisors(ad);
  if (!dp || !dq) return roots;
  std::vector<Rational> found;
  for (const Integer& num : *dp) {
    for (const Integer& den : *dq) {
      for (int s : {1, -1}) {
        Rational cand(num * s, den);
        cand.canonicalize();
        if (std::find(found.begin(), found.end(), cand) != found.end()) continue;
        std::vector<Rational> pt(q.num_vars());
        pt[var] = cand;
        if (q.evaluate(pt) == 0) found.push_back(cand);
      }
    }
  }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

Factorization factor_lite(const Polynomial& p) {
  if (p.is_zero()) throw Error("factorization of the zero polynomial");
  Factorization f;
  Rational scale;
  Polynomial q = p.primitive_integer(&scale);
  f.unit = scale;
  // Monomial factors.
  for (std::size_t v = 0; v < q.num_vars(); ++v) {
    int e = q.degree(v);
    for (const auto& [ex, c] : q.terms()) e = std::min(e, ex[v]);
    if (e > 0) {
      const Polynomial x = var_poly(q, v);
      q = q / x.pow(static_cast<unsigned>(e));
      f.factors.push_back({x, e});
    }
  }
  std::vector<Polynomial> pieces;
  split_contents(q, pieces);
  std::map<Polynomial::TermMap, std::size_t> index;
  auto add = [&](const Polynomial& piece, int mult) {
    Polynomial pr = piece.primitive_integer();
    auto it = index.find(pr.terms());
    if (it != index.end()) {
      f.factors[it->second].multiplicity += mult;
    } else {
      index.emplace(pr.terms(), f.factors.size());
      f.factors.push_back({pr, mult});
    }
  };
  for (const auto& piece : pieces) {
    const std::size_t x = piece.require_var(piece.used_vars().front());
    for (const auto& sf : square_free(piece, x)) {
      for (const auto& lin : split_linear(sf.poly)) add(lin, sf.multiplicity);
    }
  }
  // Fix the unit so that the product reproduces p exactly.
  Polynomial prod = const_poly(p, 1);
  for (const auto& pf : f.factors) prod *= pf.poly.pow(static_cast<unsigned>(pf.multiplicity));
  f.unit = p.leading_coefficient() / prod.leading_coefficient();
  return f;
}

namespace {

int factor_weight(const PolyFactor& f) { return f.multiplicity * f.poly.total_degree(); }

// Normalizes the sign so that the display-leading term is positive; returns
// true if the factor was negated.
bool orient(PolyFactor& f, std::span<const std::string> order) {
  const DisplayForm form = display_form(f.poly, order);
  if (form.terms.front().second < 0) {
    f.poly = -f.poly;
    return f.multiplicity % 2 != 0;
  }
  return false;
}

bool display_before(const PolyFactor& a, const PolyFactor& b, std::span<const std::string> order) {
  const int wa = factor_weight(a), wb = factor_weight(b);
  if (wa != wb) return wa > wb;
  const std::size_t ta = a.poly.terms().size(), tb = b.poly.terms().size();
  if (ta != tb) return ta > tb;
  const DisplayForm fa = display_form(a.poly, order);
  const DisplayForm fb = display_form(b.poly, order);
  for (std::size_t i = 0; i < fa.terms.size() && i < fb.terms.size(); ++i) {
    if (fa.terms[i].first != fb.terms[i].first) return display_key_less(fb.terms[i].first, fa.terms[i].first);
    if (fa.terms[i].second != fb.terms[i].second) return fa.terms[i].second > fb.terms[i].second;
  }
  return false;
}

std::string render_factor(const PolyFactor& f, std::span<const std::string> order) {
  std::string body = f.poly.to_string(order);
  if (f.poly.terms().size() > 1) body = "(" + body + ")";
  if (f.multiplicity > 1) body += "^" + std::to_string(f.multiplicity);
  return body;
}

std::string render_product(const Integer& c, const std::vector<PolyFactor>& fs,
                           std::span<const std::string> order, std::size_t* items) {
  std::vector<std::string> parts;
  if (c != 1 || fs.empty()) parts.push_back(c.get_str());
  for (const auto& f : fs) parts.push_back(render_factor(f, order));
  *items = parts.size();
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += '*';
    out += parts[i];
  }
  return out;
}

}  // namespace

FactoredView factored_view(const RationalFunction& r, std::span<const std::string> order) {
  FactoredView v;
  if (r.is_zero()) {
    v.num_const = 0;
    return v;
  }
  Rational unit(1);
  auto collect = [&](const Polynomial& p, std::vector<PolyFactor>& dst, bool is_den) {
    if (p.is_constant()) {
      unit = is_den ? Rational(unit / p.constant_value()) : Rational(unit * p.constant_value());
      return;
    }
    Factorization f = factor_lite(p);
    unit = is_den ? Rational(unit / f.unit) : Rational(unit * f.unit);
    for (auto& pf : f.factors) {
      if (orient(pf, order)) unit = -unit;
      dst.push_back(pf);
    }
    std::stable_sort(dst.begin(), dst.end(),
                     [&](const PolyFactor& a, const PolyFactor& b) { return display_before(a, b, order); });
  };
  collect(r.num(), v.num, false);
  collect(r.den(), v.den, true);
  v.negative = unit < 0;
  v.num_const = abs(unit.get_num());
  v.den_const = unit.get_den();
  return v;
}

std::string to_factored_string(const RationalFunction& r, std::span<const std::string> order) {
  if (r.is_zero()) return "0";
  const FactoredView v = factored_view(r, order);
  std::size_t num_items = 0, den_items = 0;
  std::string out = v.negative ? "-" : "";
  out += render_product(v.num_const, v.num, order, &num_items);
  if (v.den_const != 1 || !v.den.empty()) {
    std::string den = render_product(v.den_const, v.den, order, &den_items);
    out += "/" + (den_items > 1 ? "(" + den + ")" : den);
  }
  return out;
}

std::vector<RootDesc> poly_integer_roots(const Polynomial& p, std::string_view var, const Assignment* params) {
  std::vector<RootDesc> out;
  if (p.is_zero()) throw Error("integer roots of the zero polynomial");
  const std::size_t x = p.require_var(var);
  Polynomial q = p;
  if (params) {
    for (const auto& [name, value] : *params) {
      if (auto idx = q.var_index(name); idx && *idx != x) q = q.evaluate_var(*idx, value);
    }
  }
  const VarList used = q.used_vars();
  if (used.size() == 1 && used.front() == var) {
    for (const Rational& r : rational_roots(q, x)) {
      if (r.get_den() != 1) continue;
      RootDesc d;
      d.kind = RootDesc::Kind::Integer;
      d.value = r.get_num();
      d.factor = q;
      out.push_back(d);
    }
    return out;
  }
  if (q.is_constant()) return out;
  const Factorization f = factor_lite(q);
  for (const auto& pf : f.factors) {
    if (pf.poly.degree(x) == 0) continue;
    RootDesc d;
    d.factor = pf.poly;
    const Polynomial lc = pf.poly.coeff(x, 1);
    if (pf.poly.degree(x) == 1 && lc.is_constant()) {
      // a*x + b = 0  ->  x = -b/a
      const Polynomial rest = pf.poly.coeff(x, 0).scaled(-1 / lc.constant_value());
      Integer den = 1;
      for (const auto& [e, c] : rest.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      Polynomial numer = rest.scaled(Rational(den));
      if (numer.is_constant()) {
        if (den != 1) continue;  // non-integer constant root
        d.kind = RootDesc::Kind::Integer;
        d.value = numer.constant_value().get_num();
      } else {
        d.kind = RootDesc::Kind::Affine;
        d.numerator = numer;
        d.divisor = den;
      }
    } else {
      d.kind = RootDesc::Kind::Unresolved;
    }
    out.push_back(d);
  }
  return out;
}

}  // namespace wz::sym
