#include "wz/symcore/linear_system.hpp"

#include <algorithm>

namespace wz::sym {

Echelon bareiss_echelon(PolyMatrix m) {
  Echelon e;
  if (m.empty()) return e;
  e.cols = m.front().size();
  const Polynomial one = Polynomial::constant(m.front().front().vars(), 1).embed(m.front().front().shared_vars());
  Polynomial prev = one;
  std::size_t row = 0;
  for (std::size_t col = 0; col < e.cols && row < m.size(); ++col) {
    // Pivot: the smallest nonzero entry in the column, for smaller intermediates.
    std::size_t best = m.size();
    for (std::size_t i = row; i < m.size(); ++i) {
      if (m[i][col].is_zero()) continue;
      if (best == m.size() || m[i][col].terms().size() < m[best][col].terms().size()) best = i;
    }
    if (best == m.size()) continue;
    std::swap(m[row], m[best]);
    const Polynomial& piv = m[row][col];
    for (std::size_t i = row + 1; i < m.size(); ++i) {
      const Polynomial factor = m[i][col];
      for (std::size_t j = col; j < e.cols; ++j) {
        Polynomial v = piv * m[i][j] - factor * m[row][j];
        m[i][j] = v / prev;
      }
    }
    // Rows above the current one are not touched; they are already final.
    prev = piv;
    e.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  e.rows = std::move(m);
  return e;
}

namespace {

// Back substitution with the given values for free unknowns.
std::vector<RationalFunction> back_substitute(const Echelon& e, std::vector<RationalFunction> x, std::size_t n,
                                              const Polynomial* rhs_col) {
  for (std::size_t r = e.rows.size(); r-- > 0;) {
    const std::size_t pc = e.pivots[r];
    RationalFunction acc = rhs_col ? RationalFunction(e.rows[r][n]) : x[pc] - x[pc];
    for (std::size_t j = pc + 1; j < n; ++j) {
      if (e.rows[r][j].is_zero() || x[j].is_zero()) continue;
      acc = acc - RationalFunction(e.rows[r][j]) * x[j];
    }
    x[pc] = acc / RationalFunction(e.rows[r][pc]);
  }
  return x;
}

}  // namespace

std::optional<std::vector<RationalFunction>> solve_linear(const PolyMatrix& a, const std::vector<Polynomial>& b) {
  if (a.size() != b.size()) throw Error("linear system: row count mismatch");
  if (a.empty()) return std::vector<RationalFunction>{};
  const std::size_t n = a.front().size();
  PolyMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const Echelon e = bareiss_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;  // 0 = nonzero
  const RationalFunction zero(b.front() - b.front());
  Echelon core = e;
  std::vector<RationalFunction> x(n, zero);
  return back_substitute(core, x, n, &b.front());
}

std::vector<std::vector<RationalFunction>> null_space(const PolyMatrix& a, const VarList& vars) {
  std::vector<std::vector<RationalFunction>> basis;
  if (a.empty()) return basis;
  const std::size_t n = a.front().size();
  const Echelon e = bareiss_echelon(a);
  const RationalFunction zero = RationalFunction::constant(vars, 0);
  const RationalFunction one = RationalFunction::constant(vars, 1);
  for (std::size_t f = 0; f < n; ++f) {
    if (std::find(e.pivots.begin(), e.pivots.end(), f) != e.pivots.end()) continue;
    std::vector<RationalFunction> x(n, zero);
    x[f] = one;
    basis.push_back(back_substitute(e, x, n, nullptr));
  }
  return basis;
}

}  // namespace wz::sym
