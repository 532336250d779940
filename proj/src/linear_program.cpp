#include "mfib/linear_program.hpp"

#include <algorithm>

#include "mfib/errors.hpp"

namespace mfib::exact {

RationalVector RationalMatrix::operator*(const RationalVector& x) const {
  if (x.size() != cols_) throw DomainError("matrix-vector length mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) s += (*this)(r, c) * x[c];
    out[r] = s;
  }
  return out;
}

int rank(RationalMatrix m) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      Rational f = m(r, col) / m(row, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    ++row;
  }
  return static_cast<int>(row);
}

namespace {

// Simplex tableau: `rows` constraint rows followed by the reduced-cost row.
// The last column holds the right-hand side (objective value in the cost row,
// negated).
struct Tableau {
  std::size_t m = 0;      // constraint rows
  std::size_t width = 0;  // variable columns
  std::vector<std::vector<Rational>> t;
  std::vector<std::size_t> basis;

  Rational& rhs(std::size_t r) { return t[r][width]; }
  std::vector<Rational>& cost() { return t[m]; }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = t[r][c];
    for (auto& v : t[r])
      if (!v.is_zero()) v /= p;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == r || t[i][c].is_zero()) continue;
      Rational f = t[i][c];
      for (std::size_t k = 0; k <= width; ++k)
        if (!t[r][k].is_zero()) t[i][k] -= f * t[r][k];
    }
    basis[r] = c;
  }

  // Minimizes the cost row over columns [0, allowed). Bland's rule: lowest
  // entering index, ties in the ratio test broken by lowest basic index.
  // Returns false on unboundedness.
  bool run(std::size_t allowed) {
    while (true) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j)
        if (cost()[j].sign() < 0) {
          enter = j;
          break;
        }
      if (enter == allowed) return true;
      std::size_t leave = m;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][enter].sign() <= 0) continue;
        Rational ratio = t[i][width] / t[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_standard_lp(const RationalMatrix& a, const RationalVector& b,
                           const std::optional<RationalVector>& objective) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw DomainError("LP right-hand side length mismatch");
  if (objective && objective->size() != n) throw DomainError("LP objective length mismatch");

  // Columns: n structural, m artificial.
  Tableau tab;
  tab.m = m;
  tab.width = n + m;
  tab.t.assign(m + 1, std::vector<Rational>(n + m + 1));
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = flip ? -a(i, j) : a(i, j);
    tab.t[i][n + i] = 1;
    tab.rhs(i) = flip ? -b[i] : b[i];
    tab.basis[i] = n + i;
  }
  // Phase I: minimize the sum of artificials.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k) tab.cost()[k] -= tab.t[i][k];
  for (std::size_t i = 0; i < m; ++i) tab.cost()[n + m] -= tab.rhs(i);
  tab.run(n + m);

  LpResult result;
  if (tab.cost()[n + m].sign() != 0) {
    result.status = LpStatus::infeasible;
    return result;
  }

  // Drive zero-level artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < tab.m;) {
    if (tab.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j)
      if (!tab.t[i][j].is_zero()) {
        col = j;
        break;
      }
    if (col < n) {
      tab.pivot(i, col);
      ++i;
    } else {
      tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
      --tab.m;
    }
  }

  if (objective) {
    // Phase II on cost -c (the tableau minimizes).
    auto& cost = tab.cost();
    std::fill(cost.begin(), cost.end(), Rational());
    for (std::size_t j = 0; j < n; ++j) cost[j] = -(*objective)[j];
    for (std::size_t i = 0; i < tab.m; ++i) {
      const Rational cb = -(*objective)[tab.basis[i]];
      if (cb.is_zero()) continue;
      for (std::size_t k = 0; k <= n + m; ++k)
        if (!tab.t[i][k].is_zero()) cost[k] -= cb * tab.t[i][k];
    }
    if (!tab.run(n)) {
      result.status = LpStatus::unbounded;
      return result;
    }
  }

  result.status = LpStatus::optimal;
  result.x = RationalVector(n);
  for (std::size_t i = 0; i < tab.m; ++i)
    if (tab.basis[i] < n) result.x[tab.basis[i]] = tab.rhs(i);
  if (objective) result.objective = objective->dot(result.x);
  return result;
}

ParametricSolution solve_parametric(const RationalMatrix& a, const RationalVector& b,
                                    const std::vector<std::size_t>& free) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw DomainError("system right-hand side length mismatch");
  std::vector<bool> is_free(n, false);
  for (auto f : free) {
    if (f >= n) throw DomainError("free variable index out of range");
    is_free[f] = true;
  }
  std::vector<std::size_t> bound;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_free[j]) bound.push_back(j);

  // Augmented matrix [A_bound | b | -A_free], reduced by Gauss-Jordan.
  const std::size_t k = free.size();
  const std::size_t w = bound.size() + 1 + k;
  std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(w));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < bound.size(); ++c) aug[r][c] = a(r, bound[c]);
    aug[r][bound.size()] = b[r];
    for (std::size_t f = 0; f < k; ++f) aug[r][bound.size() + 1 + f] = -a(r, free[f]);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_row(bound.size(), m);
  for (std::size_t c = 0; c < bound.size(); ++c) {
    std::size_t p = row;
    while (p < m && aug[p][c].is_zero()) ++p;
    if (p == m) throw DomainError("bound variables are not determined by the system");
    std::swap(aug[p], aug[row]);
    Rational piv = aug[row][c];
    for (auto& v : aug[row]) v /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || aug[r][c].is_zero()) continue;
      Rational f = aug[r][c];
      for (std::size_t q = 0; q < w; ++q) aug[r][q] -= f * aug[row][q];
    }
    pivot_row[c] = row++;
  }
  // Remaining rows must read 0 = 0 identically in the free variables.
  for (std::size_t r = row; r < m; ++r)
    for (std::size_t q = bound.size(); q < w; ++q)
      if (!aug[r][q].is_zero()) throw DomainError("inconsistent linear system");

  ParametricSolution sol;
  sol.free = free;
  sol.constant = RationalVector(n);
  sol.direction.assign(k, RationalVector(n));
  for (std::size_t c = 0; c < bound.size(); ++c) {
    const auto& r = aug[pivot_row[c]];
    sol.constant[bound[c]] = r[bound.size()];
    for (std::size_t f = 0; f < k; ++f) sol.direction[f][bound[c]] = r[bound.size() + 1 + f];
  }
  for (std::size_t f = 0; f < k; ++f) sol.direction[f][free[f]] = 1;
  return sol;
}

}  // namespace mfib::exact
