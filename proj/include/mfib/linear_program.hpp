#pragma once

#include <optional>
#include <vector>

#include "mfib/rational.hpp"

namespace mfib::exact {

// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  RationalVector operator*(const RationalVector& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

// Rank by fraction-exact Gaussian elimination.
int rank(RationalMatrix m);

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  RationalVector x;  // primal solution when status == optimal
  Rational objective;
};

// Standard-form LP: maximize c.x subject to A x = b, x >= 0.
// Two-phase simplex with Bland's rule; every pivot is exact so the verdict
// and the returned vertex are exact. Passing no objective gives a pure
// feasibility check (Phase I only).
LpResult solve_standard_lp(const RationalMatrix& a, const RationalVector& b,
                           const std::optional<RationalVector>& objective = std::nullopt);

// Affine solution set of A x = b written over chosen free variables:
// x = constant + sum_k direction[k] * x_{free[k]}.
struct ParametricSolution {
  std::vector<std::size_t> free;
  RationalVector constant;
  std::vector<RationalVector> direction;  // one per free variable, full length
};

// Requires the non-free columns to determine the remaining variables
// uniquely; throws DomainError when the system is inconsistent or the
// non-free block is rank deficient.
ParametricSolution solve_parametric(const RationalMatrix& a, const RationalVector& b,
                                    const std::vector<std::size_t>& free);

}  // namespace mfib::exact
