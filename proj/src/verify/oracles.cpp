#include <cmath>

#include "mfib/errors.hpp"
#include "mfib/exactgeom.hpp"
#include "mfib/fibers4.hpp"
#include "mfib/moment.hpp"
#include "mfib/verify.hpp"

namespace mfib::verify {

bool in_relative_interior(const RationalVector& x, const std::vector<RationalVector>& points) {
  const std::size_t n = x.size(), m = points.size();
  exact::RationalMatrix a(n + 1, m);
  RationalVector b(n + 1);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) a(i, j) = points[j][i];
    a(n, j) = Rational(1);
  }
  for (std::size_t i = 0; i < n; ++i) b[i] = x[i];
  b[n] = Rational(1);
  if (exact::solve_standard_lp(a, b).status != exact::LpStatus::optimal) return false;
  for (std::size_t j = 0; j < m; ++j) {
    RationalVector c(m);
    c[j] = Rational(1);
    const auto r = exact::solve_standard_lp(a, b, c);
    if (r.status != exact::LpStatus::optimal || r.objective.sign() <= 0) return false;
  }
  return true;
}

bool brute_force_regular_mu_tilde_n4(const RationalVector& x) {
  constexpr int n = 4;
  const auto all = pairs(n);
  for (unsigned mask = 1; mask < (1u << all.size()); ++mask) {
    std::vector<RationalVector> verts;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (mask & (1u << k)) verts.push_back(exact::hypersimplex_vertex(n, all[k].first, all[k].second));
    if (exact::affine_rank(verts) < n - 1 && in_relative_interior(x, verts)) return false;
  }
  return true;
}

Eigen::Matrix<double, 3, 8> finite_difference_jacobian(const ChartUV& p, double step) {
  Eigen::Matrix<double, 3, 8> j;
  for (int col = 0; col < 8; ++col) {
    ChartUV plus = p, minus = p;
    double& up = (col % 2 == 0) ? plus.u[col / 2] : plus.v[col / 2];
    double& dn = (col % 2 == 0) ? minus.u[col / 2] : minus.v[col / 2];
    up += step;
    dn -= step;
    j.col(col) = (complete_intersection_f(plus) - complete_intersection_f(minus)) / (2 * step);
  }
  return j;
}

Eigen::VectorXcd cofactor_minors(const Eigen::Matrix<Complex, 2, Eigen::Dynamic>& m) {
  const auto pr = pairs(static_cast<int>(m.cols()));
  Eigen::VectorXcd out(static_cast<Eigen::Index>(pr.size()));
  for (std::size_t k = 0; k < pr.size(); ++k) {
    Eigen::Matrix2cd block;
    block.col(0) = m.col(pr[k].first);
    block.col(1) = m.col(pr[k].second);
    out[static_cast<Eigen::Index>(k)] = block.determinant();
  }
  return out;
}

Rational derived_f_value(int k) {
  // Coefficients of x3 * f_k on (x0..x5), using |a_i|^2 = x_j / x3 for the
  // chart entries a1 ~ z1, a2 ~ z5, a3 ~ z0, a4 ~ z4 and the quadric for the
  // A^2 + B^2 term.
  std::array<Rational, 6> form{};
  switch (k) {
    case 1: form = {Rational(-1), Rational(1), Rational(0), Rational(0), Rational(-1), Rational(1)}; break;
    case 2: form = {Rational(1), Rational(5), Rational(0), Rational(0), Rational(-4), Rational(0)}; break;
    case 3: form = {Rational(1), Rational(4), Rational(1), Rational(0), Rational(-3), Rational(0)}; break;
    default: throw DomainError("f index must be 1, 2 or 3");
  }
  const auto sol = exact::solve_parametric(a_matrix(4), orbit_point(Orbit::first), {4, 5});
  auto apply = [&](const RationalVector& x) {
    Rational s;
    for (std::size_t i = 0; i < 6; ++i) s += form[i] * x[i];
    return s;
  };
  // Any multiple must match on the constant part and on each direction.
  std::optional<Rational> value;
  auto match = [&](const RationalVector& x) {
    const Rational lhs = apply(x), x3 = x[3];
    if (x3.is_zero()) {
      if (!lhs.is_zero()) throw CertificateFailure("f is not constant on the fiber");
      return;
    }
    const Rational v = lhs / x3;
    if (value && *value != v) throw CertificateFailure("f is not constant on the fiber");
    value = v;
  };
  match(sol.constant);
  for (const auto& d : sol.direction) match(d);
  if (!value) throw CertificateFailure("f value undetermined");
  return *value;
}

}  // namespace mfib::verify
