#include <cmath>

#include "mfib/errors.hpp"
#include "mfib/fibers4.hpp"
#include "mfib/plucker.hpp"

namespace mfib {

ChartUV chart_uv(const Vector6c& z) {
  const auto c = chart_coords(z);
  ChartUV p;
  for (int k = 0; k < 4; ++k) {
    p.u[k] = c.a[static_cast<std::size_t>(k)].real();
    p.v[k] = c.a[static_cast<std::size_t>(k)].imag();
  }
  return p;
}

namespace {

// A + iB = a1 a4 - a2 a3.
std::pair<double, double> bilinear_ab(const ChartUV& p) {
  const auto& u = p.u;
  const auto& v = p.v;
  const double a = u[0] * u[3] - v[0] * v[3] - (u[1] * u[2] - v[1] * v[2]);
  const double b = u[0] * v[3] + v[0] * u[3] - (u[1] * v[2] + v[1] * u[2]);
  return {a, b};
}

}  // namespace

Eigen::Vector3d complete_intersection_f(const ChartUV& p) {
  Eigen::Vector4d m = p.u.cwiseAbs2() + p.v.cwiseAbs2();
  const auto [a, b] = bilinear_ab(p);
  return {m[0] + m[1] - m[2] - m[3],
          5 * m[0] + m[2] - 4 * m[3],
          4 * m[0] + m[2] - 3 * m[3] + a * a + b * b};
}

Eigen::Matrix<double, 3, 8> jacobian_f(const ChartUV& p) {
  const auto& u = p.u;
  const auto& v = p.v;
  const auto [a, b] = bilinear_ab(p);
  Eigen::Matrix<double, 1, 8> da, db;
  da << u[3], -v[3], -u[2], v[2], -u[1], v[1], u[0], -v[0];
  db << v[3], u[3], -v[2], -u[2], -v[1], -u[1], v[0], u[0];

  Eigen::Matrix<double, 3, 8> j;
  j.row(0) << 2 * u[0], 2 * v[0], 2 * u[1], 2 * v[1], -2 * u[2], -2 * v[2], -2 * u[3], -2 * v[3];
  j.row(1) << 10 * u[0], 10 * v[0], 0, 0, 2 * u[2], 2 * v[2], -8 * u[3], -8 * v[3];
  j.row(2) << 8 * u[0], 8 * v[0], 0, 0, 2 * u[2], 2 * v[2], -6 * u[3], -6 * v[3];
  j.row(2) += 2 * a * da + 2 * b * db;
  return j;
}

namespace {

template <typename M>
int relative_rank(const M& m, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) r += s[i] > tol * s[0];
  return r;
}

}  // namespace

int jacobian_rank(const ChartUV& p, double tol) { return relative_rank(jacobian_f(p), tol); }

ExponentMatrix transition_matrix(ChartDirection direction) {
  if (direction == ChartDirection::zero_to_one) return {{{1, 1, -1}, {1, 0, 0}, {0, 0, 1}}};
  return {{{0, 1, 0}, {1, -1, 1}, {0, 0, 1}}};
}

int transition_determinant() {
  const auto e = transition_matrix(ChartDirection::zero_to_one);
  return e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) -
         e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
         e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
}

Phases3 bundle_transition(const Phases3& t, ChartDirection direction) {
  const auto e = transition_matrix(direction);
  Phases3 out;
  for (std::size_t k = 0; k < 3; ++k) {
    Complex x = 1.0;
    for (std::size_t j = 0; j < 3; ++j)
      for (int r = 0; r < std::abs(e[k][j]); ++r) x *= e[k][j] > 0 ? t[j] : 1.0 / t[j];
    out[k] = x;
  }
  return out;
}

ChartCoverage verify_chart_coverage(const MQ5Point& p) {
  if (p.z.size() != 6) throw DomainError("expected 6 homogeneous coordinates");
  const Vector6c z = p.z / p.z.norm();
  constexpr double zero = 1e-10;
  ChartCoverage c;
  c.p23 = std::abs(z[3]);
  c.p24 = std::abs(z[4]);
  c.p34 = std::abs(z[5]);
  if (c.p23 <= zero || c.p24 <= zero || c.p34 <= zero)
    throw CertificateFailure("P23, P24 and P34 must not vanish on the fiber");
  c.p12_zero = std::abs(z[0]) <= zero;
  c.p13_zero = std::abs(z[1]) <= zero;
  c.p14_zero = std::abs(z[2]) <= zero;
  c.in_m0 = !c.p13_zero;
  c.in_m1 = !c.p12_zero;
  return c;
}

ProjectivePoint bundle_projection(const MQ5Point& p) {
  const auto c = chart_coords(p.z);
  Eigen::VectorXcd v(2);
  v << c.a[0] * c.a[3], c.a[1] * c.a[2];
  return ProjectivePoint(v);
}

int tangent_dimension(const Vector6c& z_in, bool with_quadric, double tol) {
  if (z_in.size() != 6) throw DomainError("expected 6 homogeneous coordinates");
  const Vector6c z = z_in / z_in.norm();
  const auto pr = pairs(4);
  Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(with_quadric ? 8 : 6, 12);
  auto norm_grad = [&](Eigen::Index row, int k, double w) {
    rows(row, 2 * k) += 2 * w * z[k].real();
    rows(row, 2 * k + 1) += 2 * w * z[k].imag();
  };
  for (int k = 0; k < 6; ++k) norm_grad(0, k, 1.0);
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 6; ++k)
      if (pr[static_cast<std::size_t>(k)].first == j || pr[static_cast<std::size_t>(k)].second == j) norm_grad(1 + j, k, 1.0);
  // Orthogonal to the orbit direction i z of the diagonal circle.
  for (int k = 0; k < 6; ++k) {
    rows(5, 2 * k) = -z[k].imag();
    rows(5, 2 * k + 1) = z[k].real();
  }
  if (with_quadric) {
    // Holomorphic gradient of z0 z5 + z2 z3 - z1 z4.
    const std::array<Complex, 6> c{z[5], -z[4], z[3], z[2], -z[1], z[0]};
    for (int k = 0; k < 6; ++k) {
      rows(6, 2 * k) = c[static_cast<std::size_t>(k)].real();
      rows(6, 2 * k + 1) = -c[static_cast<std::size_t>(k)].imag();
      rows(7, 2 * k) = c[static_cast<std::size_t>(k)].imag();
      rows(7, 2 * k + 1) = c[static_cast<std::size_t>(k)].real();
    }
  }
  return 12 - relative_rank(rows, tol);
}

}  // namespace mfib
