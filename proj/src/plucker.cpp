#include "mfib/plucker.hpp"

#include <algorithm>
#include <cmath>

#include "mfib/errors.hpp"

namespace mfib {

std::vector<std::pair<int, int>> pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

int pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= n || i == j) throw DomainError("invalid pair");
  // Pairs starting below i contribute (n-1) + (n-2) + ... + (n-i).
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

int binomial2(int n) { return n * (n - 1) / 2; }

int n_from_coordinate_count(std::size_t count) {
  for (int n = 2; binomial2(n) <= static_cast<int>(count); ++n)
    if (static_cast<std::size_t>(binomial2(n)) == count) return n;
  throw DomainError("coordinate count " + std::to_string(count) + " is not C(n,2)");
}

ProjectivePoint::ProjectivePoint(Eigen::VectorXcd coords) : z_(std::move(coords)) {
  const double norm = z_.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw DegenerateInput("projective point with zero coordinates");
  z_ /= norm;
  // First coordinate that is not negligible carries the phase reference.
  const double cut = 1e-14;
  for (Eigen::Index i = 0; i < z_.size(); ++i) {
    if (std::abs(z_[i]) > cut) {
      z_ *= std::conj(z_[i]) / std::abs(z_[i]);
      z_[i] = std::abs(z_[i]);
      break;
    }
  }
}

double ProjectivePoint::distance(const ProjectivePoint& other) const {
  if (other.size() != size()) throw DomainError("projective points of different dimension");
  // Norm of the component orthogonal to `other`; equals sqrt(1 - |<a,b>|^2)
  // but stays accurate when the points nearly coincide.
  const Complex overlap = other.z_.dot(z_);
  return std::min(1.0, (z_ - overlap * other.z_).norm());
}

GrassmannPoint::GrassmannPoint(Eigen::Matrix<Complex, 2, Eigen::Dynamic> rows) : m_(std::move(rows)) {
  if (m_.cols() < 2) throw DomainError("Grassmann point needs n >= 2 columns");
  double largest = 0.0;
  for (Eigen::Index c = 0; c < m_.cols(); ++c)
    for (Eigen::Index r = 0; r < 2; ++r) largest = std::max(largest, std::abs(m_(r, c)));
  double best_minor = 0.0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j) best_minor = std::max(best_minor, std::abs(minor(i, j)));
  if (!(best_minor > 1e-12 * largest * largest))
    throw DegenerateInput("matrix does not have rank 2");
}

GrassmannPoint GrassmannPoint::scaled_columns(const Eigen::VectorXcd& t) const {
  if (t.size() != m_.cols()) throw DomainError("torus element length mismatch");
  Eigen::Matrix<Complex, 2, Eigen::Dynamic> out = m_;
  for (Eigen::Index c = 0; c < m_.cols(); ++c) out.col(c) *= t[c];
  return GrassmannPoint(std::move(out));
}

Eigen::VectorXcd plucker_minors(const GrassmannPoint& l) {
  const int n = l.n();
  Eigen::VectorXcd p(binomial2(n));
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) p[k++] = l.minor(i, j);
  return p;
}

ProjectivePoint plucker_embed(const GrassmannPoint& l) { return ProjectivePoint(plucker_minors(l)); }

double plucker_relation_residual(const Eigen::VectorXcd& z) {
  if (z.size() != 6) throw Unsupported("Pluecker relation implemented for n = 4 only");
  return std::abs(z[0] * z[5] + z[2] * z[3] - z[1] * z[4]);
}

double plucker_relation_residual(const ProjectivePoint& z) { return plucker_relation_residual(z.coords()); }

ChartCoords4 chart_coords(const Eigen::VectorXcd& plucker) {
  if (plucker.size() != 6) throw Unsupported("chart coordinates implemented for n = 4 only");
  const double norm = plucker.norm();
  if (!(norm > 0.0)) throw DegenerateInput("zero Pluecker vector");
  const Complex p23 = plucker[3];
  if (std::abs(p23) / norm <= 1e-12) throw OutsideChart("P23 vanishes: point outside chart M23");
  ChartCoords4 c;
  c.a = {plucker[1] / p23, -plucker[5] / p23, -plucker[0] / p23, plucker[4] / p23};
  return c;
}

ChartCoords4 chart_coords(const GrassmannPoint& l) {
  if (l.n() != 4) throw Unsupported("chart coordinates implemented for n = 4 only");
  return chart_coords(plucker_minors(l));
}

GrassmannPoint from_chart(const ChartCoords4& c) {
  const auto& a = c.a;
  Eigen::Matrix<Complex, 2, Eigen::Dynamic> m(2, 4);
  m << a[0], 1.0, 0.0, a[1],
       a[2], 0.0, 1.0, a[3];
  return GrassmannPoint(std::move(m));
}

}  // namespace mfib
