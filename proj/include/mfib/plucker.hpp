#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace mfib {

using Complex = std::complex<double>;

// Pairs {i<j} of {0..n-1} in lexicographic order; index k of a homogeneous
// coordinate on CP^N corresponds to pairs(n)[k].
std::vector<std::pair<int, int>> pairs(int n);
int pair_index(int n, int i, int j);
int binomial2(int n);
// Inverse of binomial2; throws DomainError if size is not C(n,2) for n >= 2.
int n_from_coordinate_count(std::size_t count);

// Point of CP^N stored in canonical normalization: unit Euclidean norm, first
// nonzero coordinate real positive. Two representatives of the same point
// normalize to the same vector.
class ProjectivePoint {
 public:
  // Normalizes `coords`; throws DegenerateInput if all coordinates vanish.
  explicit ProjectivePoint(Eigen::VectorXcd coords);

  const Eigen::VectorXcd& coords() const { return z_; }
  Eigen::Index size() const { return z_.size(); }
  Complex operator[](Eigen::Index i) const { return z_[i]; }

  // Chordal (Fubini-Study sine) distance sqrt(1 - |<a,b>|^2), in [0,1].
  double distance(const ProjectivePoint& other) const;

 private:
  Eigen::VectorXcd z_;
};

// Rank-2 2xn complex matrix representing a plane of C^n. Rank is certified
// at construction: some 2x2 minor exceeds 1e-12 * (largest entry modulus)^2.
class GrassmannPoint {
 public:
  explicit GrassmannPoint(Eigen::Matrix<Complex, 2, Eigen::Dynamic> rows);

  int n() const { return static_cast<int>(m_.cols()); }
  const Eigen::Matrix<Complex, 2, Eigen::Dynamic>& matrix() const { return m_; }
  Complex minor(int i, int j) const { return m_(0, i) * m_(1, j) - m_(0, j) * m_(1, i); }

  // Right action of the diagonal torus: column k scaled by t_k.
  GrassmannPoint scaled_columns(const Eigen::VectorXcd& t) const;

 private:
  Eigen::Matrix<Complex, 2, Eigen::Dynamic> m_;
};

// Coordinates of the affine chart P^{23} != 0 of G_{4,2}: the plane is
// spanned by the columns of ((a1,a3),(1,0),(0,1),(a2,a4)).
struct ChartCoords4 {
  std::array<Complex, 4> a{};
};

// Raw 2x2 minors in lexicographic pair order (not normalized).
Eigen::VectorXcd plucker_minors(const GrassmannPoint& l);

ProjectivePoint plucker_embed(const GrassmannPoint& l);

// |z0 z5 + z2 z3 - z1 z4| for coordinates in pair order 12,13,14,23,24,34.
// The raw overload works on any representative; callers comparing against a
// tolerance should pass a unit-norm one. Only n = 4 is supported.
double plucker_relation_residual(const ProjectivePoint& z);
double plucker_relation_residual(const Eigen::VectorXcd& z);

// Chart coordinates read off Pluecker coordinates of G_{4,2}:
// a1 = P13/P23, a2 = -P34/P23, a3 = -P12/P23, a4 = P24/P23.
// Throws OutsideChart when |P23| <= 1e-12 after normalization.
ChartCoords4 chart_coords(const GrassmannPoint& l);
ChartCoords4 chart_coords(const Eigen::VectorXcd& plucker);

GrassmannPoint from_chart(const ChartCoords4& a);

}  // namespace mfib
