#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mfib/linear_program.hpp"
#include "mfib/plucker.hpp"
#include "mfib/rational.hpp"

// Moment maps of the T^n action: the standard map mu_hat : CP^N -> Delta^N,
// the induced mu_tilde : CP^N -> Delta_{n,2}, and mu = mu_tilde o p on G_{n,2},
// together with the linear map A sending the i-th simplex vertex to the
// weight vector of the i-th pair.
namespace mfib {

struct WeightVector {
  std::pair<int, int> pair;  // 0-based, i < j
  std::vector<int> entries;  // length n, ones at the pair
};

std::vector<WeightVector> weight_vectors(int n);

// |z_i|^2 / |z|^2.
Eigen::VectorXd mu_hat(const ProjectivePoint& z);
Eigen::VectorXd mu_hat(const Eigen::VectorXcd& z);

Eigen::VectorXd mu_tilde(const ProjectivePoint& z, int n);
Eigen::VectorXd mu_tilde(const Eigen::VectorXcd& z, int n);

Eigen::VectorXd mu(const GrassmannPoint& l);

// Columns are the weight vectors in pair order.
Eigen::VectorXd a_map(const Eigen::VectorXd& x, int n);
RationalVector a_map(const RationalVector& x, int n);
exact::RationalMatrix a_matrix(int n);

// 0 <= x_i <= 1 and sum x = 2, within tol.
bool in_hypersimplex(const Eigen::VectorXd& x, double tol = 1e-10);
// x_i >= 0 and sum x = 1, within tol.
bool in_simplex(const Eigen::VectorXd& x, double tol = 1e-10);

}  // namespace mfib
