#include "mfib/moment.hpp"

#include <cmath>

#include "mfib/errors.hpp"

namespace mfib {

std::vector<WeightVector> weight_vectors(int n) {
  if (n < 4) throw DomainError("weight vectors require n >= 4");
  std::vector<WeightVector> out;
  for (auto [i, j] : pairs(n)) {
    WeightVector w{{i, j}, std::vector<int>(static_cast<std::size_t>(n), 0)};
    w.entries[static_cast<std::size_t>(i)] = 1;
    w.entries[static_cast<std::size_t>(j)] = 1;
    out.push_back(std::move(w));
  }
  return out;
}

Eigen::VectorXd mu_hat(const Eigen::VectorXcd& z) {
  const double total = z.squaredNorm();
  if (!(total > 0.0)) throw DegenerateInput("moment map of the zero vector");
  return z.cwiseAbs2() / total;
}

Eigen::VectorXd mu_hat(const ProjectivePoint& z) { return mu_hat(z.coords()); }

Eigen::VectorXd a_map(const Eigen::VectorXd& x, int n) {
  if (x.size() != binomial2(n)) throw DomainError("A: input length is not C(n,2)");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  int k = 0;
  for (auto [i, j] : pairs(n)) {
    out[i] += x[k];
    out[j] += x[k];
    ++k;
  }
  return out;
}

RationalVector a_map(const RationalVector& x, int n) { return a_matrix(n) * x; }

exact::RationalMatrix a_matrix(int n) {
  exact::RationalMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(binomial2(n)));
  std::size_t k = 0;
  for (auto [i, j] : pairs(n)) {
    a(static_cast<std::size_t>(i), k) = 1;
    a(static_cast<std::size_t>(j), k) = 1;
    ++k;
  }
  return a;
}

Eigen::VectorXd mu_tilde(const Eigen::VectorXcd& z, int n) {
  if (z.size() != binomial2(n)) throw DomainError("mu_tilde: coordinate count is not C(n,2)");
  const double total = z.squaredNorm();
  if (!(total > 0.0)) throw DegenerateInput("moment map of the zero vector");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  int k = 0;
  for (auto [i, j] : pairs(n)) {
    const double w = std::norm(z[k++]) / total;
    out[i] += w;
    out[j] += w;
  }
  return out;
}

Eigen::VectorXd mu_tilde(const ProjectivePoint& z, int n) { return mu_tilde(z.coords(), n); }

Eigen::VectorXd mu(const GrassmannPoint& l) { return mu_tilde(plucker_embed(l), l.n()); }

bool in_hypersimplex(const Eigen::VectorXd& x, double tol) {
  if (std::abs(x.sum() - 2.0) > tol) return false;
  return (x.array() >= -tol).all() && (x.array() <= 1.0 + tol).all();
}

bool in_simplex(const Eigen::VectorXd& x, double tol) {
  return std::abs(x.sum() - 1.0) <= tol && (x.array() >= -tol).all();
}

}  // namespace mfib
