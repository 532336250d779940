#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mfib/fibers4.hpp"
#include "mfib/rational.hpp"
#include "mfib/regularity.hpp"

// Independent oracles used to cross-check the library, and the acceptance
// suite built on top of them.
namespace mfib::verify {

// x in the relative interior of conv(points): feasible and every weight can
// be made positive (one exact LP per weight).
bool in_relative_interior(const RationalVector& x, const std::vector<RationalVector>& points);

// Exhaustive stratification for n = 4: x is mu_tilde-regular iff no support
// sigma among all 63 has x in relint P_sigma with dim P_sigma < 3.
bool brute_force_regular_mu_tilde_n4(const RationalVector& x);

// Central differences of complete_intersection_f.
Eigen::Matrix<double, 3, 8> finite_difference_jacobian(const ChartUV& p, double step = 1e-6);

// 2x2 minors through Eigen's determinant of each column pair.
Eigen::VectorXcd cofactor_minors(const Eigen::Matrix<Complex, 2, Eigen::Dynamic>& m);

// Exact value of f_k on M_Q^5, derived from the moment equations: with
// x = mu_hat(z), x3 f_k is a linear form in x (the quadric turns
// |a1 a4 - a2 a3|^2 into x2/x3), and it must be a constant multiple of x3 on
// the whole solution set of A x = Q. Throws if it is not.
Rational derived_f_value(int k);

struct CriterionResult {
  int id = 0;
  std::string key;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 1000;
  std::optional<std::string> only;  // criterion key
};

struct CriterionInfo {
  int id;
  std::string key;
  std::string title;
};

const std::vector<CriterionInfo>& criteria();

// Runs the selected criteria in order. Throws DomainError for an unknown key.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

}  // namespace mfib::verify
