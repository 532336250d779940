#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mfib/fibers4.hpp"

namespace mfib {

enum class FiberKind { mq7, mq5, m2, m3 };

std::optional<FiberKind> parse_fiber_kind(std::string_view s);
std::string to_string(FiberKind kind);

struct Tolerances {
  double identity = 1e-10;   // constructive identities
  double algebraic = 1e-9;   // f-values after the chart map
  double rank = 1e-6;        // relative SVD threshold
};

// Residual report for one fiber point. Fields that do not apply to a kind
// stay empty: M_Q^7 is not inside G_{4,2}, so it has no Pluecker residual
// or chart data.
struct FiberCertificate {
  std::size_t index = 0;
  Vector6c point;
  double moment = 0;
  std::optional<double> plucker;
  std::optional<double> surface;
  std::optional<int> jacobian_rank;
  std::optional<Eigen::Vector3d> f_values;
  bool pass = true;
  std::string failure;
};

// Checks a point given in first-orbit coordinates; `point` in the result is
// permuted for Orbit::second and all checks refer to that orbit's Q.
FiberCertificate certify_point(const Vector6c& first_orbit_point, Orbit orbit, const Tolerances& tol,
                               std::optional<double> surface = std::nullopt);

// Draws sample `index` of `kind` from the stream (seed, index) and certifies
// it. Never throws; sampling errors become failed certificates.
FiberCertificate certify_sample(FiberKind kind, std::uint64_t seed, std::size_t index, Orbit orbit,
                                const Tolerances& tol);

}  // namespace mfib
