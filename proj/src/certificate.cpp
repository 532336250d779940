#include "mfib/certificate.hpp"

#include <cmath>

#include "mfib/moment.hpp"
#include "mfib/seeding.hpp"

namespace mfib {

std::optional<FiberKind> parse_fiber_kind(std::string_view s) {
  if (s == "mq7") return FiberKind::mq7;
  if (s == "mq5") return FiberKind::mq5;
  if (s == "m2") return FiberKind::m2;
  if (s == "m3") return FiberKind::m3;
  return std::nullopt;
}

std::string to_string(FiberKind kind) {
  switch (kind) {
    case FiberKind::mq7: return "mq7";
    case FiberKind::mq5: return "mq5";
    case FiberKind::m2: return "m2";
    case FiberKind::m3: return "m3";
  }
  return "?";
}

namespace {

void fail(FiberCertificate& c, const std::string& what) {
  if (c.pass) c.failure = what;
  c.pass = false;
}

Eigen::VectorXd to_double(const RationalVector& v) {
  Eigen::VectorXd d(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) d[static_cast<Eigen::Index>(i)] = v[i].to_double();
  return d;
}

}  // namespace

FiberCertificate certify_point(const Vector6c& first, Orbit orbit, const Tolerances& tol,
                               std::optional<double> surface) {
  FiberCertificate c;
  c.point = orbit_permute(first, orbit);
  c.moment = (mu_tilde(c.point, 4) - to_double(orbit_point(orbit))).cwiseAbs().maxCoeff();
  if (!(c.moment <= tol.identity)) fail(c, "moment residual");
  c.surface = surface;
  if (surface && !(*surface <= tol.identity)) fail(c, "surface residual");
  return c;
}

namespace {

// Pluecker, chart and Jacobian checks for points of M_Q^5. The chart is the
// one of the first orbit, so it is evaluated on the unpermuted vector.
void certify_grassmann(FiberCertificate& c, const Vector6c& first, const Tolerances& tol) {
  c.plucker = plucker_relation_residual(c.point / c.point.norm());
  if (!(*c.plucker <= tol.identity)) fail(c, "plucker residual");
  const auto uv = chart_uv(first);
  c.f_values = complete_intersection_f(uv);
  const double dev = (*c.f_values - Eigen::Vector3d(0, -1, 0)).cwiseAbs().maxCoeff();
  if (!(dev <= tol.algebraic)) fail(c, "f-values");
  c.jacobian_rank = jacobian_rank(uv, tol.rank);
  if (*c.jacobian_rank != 3) fail(c, "jacobian rank");
}

}  // namespace

FiberCertificate certify_sample(FiberKind kind, std::uint64_t seed, std::size_t index, Orbit orbit,
                                const Tolerances& tol) {
  auto rng = sample_rng(seed, index);
  FiberCertificate c;
  try {
    switch (kind) {
      case FiberKind::mq7: {
        const auto s = sphere_random(rng);
        const Complex t4 = phase_random(rng), t5 = phase_random(rng);
        const auto p = h_param(s, t4, t5);
        c = certify_point(p.z, orbit, tol);
        const auto back = h_preimage(p);
        const double trip = (h_param(back.s, back.t4, back.t5).z - p.z).cwiseAbs().maxCoeff();
        if (!(trip <= tol.identity)) fail(c, "h round trip");
        break;
      }
      case FiberKind::mq5: {
        const auto m = m2_random(rng);
        const auto p = F_param(m, torus3_random(rng));
        c = certify_point(p.z, orbit, tol);
        certify_grassmann(c, p.z, tol);
        break;
      }
      case FiberKind::m2: {
        const auto m = m2_random(rng);
        const auto p = F_param(m, {1.0, 1.0, 1.0});
        c = certify_point(p.z, orbit, tol, surface_residual(m));
        certify_grassmann(c, p.z, tol);
        break;
      }
      case FiberKind::m3: {
        const auto m = m3_sample(rng);
        const auto p = G_param(m, 1.0, 1.0);
        c = certify_point(p.z, orbit, tol, surface_residual(m));
        certify_grassmann(c, p.z, tol);
        break;
      }
    }
  } catch (const std::exception& e) {
    c = FiberCertificate{};
    fail(c, std::string("sampling error: ") + e.what());
  }
  c.index = index;
  return c;
}

}  // namespace mfib
