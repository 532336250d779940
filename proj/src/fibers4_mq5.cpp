#include <algorithm>
#include <cmath>
#include <numbers>

#include "mfib/errors.hpp"
#include "mfib/fibers4.hpp"

namespace mfib {

namespace {

constexpr double kDegenerate = 1e-12;
constexpr double kClosureTol = 1e-10;
constexpr int kMaxRejections = 100000;

Complex unit_phase(Complex w) {
  const double m = std::abs(w);
  return m > 0.0 ? w / m : Complex(1.0, 0.0);
}

// Representative of the class with z3 real positive.
Vector6c gauge_z3(const Vector6c& z) {
  if (z.size() != 6) throw DomainError("expected 6 homogeneous coordinates");
  if (std::abs(z[3]) <= kDegenerate) throw DomainError("z3 vanishes; not a fiber point");
  return z * std::conj(unit_phase(z[3]));
}

}  // namespace

double surface_residual(const M2Point& m) {
  return std::abs(m.z0 * a_of(m.z0) + m.z2 * a_of(m.z2) - m.z1 * a_of(m.z1));
}

double surface_residual(const M3Point& m) {
  return std::abs(m.z0 * a_of(m.z0) + m.z2 * a_of(m.z2) - m.z1 * a_of(m.z1));
}

M2Point m2_sample(double r0, double r1, int branch) {
  if (branch != 1 && branch != -1) throw DomainError("branch must be +1 or -1");
  if (!(r0 >= 0.0 && r1 >= 0.0)) throw DomainError("magnitudes must be nonnegative");
  const double rest = 1.0 / 3.0 - r0 * r0 - r1 * r1;
  if (rest < -kDegenerate) throw DomainError("r0^2 + r1^2 exceeds 1/3");
  const double r2 = std::sqrt(std::max(0.0, rest));
  const double big_r0 = r0 * a_of(r0), big_r1 = r1 * a_of(r1), c = r2 * a_of(r2);

  if (big_r0 <= kDegenerate) {
    if (std::abs(c - big_r1) > kClosureTol) throw NoSolution("z0 = 0 requires |z2||z3| = |z1||z4|");
    return {0.0, r1, r2};
  }
  if (c <= kDegenerate) {
    if (std::abs(big_r0 - big_r1) > kClosureTol) throw NoSolution("z2 = 0 requires |z0||z5| = |z1||z4|");
    return {r0, r1, 0.0};
  }
  const double cos_a = (big_r1 * big_r1 - big_r0 * big_r0 - c * c) / (2 * big_r0 * c);
  if (std::abs(cos_a) > 1.0 + 1e-12) throw NoSolution("magnitudes admit no phase closure");
  const double cl = std::clamp(cos_a, -1.0, 1.0);
  const Complex e_alpha(cl, branch * std::sqrt(1.0 - cl * cl));
  const Complex w = big_r0 * e_alpha + c;
  return {r0 * e_alpha, r1 * unit_phase(w), r2};
}

Complex phase_random(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  return std::polar(1.0, angle(rng));
}

Phases3 torus3_random(std::mt19937_64& rng) {
  Phases3 t;
  for (auto& x : t) x = phase_random(rng);
  return t;
}

SpherePoint sphere_random(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  SpherePoint s;
  double norm2 = 0;
  for (auto& z : s.z) {
    z = Complex(g(rng), g(rng));
    norm2 += std::norm(z);
  }
  const double scale = std::sqrt(1.0 / 3.0 / norm2);
  for (auto& z : s.z) z *= scale;
  return s;
}

M2Point m2_random(std::mt19937_64& rng) {
  const double rmax = std::sqrt(1.0 / 3.0);
  std::uniform_real_distribution<double> radius(0.0, rmax);
  std::bernoulli_distribution coin;
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    const double r0 = radius(rng), r1 = radius(rng);
    const int branch = coin(rng) ? 1 : -1;
    if (r0 * r0 + r1 * r1 > 1.0 / 3.0) continue;
    try {
      return m2_sample(r0, r1, branch);
    } catch (const NoSolution&) {
    }
  }
  throw SearchExhausted("rejection sampling of M^2 exhausted");
}

M3Point s1_action(const M2Point& m, Complex lambda) { return {lambda * m.z0, lambda * m.z1, lambda * m.z2}; }

M3Point s1_action(const M3Point& m, Complex lambda) { return {lambda * m.z0, lambda * m.z1, lambda * m.z2}; }

M3Point m3_sample(std::mt19937_64& rng) {
  const auto m = m2_random(rng);
  return s1_action(m, phase_random(rng));
}

MQ5Point F_param(const M2Point& m, const Phases3& t) {
  const auto [t1, t2, t3] = t;
  Vector6c z(6);
  z << t1 * m.z0, t2 * m.z1, t3 * m.z2, a_of(m.z2), (t3 / t2) * a_of(m.z1), (t3 / t1) * a_of(m.z0);
  return {z};
}

std::pair<M2Point, Phases3> F_preimage(const MQ5Point& p) {
  const Vector6c z = gauge_z3(p.z);
  const Complex e4 = unit_phase(z[4]), e5 = unit_phase(z[5]);
  Phases3 t;
  if (std::abs(z[2]) > kDegenerate) {
    const Complex e2 = unit_phase(z[2]);
    t = {e2 / e5, e2 / e4, e2};
  } else {
    t = {1.0 / e5, 1.0 / e4, 1.0};
  }
  return {M2Point{z[0] / t[0], z[1] / t[1], std::abs(z[2])}, t};
}

MQ5Point G_param(const M3Point& m, Complex t1, Complex t2) {
  Vector6c z(6);
  z << t1 * m.z0, t2 * m.z1, m.z2, a_of(m.z2), a_of(m.z1) / t2, a_of(m.z0) / t1;
  return {z};
}

GPreimage G_preimage(const MQ5Point& p) {
  const Vector6c z = gauge_z3(p.z);
  const Complex t1 = std::conj(unit_phase(z[5])), t2 = std::conj(unit_phase(z[4]));
  return {M3Point{z[0] / t1, z[1] / t2, z[2]}, t1, t2};
}

namespace {

ProjectivePoint checked_point(Eigen::VectorXcd v) {
  if (v.cwiseAbs().maxCoeff() < 1e-14) throw DegenerateInput("all projection coordinates vanish");
  return ProjectivePoint(std::move(v));
}

}  // namespace

ProjectivePoint proj_p(const M2Point& m) {
  Eigen::VectorXcd v(2);
  v << m.z1 * a_of(m.z1), m.z0 * a_of(m.z0);
  return checked_point(v);
}

ProjectivePoint proj_p(const M3Point& m) {
  Eigen::VectorXcd v(2);
  v << m.z1 * a_of(m.z1), m.z0 * a_of(m.z0);
  return checked_point(v);
}

ProjectivePoint hopf_q(const M3Point& m) {
  Eigen::VectorXcd v(3);
  v << m.z1 * a_of(m.z1), m.z0 * a_of(m.z0), m.z2 * a_of(m.z2);
  return checked_point(v);
}

Eigen::Vector2cd g_map(const M3Point& m) {
  Eigen::Vector2cd v(m.z1 * a_of(m.z1), m.z0 * a_of(m.z0));
  const double d = v.norm();
  if (d < 1e-14) throw DegenerateInput("g is undefined when z0 = z1 = 0");
  return v / d;
}

MQ5Point FiberCircle::at(const Phases3& tau) const {
  Vector6c z = base;
  for (int k = 0; k < 6; ++k)
    for (int j = 0; j < 3; ++j) {
      const int e = exponents[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      for (int r = 0; r < std::abs(e); ++r) z[k] *= e > 0 ? tau[static_cast<std::size_t>(j)] : 1.0 / tau[static_cast<std::size_t>(j)];
    }
  return {gauge_z3(z)};
}

std::array<FiberCircle, 3> mq5_fiber_circles() {
  const double s6 = 1.0 / std::sqrt(6.0), s518 = std::sqrt(5.0 / 18.0), third = 1.0 / 3.0;
  std::array<FiberCircle, 3> c;

  c[0].index = 0;
  c[0].base = Vector6c(6);
  c[0].base << 0.0, s6, s6, s518, s518, third;
  c[0].exponents = {{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {-1, 0, 0}, {0, 0, 1}}};

  // z0 z5 + z2 z3 = z1 z4 = 0 forces opposite signs on z0 and z2.
  c[1].index = 1;
  c[1].base = Vector6c(6);
  c[1].base << s6, 0.0, -s6, s518, third, s518;
  c[1].exponents = {{{1, 0, 0}, {0, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {-1, 0, 0}}};

  c[2].index = 2;
  c[2].base = Vector6c(6);
  c[2].base << s6, s6, 0.0, third, s518, s518;
  c[2].exponents = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}, {0, 0, 1}, {0, -1, 0}, {-1, 0, 0}}};

  for (auto& circle : c) circle.mu_hat = circle.base.cwiseAbs2();
  return c;
}

}  // namespace mfib
