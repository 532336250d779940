#include <doctest.h>

#include <numbers>

#include "mfib/errors.hpp"
#include "mfib/fibers4.hpp"
#include "mfib/moment.hpp"
#include "mfib/seeding.hpp"

using namespace mfib;

namespace {

const double s6 = 1 / std::sqrt(6.0);
const double s518 = std::sqrt(5.0 / 18);

double moment_q(const Vector6c& z) {
  Eigen::Vector4d q(1.0 / 3, 5.0 / 9, 5.0 / 9, 5.0 / 9);
  return (mu_tilde(z, 4) - Eigen::VectorXd(q)).cwiseAbs().maxCoeff();
}

void check_mq5(const Vector6c& z) {
  CHECK(plucker_relation_residual(z) < 1e-10);
  CHECK(moment_q(z) < 1e-10);
  CHECK(z.head(3).squaredNorm() == doctest::Approx(1.0 / 3));
  CHECK(std::abs(z[3].imag()) < 1e-15);
  CHECK(z[3].real() > 0);
}

}  // namespace

TEST_CASE("m2_sample on the circle and the I0 edge") {
  const auto c = m2_sample(s6, s6, 1);
  CHECK(std::abs(c.z0 - c.z1) < 1e-12);
  CHECK(c.z2 < 1e-7);
  CHECK(surface_residual(c) < 1e-10);

  // |z0| = 0: feasible only where |z2||z3| = |z1||z4|; bisect for r1.
  auto gap = [](double r1) {
    const double r2 = std::sqrt(1.0 / 3 - r1 * r1);
    return r2 * a_of(r2) - r1 * a_of(r1);
  };
  double lo = 0, hi = std::sqrt(1.0 / 3);
  for (int k = 0; k < 200; ++k) (gap(0.5 * (lo + hi)) > 0 ? lo : hi) = 0.5 * (lo + hi);
  const double r1 = 0.5 * (lo + hi);
  CHECK(r1 * r1 == doctest::Approx(1.0 / 6));
  const auto e = m2_sample(0.0, r1, 1);
  CHECK(std::abs(e.z0) == 0.0);
  CHECK(surface_residual(e) < 1e-10);
  CHECK(e.z2 * e.z2 == doctest::Approx(1.0 / 6));

  CHECK_THROWS_AS(m2_sample(0.0, 0.1, 1), NoSolution);
  CHECK_THROWS_AS(m2_sample(0.5, 0.5, 1), DomainError);
  CHECK_THROWS_AS(m2_sample(0.1, 0.1, 0), DomainError);
}

TEST_CASE("M^2 and M^3 samples satisfy the surface equation") {
  for (std::size_t i = 0; i < 1000; ++i) {
    auto rng = sample_rng(4, i);
    const auto m = m2_random(rng);
    CHECK(surface_residual(m) < 1e-10);
    CHECK(std::norm(m.z0) + std::norm(m.z1) <= 1.0 / 3 + 1e-12);
    const auto m3 = m3_sample(rng);
    CHECK(surface_residual(m3) < 1e-10);
    CHECK(std::norm(m3.z0) + std::norm(m3.z1) + std::norm(m3.z2) == doctest::Approx(1.0 / 3));
  }
  auto rng = sample_rng(4, 0);
  const auto m = m2_random(rng);
  const auto same = s1_action(m, 1.0);
  CHECK(same.z0 == m.z0);
  CHECK(same.z2 == Complex(m.z2));
}

TEST_CASE("F parametrizes M_Q^5 and round-trips") {
  for (std::size_t i = 0; i < 1000; ++i) {
    auto rng = sample_rng(5, i);
    const auto m = m2_random(rng);
    const auto t = torus3_random(rng);
    const auto p = F_param(m, t);
    check_mq5(p.z);
    const auto [m_back, t_back] = F_preimage(p);
    CHECK(std::abs(m_back.z0 - m.z0) < 1e-10);
    CHECK(std::abs(m_back.z1 - m.z1) < 1e-10);
    CHECK(std::abs(m_back.z2 - m.z2) < 1e-10);
    for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(t_back[k] - t[k]) < 1e-10);
  }
  auto rng = sample_rng(5, 0);
  const auto m = m2_random(rng);
  const auto p = F_param(m, {1.0, 1.0, 1.0});
  CHECK(p.z[0] == m.z0);
  CHECK(p.z[2] == Complex(m.z2));
}

TEST_CASE("F preimage on the circle uses t3 = 1") {
  const auto circle = m2_sample(s6, s6, 1);
  Phases3 t{std::polar(1.0, 0.4), std::polar(1.0, -1.1), std::polar(1.0, 2.0)};
  const auto p = F_param(circle, t);
  const auto [m, tb] = F_preimage(p);
  CHECK(tb[2] == Complex(1.0));
  CHECK((F_param(m, tb).z - p.z).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("G parametrizes M_Q^5 injectively") {
  std::vector<Vector6c> images;
  for (std::size_t i = 0; i < 1000; ++i) {
    auto rng = sample_rng(6, i);
    const auto m = m3_sample(rng);
    const Complex t1 = phase_random(rng), t2 = phase_random(rng);
    const auto p = G_param(m, t1, t2);
    check_mq5(p.z);
    const auto back = G_preimage(p);
    CHECK(std::abs(back.t1 - t1) < 1e-10);
    CHECK(std::abs(back.t2 - t2) < 1e-10);
    CHECK(std::abs(back.m.z2 - m.z2) < 1e-10);
    images.push_back(p.z);
  }
  double closest = 1;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j) closest = std::min(closest, (images[i] - images[j]).norm());
  CHECK(closest > 0);
}

TEST_CASE("projections to CP^1 and CP^2") {
  const ProjectivePoint one_one(Eigen::Vector2cd(1.0, 1.0));
  for (int k = 0; k < 16; ++k) {
    const Complex e = std::polar(s6, 2 * std::numbers::pi * k / 16);
    CHECK(proj_p(M2Point{e, e, 0.0}).distance(one_one) < 1e-10);
    const M3Point c{e, e, 0.0};
    CHECK(hopf_q(c).distance(ProjectivePoint(Eigen::Vector3cd(1.0, 1.0, 0.0))) < 1e-10);
  }
  // z1 = 0 maps to (0:1).
  double lo = 0, hi = std::sqrt(1.0 / 3);
  auto gap = [](double r0) {
    const double r2 = std::sqrt(1.0 / 3 - r0 * r0);
    return r0 * a_of(r0) - r2 * a_of(r2);
  };
  for (int k = 0; k < 200; ++k) (gap(0.5 * (lo + hi)) < 0 ? lo : hi) = 0.5 * (lo + hi);
  const auto z1_zero = m2_sample(0.5 * (lo + hi), 0.0, 1);
  CHECK(proj_p(z1_zero).distance(ProjectivePoint(Eigen::Vector2cd(0.0, 1.0))) < 1e-10);

  // Off the circle distinct points have distinct images.
  double closest = 1;
  for (std::size_t i = 0; i < 1000; ++i) {
    auto rng = sample_rng(7, i);
    const auto a = m2_random(rng), b = m2_random(rng);
    if (a.z2 < 1e-6 || b.z2 < 1e-6) continue;
    closest = std::min(closest, proj_p(a).distance(proj_p(b)));
  }
  CHECK(closest > 0);
  CHECK_THROWS_AS(proj_p(M2Point{0.0, 0.0, 0.0}), DegenerateInput);
}

TEST_CASE("Hopf line, g equivariance and the commuting square") {
  for (std::size_t i = 0; i < 1000; ++i) {
    auto rng = sample_rng(8, i);
    const auto m = m3_sample(rng);
    const auto q = hopf_q(m);
    CHECK(std::abs(q[0] - q[1] - q[2]) < 1e-10);
    const Complex lambda = phase_random(rng);
    const auto moved = s1_action(m, lambda);
    CHECK(hopf_q(moved).distance(q) < 1e-10);
    const auto g = g_map(m);
    CHECK(g.norm() == doctest::Approx(1.0));
    CHECK((g_map(moved) - lambda * g).norm() < 1e-10);
    // (c : c' : c - c') -> (c : c') agrees with p and with the class of g.
    const ProjectivePoint first_two(Eigen::Vector2cd(q[0], q[1]));
    CHECK(first_two.distance(proj_p(m)) < 1e-10);
    CHECK(ProjectivePoint(Eigen::VectorXcd(g)).distance(proj_p(m)) < 1e-10);
  }
  const auto g = g_map(M3Point{s6, s6, 0.0});
  CHECK(std::abs(g[0] - 1 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(g[1] - 1 / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("the three fiber circles") {
  const auto circles = mq5_fiber_circles();
  const std::array<std::array<double, 6>, 3> x{{{0, 1.0 / 6, 1.0 / 6, 5.0 / 18, 5.0 / 18, 1.0 / 9},
                                                {1.0 / 6, 0, 1.0 / 6, 5.0 / 18, 1.0 / 9, 5.0 / 18},
                                                {1.0 / 6, 1.0 / 6, 0, 1.0 / 9, 5.0 / 18, 5.0 / 18}}};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(plucker_relation_residual(circles[i].base) < 1e-12);
    for (int k = 0; k < 6; ++k) CHECK(circles[i].mu_hat[k] == doctest::Approx(x[i][static_cast<std::size_t>(k)]));
    for (std::size_t s = 0; s < 100; ++s) {
      auto rng = sample_rng(9, s);
      const auto p = circles[i].at(torus3_random(rng));
      check_mq5(p.z);
      for (int k = 0; k < 6; ++k) CHECK(std::norm(p.z[k]) == doctest::Approx(x[i][static_cast<std::size_t>(k)]));
    }
  }
  CHECK(std::abs(circles[0].base[3] - s518) < 1e-15);
}
