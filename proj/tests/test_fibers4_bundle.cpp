#include <doctest.h>

#include "mfib/errors.hpp"
#include "mfib/fibers4.hpp"
#include "mfib/seeding.hpp"
#include "mfib/verify.hpp"

using namespace mfib;

TEST_CASE("complete intersection values") {
  ChartUV zero{Eigen::Vector4d::Zero(), Eigen::Vector4d::Zero()};
  CHECK(complete_intersection_f(zero).norm() == 0.0);
  for (const auto& c : mq5_fiber_circles()) {
    const auto f = complete_intersection_f(chart_uv(c.base));
    CHECK((f - Eigen::Vector3d(0, -1, 0)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(jacobian_rank(chart_uv(c.base)) == 3);
  }
  for (std::size_t i = 0; i < 1000; ++i) {
    auto rng = sample_rng(10, i);
    const auto uv = chart_uv(F_param(m2_random(rng), torus3_random(rng)).z);
    CHECK((complete_intersection_f(uv) - Eigen::Vector3d(0, -1, 0)).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(jacobian_rank(uv, 1e-6) == 3);
    CHECK((jacobian_f(uv) - verify::finite_difference_jacobian(uv)).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("the equipotential value is derived exactly from the moment equations") {
  CHECK(verify::derived_f_value(1) == Rational(0));
  CHECK(verify::derived_f_value(2) == Rational(-1));
  CHECK(verify::derived_f_value(3) == Rational(0));
}

TEST_CASE("Jacobian matches finite differences away from the fiber too") {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> g;
  for (int k = 0; k < 100; ++k) {
    ChartUV p;
    for (int i = 0; i < 4; ++i) {
      p.u[i] = g(rng);
      p.v[i] = g(rng);
    }
    CHECK((jacobian_f(p) - verify::finite_difference_jacobian(p)).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("chart entries on M_Q^5") {
  for (std::size_t i = 0; i < 200; ++i) {
    auto rng = sample_rng(13, i);
    const auto c = chart_coords(F_param(m2_random(rng), torus3_random(rng)).z);
    CHECK(std::abs(c.a[1]) > 1e-10);
    CHECK(std::abs(c.a[3]) > 1e-10);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a + 1; b < 4; ++b) CHECK(std::norm(c.a[a]) + std::norm(c.a[b]) > 0);
  }
}

TEST_CASE("bundle transition") {
  CHECK(transition_determinant() == -1);
  const auto one = bundle_transition({1.0, 1.0, 1.0}, ChartDirection::zero_to_one);
  for (auto x : one) CHECK(std::abs(x - 1.0) < 1e-15);
  const auto i = bundle_transition({Complex(0, 1), 1.0, 1.0}, ChartDirection::zero_to_one);
  CHECK(std::abs(i[0] - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(i[1] - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(i[2] - 1.0) < 1e-15);

  // Substitution in t1' = t1 t2 / t3, t2' = t1, t3' = t3.
  auto rng = sample_rng(14, 0);
  for (int k = 0; k < 1000; ++k) {
    const auto t = torus3_random(rng);
    const auto f = bundle_transition(t, ChartDirection::zero_to_one);
    CHECK(std::abs(f[0] - t[0] * t[1] / t[2]) < 1e-12);
    CHECK(std::abs(f[1] - t[0]) < 1e-12);
    CHECK(std::abs(f[2] - t[2]) < 1e-12);
    const auto back = bundle_transition(f, ChartDirection::one_to_zero);
    for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(back[j] - t[j]) < 1e-12);
  }
  // The two exponent matrices are inverse to each other.
  const auto e = transition_matrix(ChartDirection::zero_to_one), inv = transition_matrix(ChartDirection::one_to_zero);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s += e[r][k] * inv[k][c];
      CHECK(s == (r == c));
    }
}

TEST_CASE("chart coverage") {
  const auto circles = mq5_fiber_circles();
  const auto c0 = verify_chart_coverage(circles[0].at({1.0, 1.0, 1.0}));
  CHECK(c0.p12_zero);
  CHECK(c0.in_m0);
  CHECK_FALSE(c0.in_m1);
  const auto c1 = verify_chart_coverage(circles[1].at({1.0, 1.0, 1.0}));
  CHECK(c1.p13_zero);
  CHECK(c1.in_m1);
  CHECK_FALSE(c1.in_m0);
  CHECK(bundle_projection(circles[0].at({1.0, 1.0, 1.0})).distance(ProjectivePoint(Eigen::Vector2cd(1.0, 0.0))) < 1e-12);
  CHECK(bundle_projection(circles[1].at({1.0, 1.0, 1.0})).distance(ProjectivePoint(Eigen::Vector2cd(0.0, 1.0))) < 1e-12);
  for (std::size_t i = 0; i < 200; ++i) {
    auto rng = sample_rng(15, i);
    const auto c = verify_chart_coverage(F_param(m2_random(rng), torus3_random(rng)));
    CHECK(c.in_m0);
    CHECK(c.in_m1);
  }
  Vector6c bad = Vector6c::Zero(6);
  bad[3] = 1;
  CHECK_THROWS_AS(verify_chart_coverage(MQ5Point{bad}), CertificateFailure);
}

TEST_CASE("tangent dimensions") {
  for (std::size_t i = 0; i < 100; ++i) {
    auto rng = sample_rng(16, i);
    CHECK(tangent_dimension(h_param(sphere_random(rng), phase_random(rng), phase_random(rng)).z, false) == 7);
    const auto p = F_param(m2_random(rng), torus3_random(rng));
    CHECK(tangent_dimension(p.z, true) == 5);
    CHECK(tangent_dimension(orbit_permute(p.z, Orbit::second), true) == 5);
  }
}
