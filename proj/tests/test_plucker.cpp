#include <doctest.h>

#include <random>

#include "mfib/errors.hpp"
#include "mfib/plucker.hpp"
#include "mfib/verify.hpp"

using namespace mfib;
using Mat = Eigen::Matrix<Complex, 2, Eigen::Dynamic>;

namespace {

Mat random_plane(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Mat m(2, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < 2; ++r) m(r, c) = Complex(g(rng), g(rng));
  return m;
}

Eigen::VectorXcd vec(std::initializer_list<Complex> v) {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (auto x : v) out[i++] = x;
  return out;
}

}  // namespace

TEST_CASE("pair indexing") {
  CHECK(pairs(4).size() == 6);
  CHECK(pair_index(4, 1, 2) == 3);
  CHECK(pair_index(5, 3, 4) == 9);
  CHECK(n_from_coordinate_count(10) == 5);
  CHECK_THROWS_AS(n_from_coordinate_count(7), DomainError);
}

TEST_CASE("plucker embedding of coordinate planes") {
  Mat e12(2, 4);
  e12 << 1, 0, 0, 0, 0, 1, 0, 0;
  const auto p = plucker_embed(GrassmannPoint(e12));
  CHECK(p.distance(ProjectivePoint(vec({1, 0, 0, 0, 0, 0}))) < 1e-14);

  Mat m(2, 4);
  m << 1, 0, 1, 0, 0, 1, 0, 1;
  const auto q = plucker_embed(GrassmannPoint(m));
  CHECK((q.coords() - vec({0.5, 0, 0.5, -0.5, 0, 0.5})).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((plucker_minors(GrassmannPoint(m)) - verify::cofactor_minors(m)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("rank deficiency is rejected") {
  Mat m(2, 4);
  m << 1, 2, 3, 4, 2, 4, 6, 8;
  CHECK_THROWS_AS(GrassmannPoint{m}, DegenerateInput);
}

TEST_CASE("quadric vanishes on the image and minors match the cofactor oracle") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const Mat m = random_plane(rng, 4);
    const GrassmannPoint l(m);
    CHECK(plucker_relation_residual(plucker_embed(l)) < 1e-12);
    CHECK((plucker_minors(l) - verify::cofactor_minors(m)).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK(plucker_relation_residual(vec({1, 0, 0, 0, 0, 1})) == doctest::Approx(1.0));
  const double s6 = 1 / std::sqrt(6.0), s = std::sqrt(5.0 / 18);
  CHECK(plucker_relation_residual(vec({0, s6, s6, s, s, 1.0 / 3})) < 1e-12);
  CHECK_THROWS_AS(plucker_relation_residual(vec({1, 0, 0, 0, 0, 0, 0, 0, 0, 1})), Unsupported);
}

TEST_CASE("torus equivariance of the embedding") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0, 6.283185307179586);
  const auto pr = pairs(4);
  for (int k = 0; k < 100; ++k) {
    const GrassmannPoint l(random_plane(rng, 4));
    Eigen::VectorXcd t(4);
    for (int i = 0; i < 4; ++i) t[i] = std::polar(1.0, angle(rng));
    Eigen::VectorXcd acted = plucker_minors(l);
    for (std::size_t i = 0; i < pr.size(); ++i) acted[static_cast<Eigen::Index>(i)] *= t[pr[i].first] * t[pr[i].second];
    CHECK(plucker_embed(l.scaled_columns(t)).distance(ProjectivePoint(acted)) < 1e-10);
  }
}

TEST_CASE("chart coordinates and from_chart are inverse") {
  ChartCoords4 a{{Complex(1), Complex(2), Complex(3), Complex(4)}};
  auto back = chart_coords(from_chart(a));
  for (int k = 0; k < 4; ++k) CHECK(std::abs(back.a[static_cast<std::size_t>(k)] - a.a[static_cast<std::size_t>(k)]) < 1e-12);

  Mat e23(2, 4);
  e23 << 0, 1, 0, 0, 0, 0, 1, 0;
  for (auto x : chart_coords(GrassmannPoint(e23)).a) CHECK(std::abs(x) == 0.0);
  CHECK(from_chart(ChartCoords4{}).matrix() == e23);

  const auto ones = plucker_embed(from_chart(ChartCoords4{{1.0, 1.0, 1.0, 1.0}}));
  CHECK(plucker_relation_residual(ones) < 1e-12);

  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int k = 0; k < 100; ++k) {
    ChartCoords4 c;
    for (auto& x : c.a) x = Complex(g(rng), g(rng));
    const auto r = chart_coords(from_chart(c));
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(r.a[i] - c.a[i]) < 1e-12);
    // Back again, up to projective normalization.
    const GrassmannPoint l(random_plane(rng, 4));
    CHECK(plucker_embed(from_chart(chart_coords(l))).distance(plucker_embed(l)) < 1e-10);
  }

  Mat e12(2, 4);
  e12 << 1, 0, 0, 0, 0, 1, 0, 0;
  CHECK_THROWS_AS(chart_coords(GrassmannPoint(e12)), OutsideChart);
}

TEST_CASE("projective normalization") {
  const ProjectivePoint p(vec({0, Complex(0, 2), 2}));
  CHECK(p[0] == Complex(0));
  CHECK(p[1].imag() == 0.0);
  CHECK(p[1].real() > 0);
  CHECK(p.coords().norm() == doctest::Approx(1.0));
  CHECK(p.distance(ProjectivePoint(vec({0, 1, Complex(0, -1)}))) < 1e-15);
  CHECK_THROWS_AS(ProjectivePoint(vec({0, 0})), DegenerateInput);
}
