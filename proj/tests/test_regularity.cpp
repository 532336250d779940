#include <doctest.h>

#include "mfib/errors.hpp"
#include "mfib/regularity.hpp"
#include "mfib/verify.hpp"

using namespace mfib;

namespace {

StratumSupport support(std::initializer_list<std::pair<int, int>> ps, int n) {
  StratumSupport s;
  s.n = n;
  for (auto [i, j] : ps) s.sigma.push_back(pair_index(n, i, j));
  return s;
}

}  // namespace

TEST_CASE("stabilizer dimensions") {
  StratumSupport all{{0, 1, 2, 3, 4, 5}, 4};
  CHECK(stabilizer_dim(all).dim_polytope == 3);
  CHECK(stabilizer_dim(all).dim_stabilizer == 1);
  const auto s5 = stabilizer_dim(support({{0, 1}, {0, 2}, {1, 2}, {3, 4}}, 5));
  CHECK(s5.dim_polytope == 3);
  CHECK(s5.dim_stabilizer == 2);
  const auto point = stabilizer_dim(support({{0, 1}}, 4));
  CHECK(point.dim_polytope == 0);
  CHECK(point.dim_stabilizer == 4);
  CHECK_THROWS_AS(stabilizer_dim(StratumSupport{{}, 4}), DomainError);
}

TEST_CASE("every stratum has stabilizer at least the diagonal circle") {
  for (unsigned mask = 1; mask < 64; ++mask) {
    StratumSupport s{{}, 4};
    for (int k = 0; k < 6; ++k)
      if (mask & (1u << k)) s.sigma.push_back(k);
    const auto r = stabilizer_dim(s);
    CHECK(r.dim_stabilizer >= 1);
    CHECK(r.dim_stabilizer + r.dim_polytope == 4);
  }
}

TEST_CASE("regular values of mu") {
  CHECK(is_regular_mu(RationalVector::parse("1/3,5/9,5/9,5/9"), 4));
  CHECK_FALSE(is_regular_mu(RationalVector::parse("1/2,1/2,1/2,1/2"), 4));
  CHECK(is_regular_mu(RationalVector::parse("7/10,6/10,5/10,1/10,1/10"), 5));
  CHECK_THROWS_AS(is_regular_mu(RationalVector::parse("1/2,1/2,1/2,1/3"), 4), DomainError);
}

TEST_CASE("regular values of mu_tilde") {
  CHECK(is_regular_mu_tilde(RationalVector::parse("1/3,5/9,5/9,5/9"), 4));
  CHECK_FALSE(is_regular_mu_tilde(RationalVector::parse("7/10,6/10,5/10,1/10,1/10"), 5));
  for (int n = 4; n <= 6; ++n) {
    const MuTildeRegularity tilde(n);
    for (const auto& [i, j] : pairs(n)) CHECK_FALSE(tilde(exact::hypersimplex_vertex(n, i, j)));
  }
  CHECK_THROWS_AS(MuTildeRegularity(7), Unsupported);
  CHECK_THROWS_AS(is_regular_mu_tilde(RationalVector::parse("1,1,0,0"), 5), DomainError);
}

TEST_CASE("mu_tilde agrees with exhaustive stratification on a coarse grid") {
  const MuTildeRegularity tilde(4);
  for (const auto& x : hypersimplex_grid(4, 6)) CHECK(tilde(x) == verify::brute_force_regular_mu_tilde_n4(x));
}

TEST_CASE("eight chambers with the expected representatives") {
  const auto chambers = enumerate_chambers(4);
  REQUIRE(chambers.size() == 8);
  const auto arrangement = exact::arrangement_for_n(4);
  for (const auto& c : chambers) {
    CHECK(c.dimension == 3);
    CHECK(c.id.strict());
    CHECK(exact::sign_vector(c.representative, arrangement) == c.id);
  }
  CHECK(chambers.front().id.to_string() == "[-1,-1,-1]");
  CHECK(chambers.front().representative == RationalVector::parse("1/3,5/9,5/9,5/9"));
  CHECK(chambers.back().id.to_string() == "[1,1,1]");
  CHECK(chambers.back().representative == RationalVector::parse("2/3,4/9,4/9,4/9"));
  CHECK_THROWS_AS(enumerate_chambers(5), Unsupported);
}

TEST_CASE("two S4 orbits of four chambers") {
  const auto o = s4_chamber_orbits();
  REQUIRE(o.orbits.size() == 2);
  CHECK(o.orbits[0].size() == 4);
  CHECK(o.orbits[1].size() == 4);
  CHECK(o.orbit_label(o.c_minus) == "C-");
  CHECK(o.orbit_label(o.c_plus) == "C+");
  std::size_t minus = 0;
  for (const auto& c : enumerate_chambers(4)) minus += o.orbit_label(c.id) == "C-";
  CHECK(minus == 4);
}

TEST_CASE("grid generation") {
  const auto g = hypersimplex_grid(4, 2);
  // Compositions of 4 into 4 parts at most 2: 19.
  CHECK(g.size() == 19);
  for (const auto& x : g) CHECK(exact::in_hypersimplex(x));
}

TEST_CASE("center point parity") {
  for (int n = 4; n <= 10; ++n) CHECK(center_point_regular(n) == (n % 2 == 1));
}

TEST_CASE("largest chamber witnesses") {
  CHECK(largest_chamber_witness(5) == RationalVector(std::vector<Rational>(5, Rational(2, 5))));
  CHECK(largest_chamber_witness(7) == RationalVector(std::vector<Rational>(7, Rational(2, 7))));
  for (int n = 4; n <= 8; ++n) {
    const auto x = largest_chamber_witness(n);
    CHECK(is_regular_mu(x, n));
    const int bound = (n % 2 == 0) ? n / 2 - 1 : n / 2;
    for (const auto& h : exact::arrangement_for_n(n)) {
      const int s = h.evaluate(x).sign();
      CHECK(s != 0);
      if (static_cast<int>(h.support.size()) <= bound) CHECK(s < 0);
    }
  }
  // n = 6: all 15 pair sums below 1, no triple sum equal to 1.
  const auto x6 = largest_chamber_witness(6);
  for (const auto& [i, j] : pairs(6)) CHECK(x6[static_cast<std::size_t>(i)] + x6[static_cast<std::size_t>(j)] < Rational(1));
  CHECK(largest_chamber_witness(6, 7) == largest_chamber_witness(6, 7));
  CHECK_THROWS_AS(largest_chamber_witness(9), Unsupported);
}
