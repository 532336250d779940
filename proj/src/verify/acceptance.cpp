#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "mfib/errors.hpp"
#include "mfib/moment.hpp"
#include "mfib/seeding.hpp"
#include "mfib/sweep.hpp"
#include "mfib/verify.hpp"

namespace mfib::verify {

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "FAILED: " << what << "; ";
      pass = false;
    }
  }
};

Eigen::VectorXd to_double(const RationalVector& v) {
  Eigen::VectorXd d(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) d[static_cast<Eigen::Index>(i)] = v[i].to_double();
  return d;
}

double moment_residual(const Vector6c& z, Orbit orbit) {
  return (mu_tilde(z, 4) - to_double(orbit_point(orbit))).cwiseAbs().maxCoeff();
}

double phase_gap(Complex a, Complex b) { return std::abs(a - b); }

// Distinct streams per criterion so reruns of one criterion reproduce it.
std::uint64_t stream(std::uint64_t seed, int criterion) { return splitmix64(seed + static_cast<std::uint64_t>(criterion)); }

void chambers(Outcome& o, const AcceptanceOptions&) {
  const auto list = enumerate_chambers(4);
  o.require(list.size() == 8, "expected 8 chambers");
  const auto orbits = s4_chamber_orbits();
  o.require(orbits.orbits.size() == 2, "expected 2 orbits");
  for (const auto& orbit : orbits.orbits) o.require(orbit.size() == 4, "orbit size 4");
  o.require(orbits.orbit_label(orbits.c_minus) == "C-" && orbits.orbit_label(orbits.c_plus) == "C+",
            "C- and C+ in distinct orbits");
  std::vector<RationalVector> minus_reps;
  for (const auto& c : list) {
    if (c.id == orbits.c_minus) o.require(c.representative == orbit_point(Orbit::first), "C- representative Q");
    if (c.id == orbits.c_plus) o.require(c.representative == orbit_point(Orbit::second), "C+ representative");
    if (orbits.orbit_label(c.id) == "C-") minus_reps.push_back(c.representative);
  }
  std::vector<RationalVector> expected;
  for (int k = 0; k < 4; ++k) {
    RationalVector x(std::vector<Rational>(4, Rational(5, 9)));
    x[static_cast<std::size_t>(k)] = Rational(1, 3);
    expected.push_back(x);
  }
  std::sort(minus_reps.begin(), minus_reps.end());
  std::sort(expected.begin(), expected.end());
  o.require(minus_reps == expected, "C- orbit representatives");
  o.detail << list.size() << " chambers, orbit sizes " << orbits.orbits[0].size() << "+"
           << (orbits.orbits.size() > 1 ? orbits.orbits[1].size() : 0);
}

void triangle(Outcome& o, const AcceptanceOptions&) {
  const auto t = solve_triangle_P();
  o.require(t.x01 == RationalVector::parse("0,0,1/3,4/9,1/9,1/9"), "X01");
  o.require(t.x02 == RationalVector::parse("0,1/3,0,1/9,4/9,1/9"), "X02");
  o.require(t.x12 == RationalVector::parse("1/3,0,0,1/9,1/9,4/9"), "X12");
  const auto q = orbit_point(Orbit::first);
  for (const auto* v : {&t.x01, &t.x02, &t.x12}) o.require(a_map(*v, 4) == q, "A(X) = Q");
  o.detail << "vertices " << t.x01 << " " << t.x02 << " " << t.x12 << ", A(vertices) = Q exactly";
}

void curve(Outcome& o, const AcceptanceOptions&) {
  const double s = 1.0 / std::sqrt(6.0);
  const std::array<SpherePoint, 3> inputs{SpherePoint{{0.0, s, s}}, SpherePoint{{s, 0.0, s}},
                                          SpherePoint{{s, s, 0.0}}};
  const std::array<const char*, 3> targets{"0,1/6,1/6,5/18,5/18,1/9", "1/6,0,1/6,5/18,1/9,5/18",
                                           "1/6,1/6,0,1/9,5/18,5/18"};
  double worst = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto x = mu_hat(lift_f(inputs[i]).z);
    worst = std::max(worst, (x - to_double(RationalVector::parse(targets[i]))).cwiseAbs().maxCoeff());
  }
  o.require(worst <= 1e-12, "mu_hat of lifted points");
  const double r0 = curve_Pprime_residual(0.0, 1.0 / 6), r2 = curve_Pprime_residual(1.0 / 6, 1.0 / 6);
  o.require(r0 <= 1e-12 && r2 <= 1e-12, "curve residual at X0, X2");
  o.detail << "max |mu_hat - X_i| = " << worst << ", curve residuals " << r0 << ", " << r2;
}

void mq7(Outcome& o, const AcceptanceOptions& opt, Orbit orbit) {
  double moment = 0, trip = 0, min_mod = 1;
  const auto seed = stream(opt.seed, 4);
  for (std::size_t i = 0; i < opt.samples; ++i) {
    auto rng = sample_rng(seed, i);
    const auto s = sphere_random(rng);
    const Complex t4 = phase_random(rng), t5 = phase_random(rng);
    const auto p = h_param(s, t4, t5);
    const auto z = orbit_permute(p.z, orbit);
    moment = std::max(moment, moment_residual(z, orbit));
    const auto moved = orbit_permute(z, orbit);  // back to first-orbit coordinates
    min_mod = std::min({min_mod, std::abs(moved[3]), std::abs(moved[4]), std::abs(moved[5])});
    const auto back = h_preimage(MQ7Point{moved});
    double d = std::max(phase_gap(back.t4, t4), phase_gap(back.t5, t5));
    for (int k = 0; k < 3; ++k) d = std::max(d, phase_gap(back.s.z[static_cast<std::size_t>(k)], s.z[static_cast<std::size_t>(k)]));
    trip = std::max(trip, d);
  }
  o.require(moment <= 1e-10, "moment residual");
  o.require(min_mod >= 0.33, "z3, z4, z5 bounded away from 0");
  o.require(trip <= 1e-10, "h round trip");
  o.detail << opt.samples << " samples: max moment " << moment << ", min |z3|,|z4|,|z5| " << min_mod
           << ", max round trip " << trip;
}

void regular(Outcome& o, const AcceptanceOptions&) {
  const auto g = parallel::classify_grid(4, 18);
  o.require(g.mu_only == 0 && g.mu_tilde_only == 0, "mu and mu_tilde regularity coincide for n = 4");
  o.require(g.chamber_counts.size() == 8, "grid reaches all 8 chambers");
  const auto x = RationalVector::parse("7/10,6/10,5/10,1/10,1/10");
  const bool mu = is_regular_mu(x, 5), tilde = is_regular_mu_tilde(x, 5);
  o.require(mu && !tilde, "n = 5 point is mu-regular, not mu_tilde-regular");
  o.detail << "n=4 grid (den 18): " << g.points << " points, " << g.regular_mu << " regular for both, "
           << g.mu_only + g.mu_tilde_only << " disagreements; n=5 point mu=" << mu << " mu_tilde=" << tilde;
}

void oracle(Outcome& o, const AcceptanceOptions&) {
  const auto grid = hypersimplex_grid(4, 18);
  const std::size_t count = 200;
  const MuTildeRegularity tilde(4);
  std::size_t agree = 0, regular_seen = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const auto& x = grid[k * grid.size() / count];
    const bool a = tilde(x), b = brute_force_regular_mu_tilde_n4(x);
    agree += a == b;
    regular_seen += a;
  }
  o.require(agree == count, "agreement with exhaustive stratification");
  o.require(regular_seen > 0 && regular_seen < count, "sample covers both verdicts");
  o.detail << agree << "/" << count << " grid points agree (" << regular_seen << " regular)";
}

void mq5(Outcome& o, const AcceptanceOptions& opt, Orbit orbit) {
  double plucker = 0, moment = 0, f_trip = 0, g_trip = 0;
  const auto seed = stream(opt.seed, 7);
  std::vector<Vector6c> g_images;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    auto rng = sample_rng(seed, i);
    const auto m = m2_random(rng);
    const auto t = torus3_random(rng);
    const auto zf = orbit_permute(F_param(m, t).z, orbit);
    const auto m3 = m3_sample(rng);
    const Complex t1 = phase_random(rng), t2 = phase_random(rng);
    const auto zg = orbit_permute(G_param(m3, t1, t2).z, orbit);
    for (const auto* z : {&zf, &zg}) {
      plucker = std::max(plucker, plucker_relation_residual(Vector6c(*z / z->norm())));
      moment = std::max(moment, moment_residual(*z, orbit));
    }
    const auto [fm, ft] = F_preimage(MQ5Point{orbit_permute(zf, orbit)});
    double d = std::max({phase_gap(fm.z0, m.z0), phase_gap(fm.z1, m.z1), std::abs(fm.z2 - m.z2)});
    for (std::size_t k = 0; k < 3; ++k) d = std::max(d, phase_gap(ft[k], t[k]));
    f_trip = std::max(f_trip, d);
    const auto gp = G_preimage(MQ5Point{orbit_permute(zg, orbit)});
    g_trip = std::max({g_trip, phase_gap(gp.m.z0, m3.z0), phase_gap(gp.m.z1, m3.z1), phase_gap(gp.m.z2, m3.z2),
                       phase_gap(gp.t1, t1), phase_gap(gp.t2, t2)});
    g_images.push_back(zg);
  }
  double g_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < g_images.size(); ++i)
    for (std::size_t j = i + 1; j < g_images.size(); ++j) g_min = std::min(g_min, (g_images[i] - g_images[j]).norm());

  // The circle z0 = z1 = e^{i psi}/sqrt(6), z2 = 0 collapses to (1:1).
  const ProjectivePoint one_one(Eigen::Vector2cd(1.0, 1.0));
  double circle = 0;
  for (int k = 0; k < 64; ++k) {
    const Complex e = std::polar(1.0 / std::sqrt(6.0), 2 * std::numbers::pi * k / 64);
    circle = std::max(circle, proj_p(M2Point{e, e, 0.0}).distance(one_one));
  }
  // Injectivity away from the circle.
  double p_min = std::numeric_limits<double>::infinity();
  auto rng = sample_rng(seed, opt.samples + 1);
  std::size_t pairs_checked = 0;
  while (pairs_checked < opt.samples) {
    const auto a = m2_random(rng), b = m2_random(rng);
    if (a.z2 < 1e-6 || b.z2 < 1e-6) continue;
    p_min = std::min(p_min, proj_p(a).distance(proj_p(b)));
    ++pairs_checked;
  }
  o.require(plucker <= 1e-10, "Pluecker residual");
  o.require(moment <= 1e-10, "moment residual");
  o.require(f_trip <= 1e-10, "F round trip");
  o.require(g_trip <= 1e-10, "G round trip");
  o.require(g_min > 0, "G injective on samples");
  o.require(circle <= 1e-10, "proj_p collapses the circle to (1:1)");
  o.require(p_min > 0, "proj_p injective off the circle");
  o.detail << opt.samples << " F and G samples: max plucker " << plucker << ", max moment " << moment
           << ", round trips F " << f_trip << " G " << g_trip << ", min G separation " << g_min
           << "; circle to (1:1) within " << circle << "; min proj_p separation " << p_min;
}

void complete_intersection(Outcome& o, const AcceptanceOptions& opt, Orbit orbit) {
  const auto seed = stream(opt.seed, 8);
  std::vector<Vector6c> points;
  for (const auto& c : mq5_fiber_circles()) points.push_back(c.base);
  for (std::size_t i = 0; i < opt.samples; ++i) {
    auto rng = sample_rng(seed, i);
    points.push_back(orbit_permute(F_param(m2_random(rng), torus3_random(rng)).z, orbit));
  }
  for (std::size_t i = 0; i < 3; ++i) points[i] = orbit_permute(points[i], orbit);
  double f_dev = 0, fd_dev = 0;
  std::size_t rank3 = 0;
  for (const auto& z : points) {
    const auto uv = chart_uv(orbit_permute(z, orbit));
    f_dev = std::max(f_dev, (complete_intersection_f(uv) - Eigen::Vector3d(0, -1, 0)).cwiseAbs().maxCoeff());
    rank3 += jacobian_rank(uv, 1e-6) == 3;
    fd_dev = std::max(fd_dev, (jacobian_f(uv) - finite_difference_jacobian(uv)).cwiseAbs().maxCoeff());
  }
  const Eigen::Vector3d derived(derived_f_value(1).to_double(), derived_f_value(2).to_double(),
                                derived_f_value(3).to_double());
  o.require(derived == Eigen::Vector3d(0, -1, 0), "exact derivation gives (0,-1,0)");
  o.require(f_dev <= 1e-9, "f-values");
  o.require(rank3 == points.size(), "Jacobian rank 3");
  o.require(fd_dev <= 1e-6, "analytic vs finite-difference Jacobian");
  o.detail << points.size() << " points (3 circle bases): max |f - (0,-1,0)| " << f_dev << ", rank 3 at "
           << rank3 << "/" << points.size() << ", max FD deviation " << fd_dev;
}

void transition(Outcome& o, const AcceptanceOptions& opt) {
  const int det = transition_determinant();
  o.require(det == -1, "determinant -1");
  const auto seed = stream(opt.seed, 9);
  double cocycle = 0;
  std::size_t covered = 0, consistent = 0, in_both = 0;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    auto rng = sample_rng(seed, i);
    const auto t = torus3_random(rng);
    const auto there = bundle_transition(bundle_transition(t, ChartDirection::zero_to_one), ChartDirection::one_to_zero);
    const auto back = bundle_transition(bundle_transition(t, ChartDirection::one_to_zero), ChartDirection::zero_to_one);
    for (std::size_t k = 0; k < 3; ++k) cocycle = std::max({cocycle, phase_gap(there[k], t[k]), phase_gap(back[k], t[k])});
    const MQ5Point p = F_param(m2_random(rng), torus3_random(rng));
    try {
      const auto c = verify_chart_coverage(p);
      ++covered;
      const auto b = bundle_projection(p);
      consistent += (c.in_m0 == (std::abs(b[0]) > 1e-10)) && (c.in_m1 == (std::abs(b[1]) > 1e-10));
      in_both += c.in_m0 && c.in_m1;
    } catch (const CertificateFailure&) {
    }
  }
  const auto sample = bundle_transition({Complex(0, 1), 1.0, 1.0}, ChartDirection::zero_to_one);
  o.require(phase_gap(sample[0], Complex(0, 1)) + phase_gap(sample[1], Complex(0, 1)) + phase_gap(sample[2], 1.0) <= 1e-12,
            "(i,1,1) -> (i,i,1)");
  o.require(cocycle <= 1e-12, "cocycle");
  o.require(covered == opt.samples && consistent == opt.samples, "chart coverage on samples");
  const auto circles = mq5_fiber_circles();
  const auto c0 = verify_chart_coverage(circles[0].at({1.0, 1.0, 1.0}));
  const auto c1 = verify_chart_coverage(circles[1].at({1.0, 1.0, 1.0}));
  o.require(c0.in_m0 && !c0.in_m1, "M_Q,0 base in pi^-1(M0) only");
  o.require(c1.in_m1 && !c1.in_m0, "M_Q,1 base in pi^-1(M1) only");
  o.detail << "det " << det << ", cocycle error " << cocycle << ", coverage " << covered << "/" << opt.samples
           << " (in both charts: " << in_both << ")";
}

void parity(Outcome& o, const AcceptanceOptions&) {
  for (int n = 4; n <= 10; ++n) {
    const bool r = center_point_regular(n);
    o.require(r == (n % 2 == 1), "center parity at n = " + std::to_string(n));
    o.detail << "n=" << n << ":" << (r ? "regular" : "singular") << (n < 10 ? ", " : "");
  }
}

void dimension(Outcome& o, const AcceptanceOptions& opt) {
  const auto seed = stream(opt.seed, 11);
  const std::size_t count = 100;
  std::map<int, std::size_t> d7, d5;
  for (std::size_t i = 0; i < count; ++i) {
    auto rng = sample_rng(seed, i);
    const auto h = h_param(sphere_random(rng), phase_random(rng), phase_random(rng));
    ++d7[tangent_dimension(h.z, false, 1e-6)];
    const auto p = F_param(m2_random(rng), torus3_random(rng));
    ++d5[tangent_dimension(p.z, true, 1e-6)];
  }
  o.require(d7.size() == 1 && d7.begin()->first == 7, "M_Q^7 dimension 7");
  o.require(d5.size() == 1 && d5.begin()->first == 5, "M_Q^5 dimension 5");
  o.detail << count << " points each: M_Q^7 dims {";
  for (auto [d, c] : d7) o.detail << d << ":" << c;
  o.detail << "}, M_Q^5 dims {";
  for (auto [d, c] : d5) o.detail << d << ":" << c;
  o.detail << "}";
}

void second_orbit(Outcome& o, const AcceptanceOptions& opt) {
  Outcome a, b, c;
  mq7(a, opt, Orbit::second);
  mq5(b, opt, Orbit::second);
  complete_intersection(c, opt, Orbit::second);
  o.require(a.pass, "criterion 4 under the permutation");
  o.require(b.pass, "criterion 7 under the permutation");
  o.require(c.pass, "criterion 8 under the permutation");
  o.detail << "Q = (2/3,4/9,4/9,4/9): [4] " << a.detail.str() << " | [7] " << b.detail.str() << " | [8] "
           << c.detail.str();
}

using Runner = std::function<void(Outcome&, const AcceptanceOptions&)>;

const std::vector<std::pair<CriterionInfo, Runner>>& table() {
  static const std::vector<std::pair<CriterionInfo, Runner>> t = {
      {{1, "chambers", "chamber count and S4 orbits"}, chambers},
      {{2, "triangle", "triangle P vertices and A(P) = Q"}, triangle},
      {{3, "curve", "curve points X0, X1, X2"}, curve},
      {{4, "mq7", "M_Q^7 parametrization"}, [](Outcome& o, const AcceptanceOptions& a) { mq7(o, a, Orbit::first); }},
      {{5, "regular", "regular-value dichotomy"}, regular},
      {{6, "oracle", "brute-force stratification oracle"}, oracle},
      {{7, "mq5", "M_Q^5 certificates"}, [](Outcome& o, const AcceptanceOptions& a) { mq5(o, a, Orbit::first); }},
      {{8, "complete_intersection", "complete intersection (0,-1,0), rank 3"},
       [](Outcome& o, const AcceptanceOptions& a) { complete_intersection(o, a, Orbit::first); }},
      {{9, "transition", "bundle transition and chart coverage"}, transition},
      {{10, "parity", "center-point parity"}, parity},
      {{11, "dimension", "tangent dimensions 7 and 5"}, dimension},
      {{12, "second_orbit", "second orbit reruns of 4, 7, 8"}, second_orbit},
  };
  return t;
}

}  // namespace

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> infos = [] {
    std::vector<CriterionInfo> v;
    for (const auto& [info, run] : table()) v.push_back(info);
    return v;
  }();
  return infos;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  if (options.only) {
    const auto& c = criteria();
    if (std::none_of(c.begin(), c.end(), [&](const CriterionInfo& i) { return i.key == *options.only; }))
      throw DomainError("unknown criterion '" + *options.only + "'");
  }
  std::vector<CriterionResult> results;
  for (const auto& [info, run] : table()) {
    if (options.only && info.key != *options.only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      run(o, options);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    results.push_back({info.id, info.key, info.title, o.pass, o.detail.str(), elapsed.count()});
  }
  return results;
}

}  // namespace mfib::verify
