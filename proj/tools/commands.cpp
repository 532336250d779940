#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "mfib/errors.hpp"
#include "mfib/json_io.hpp"
#include "mfib/fibers4.hpp"
#include "mfib/moment.hpp"
#include "mfib/plucker.hpp"
#include "mfib/regularity.hpp"
#include "mfib/seeding.hpp"
#include "mfib/sweep.hpp"
#include "mfib/verify.hpp"

namespace mfib::cli {

using nlohmann::json;

namespace {

Orbit orbit_of(const RunConfig& cfg) { return cfg.second_orbit ? Orbit::second : Orbit::first; }

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw UsageError("bad number '" + item + "'");
    } catch (const std::logic_error&) {
      throw UsageError("bad number '" + item + "'");
    }
  }
  return out;
}

// "re,im,re,im,..." -> complex vector.
Eigen::VectorXcd parse_complex(const std::string& text) {
  const auto r = parse_reals(text);
  if (r.empty() || r.size() % 2 != 0) throw UsageError("complex input needs an even number of reals");
  Eigen::VectorXcd z(static_cast<Eigen::Index>(r.size() / 2));
  for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = Complex(r[2 * static_cast<std::size_t>(i)], r[2 * static_cast<std::size_t>(i) + 1]);
  return z;
}

json classification(const RationalVector& x, int n) {
  if (static_cast<int>(x.size()) != n) throw UsageError("--classify needs exactly n coordinates");
  if (!exact::in_hypersimplex(x)) throw UsageError("point is not in the hypersimplex");
  if (n > 6) throw UsageError("point classification supports n <= 6");
  const auto id = exact::sign_vector(x, exact::arrangement_for_n(n));
  return {{"point", io::rational_vector_json(x)},
          {"n", n},
          {"id", id.to_string()},
          {"regular_mu", is_regular_mu(x, n)},
          {"regular_mu_tilde", is_regular_mu_tilde(x, n)}};
}

}  // namespace

Result cmd_chambers(const RunConfig& cfg) {
  if (cfg.classify) {
    json out = classification(RationalVector::parse(*cfg.classify), cfg.n);
    if (cfg.n == 4) {
      const auto orbits = s4_chamber_orbits();
      const auto id = exact::sign_vector(RationalVector::parse(*cfg.classify), exact::arrangement_for_n(4));
      out["orbit"] = id.strict() ? json(orbits.orbit_label(id)) : json(nullptr);
    }
    return {out};
  }
  if (cfg.n != 4) throw UsageError("chamber enumeration supports n = 4 only; use --classify for n <= 6");
  const auto chambers = enumerate_chambers(4);
  const auto orbits = s4_chamber_orbits();
  json list = json::array();
  for (const auto& c : chambers) list.push_back(io::chamber_json(c, orbits.orbit_label(c.id)));
  json orbit_list = json::array();
  for (const auto& o : orbits.orbits) {
    json ids = json::array();
    for (const auto& id : o) ids.push_back(id.to_string());
    orbit_list.push_back({{"label", orbits.orbit_label(o.front())}, {"chambers", ids}});
  }
  json hyperplanes = json::array();
  for (const auto& h : exact::arrangement_for_n(4)) hyperplanes.push_back(h.label());
  return {{{"n", 4}, {"hyperplanes", hyperplanes}, {"chambers", list}, {"orbits", orbit_list}}};
}

Result cmd_regular(const RunConfig& cfg) {
  if (cfg.n < 4) throw UsageError("n must be at least 4");
  json out = {{"n", cfg.n}, {"center_regular", center_point_regular(cfg.n)}};
  if (cfg.n <= 8) out["largest_chamber_witness"] = io::rational_vector_json(largest_chamber_witness(cfg.n, cfg.seed));
  if (cfg.classify) out["classification"] = classification(RationalVector::parse(*cfg.classify), cfg.n);
  if (cfg.grid) {
    if (cfg.n > 6 || *cfg.grid < 1) throw UsageError("grid sweeps support n <= 6 and a positive denominator");
    const auto g = parallel::classify_grid(cfg.n, *cfg.grid);
    out["grid"] = io::grid_json(g);
    // mu_tilde-regular points must be mu-regular.
    if (g.mu_tilde_only != 0) return {out, kCertificateFailure};
  }
  return {out};
}

Result cmd_moment(const RunConfig& cfg) {
  json out = {{"map", cfg.map}};
  if (cfg.map == "mu") {
    if (!cfg.matrix) throw UsageError("map mu needs --matrix (2n complex entries, row-major)");
    const auto v = parse_complex(*cfg.matrix);
    if (v.size() % 2 != 0) throw UsageError("--matrix needs 2n complex entries");
    const Eigen::Index n = v.size() / 2;
    Eigen::Matrix<Complex, 2, Eigen::Dynamic> m(2, n);
    for (Eigen::Index c = 0; c < n; ++c) {
      m(0, c) = v[c];
      m(1, c) = v[n + c];
    }
    out["n"] = n;
    out["input"] = io::complex_vector_json(v);
    out["output"] = io::real_vector_json(mu(GrassmannPoint(m)));
    return {out};
  }
  if (!cfg.z) throw UsageError("map " + cfg.map + " needs --z (complex coordinates as re,im pairs)");
  const auto z = parse_complex(*cfg.z);
  out["input"] = io::complex_vector_json(z);
  if (cfg.map == "mu_hat") {
    out["output"] = io::real_vector_json(mu_hat(z));
  } else if (cfg.map == "mu_tilde") {
    const int n = n_from_coordinate_count(static_cast<std::size_t>(z.size()));
    out["n"] = n;
    out["output"] = io::real_vector_json(mu_tilde(z, n));
  } else {
    throw UsageError("unknown map '" + cfg.map + "' (mu, mu_tilde, mu_hat)");
  }
  return {out};
}

Result cmd_fiber(const RunConfig& cfg) {
  const auto kind = parse_fiber_kind(cfg.kind);
  if (!kind) throw UsageError("fiber kind must be one of mq7, mq5, m2, m3");
  Tolerances tol;
  if (cfg.tol) tol.identity = *cfg.tol;
  const auto sweep = parallel::fiber_sweep(*kind, cfg.samples, cfg.seed, orbit_of(cfg), tol);
  json out = io::sweep_json(sweep);
  if (!sweep.pass()) {
    for (const auto& c : sweep.certificates)
      if (!c.pass) {
        out["first_failure"] = io::certificate_json(c);
        break;
      }
    return {out, kCertificateFailure};
  }
  return {out};
}

Result cmd_jacobian(const RunConfig& cfg) {
  const double tol = cfg.tol.value_or(1e-6);
  json points = json::array();
  std::map<int, std::size_t> histogram;
  double worst_fd = 0;
  auto add = [&](const std::string& source, const Vector6c& z) {
    const auto uv = chart_uv(z);
    const int rank = jacobian_rank(uv, tol);
    const double fd = (jacobian_f(uv) - verify::finite_difference_jacobian(uv)).cwiseAbs().maxCoeff();
    ++histogram[rank];
    worst_fd = std::max(worst_fd, fd);
    points.push_back({{"source", source},
                      {"f_values", io::real_vector_json(complete_intersection_f(uv))},
                      {"jacobian_rank", rank},
                      {"fd_deviation", fd}});
  };
  for (const auto& c : mq5_fiber_circles()) add("M_Q," + std::to_string(c.index), c.base);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    auto rng = sample_rng(cfg.seed, i);
    add("sample " + std::to_string(i), F_param(m2_random(rng), torus3_random(rng)).z);
  }
  json hist = json::object();
  for (auto [r, c] : histogram) hist[std::to_string(r)] = c;
  const bool pass = histogram.size() == 1 && histogram.begin()->first == 3 && worst_fd <= 1e-6;
  return {{{"tol", tol}, {"rank_histogram", hist}, {"max_fd_deviation", worst_fd}, {"pass", pass}, {"points", points}},
          pass ? kPass : kCertificateFailure};
}

Result cmd_transition(const RunConfig& cfg) {
  auto matrix_json = [](const ExponentMatrix& m) {
    json rows = json::array();
    for (const auto& r : m) rows.push_back(json(r));
    return rows;
  };
  const int det = transition_determinant();
  double cocycle = 0;
  std::size_t covered = 0;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    auto rng = sample_rng(cfg.seed, i);
    const auto t = torus3_random(rng);
    const auto back = bundle_transition(bundle_transition(t, ChartDirection::zero_to_one), ChartDirection::one_to_zero);
    for (std::size_t k = 0; k < 3; ++k) cocycle = std::max(cocycle, std::abs(back[k] - t[k]));
    try {
      verify_chart_coverage(F_param(m2_random(rng), torus3_random(rng)));
      ++covered;
    } catch (const CertificateFailure&) {
    }
  }
  const auto example = bundle_transition({Complex(0, 1), 1.0, 1.0}, ChartDirection::zero_to_one);
  json ex = json::array();
  for (auto x : example) ex.push_back(io::complex_json(x));
  const bool pass = det == -1 && cocycle <= 1e-12 && covered == cfg.samples;
  return {{{"matrix_0_to_1", matrix_json(transition_matrix(ChartDirection::zero_to_one))},
           {"matrix_1_to_0", matrix_json(transition_matrix(ChartDirection::one_to_zero))},
           {"determinant", det},
           {"cocycle_error", cocycle},
           {"chart_coverage", {{"samples", cfg.samples}, {"covered", covered}}},
           {"example", {{"input", json::array({io::complex_json(Complex(0, 1)), io::complex_json(1.0), io::complex_json(1.0)})},
                        {"output", ex}}},
           {"pass", pass}},
          pass ? kPass : kCertificateFailure};
}

Result cmd_triangle(const RunConfig&) {
  const auto t = solve_triangle_P();
  json equations = json::object();
  for (std::size_t i = 0; i < 6; ++i)
    equations["x" + std::to_string(i)] = {{"constant", io::rational_json(t.solution.constant[i])},
                                          {"x4", io::rational_json(t.solution.direction[0][i])},
                                          {"x5", io::rational_json(t.solution.direction[1][i])}};
  return {{{"equations", equations},
           {"vertices",
            {{"X01", io::rational_vector_json(t.x01)},
             {"X02", io::rational_vector_json(t.x02)},
             {"X12", io::rational_vector_json(t.x12)}}},
           {"edges",
            {{"I0", {{"equation", "x0 = 0"}, {"from", "X01"}, {"to", "X02"}}},
             {"I1", {{"equation", "x1 = 0"}, {"from", "X01"}, {"to", "X12"}}},
             {"I2", {{"equation", "x2 = 0"}, {"from", "X02"}, {"to", "X12"}}}}}}};
}

Result cmd_curve(const RunConfig& cfg) {
  return {{{"x0", cfg.x0},
           {"x1", cfg.x1},
           {"printed_residual", curve_Pprime_residual(cfg.x0, cfg.x1)},
           {"modulus_residual", curve_modulus_residual(cfg.x0, cfg.x1)}}};
}

Result cmd_report(const RunConfig& cfg) {
  verify::AcceptanceOptions options;
  options.seed = cfg.seed;
  options.samples = cfg.samples;
  options.only = cfg.only;
  std::vector<verify::CriterionResult> results;
  try {
    results = verify::run_acceptance(options);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  json list = json::array();
  bool pass = true;
  double total = 0;
  for (const auto& r : results) {
    list.push_back({{"id", r.id}, {"key", r.key}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail},
                    {"seconds", r.seconds}});
    pass = pass && r.pass;
    total += r.seconds;
  }
  return {{{"seed", cfg.seed}, {"samples", cfg.samples}, {"criteria", list}, {"pass", pass}, {"seconds", total}},
          pass ? kPass : kCertificateFailure};
}

}  // namespace mfib::cli
