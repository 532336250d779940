#include "mfib/json_io.hpp"

namespace mfib::io {

json rational_json(const Rational& r) { return r.to_string(); }

json rational_vector_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json complex_vector_json(const Eigen::VectorXcd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v[i]));
  return out;
}

json real_vector_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json chamber_json(const ChamberReport& c, const std::string& orbit_label) {
  return {{"id", c.id.to_string()},
          {"dim", c.dimension},
          {"representative", rational_vector_json(c.representative)},
          {"orbit", orbit_label}};
}

json certificate_json(const FiberCertificate& c) {
  json residuals = {{"moment", c.moment}};
  residuals["plucker"] = c.plucker ? json(*c.plucker) : json(nullptr);
  residuals["surface"] = c.surface ? json(*c.surface) : json(nullptr);
  json out = {{"index", c.index}, {"point", complex_vector_json(c.point)}, {"residuals", residuals}, {"pass", c.pass}};
  out["jacobian_rank"] = c.jacobian_rank ? json(*c.jacobian_rank) : json(nullptr);
  out["f_values"] = c.f_values ? real_vector_json(*c.f_values) : json(nullptr);
  if (!c.pass) out["failure"] = c.failure;
  return out;
}

json sweep_json(const FiberSweep& s, bool include_certificates) {
  json hist = json::object();
  for (auto [rank, count] : s.rank_histogram) hist[std::to_string(rank)] = count;
  json out = {{"kind", to_string(s.kind)},
              {"orbit", s.orbit == Orbit::first ? "first" : "second"},
              {"seed", s.seed},
              {"samples", s.certificates.size()},
              {"max_residuals",
               {{"moment", s.max_moment}, {"plucker", s.max_plucker}, {"surface", s.max_surface},
                {"f_deviation", s.max_f_deviation}}},
              {"rank_histogram", hist},
              {"failures", s.failures},
              {"pass", s.pass()}};
  if (include_certificates) {
    json certs = json::array();
    for (const auto& c : s.certificates) certs.push_back(certificate_json(c));
    out["certificates"] = std::move(certs);
  }
  return out;
}

json grid_json(const GridClassification& g) {
  json chambers = json::object();
  for (const auto& [id, count] : g.chamber_counts) chambers[id.to_string()] = count;
  json examples = json::array();
  for (const auto& x : g.mu_only_examples) examples.push_back(rational_vector_json(x));
  return {{"n", g.n},
          {"denominator", g.denominator},
          {"points", g.points},
          {"regular_mu", g.regular_mu},
          {"regular_mu_tilde", g.regular_mu_tilde},
          {"mu_tilde_only", g.mu_tilde_only},
          {"mu_only", g.mu_only},
          {"mu_only_examples", examples},
          {"chamber_counts", chambers}};
}

}  // namespace mfib::io
