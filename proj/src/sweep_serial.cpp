#include <algorithm>

#include "mfib/regularity.hpp"
#include "mfib/sweep.hpp"

namespace mfib {

FiberSweep summarize(FiberKind kind, Orbit orbit, std::uint64_t seed, std::vector<FiberCertificate> certs) {
  FiberSweep s;
  s.kind = kind;
  s.orbit = orbit;
  s.seed = seed;
  for (const auto& c : certs) {
    s.max_moment = std::max(s.max_moment, c.moment);
    if (c.plucker) s.max_plucker = std::max(s.max_plucker, *c.plucker);
    if (c.surface) s.max_surface = std::max(s.max_surface, *c.surface);
    if (c.f_values)
      s.max_f_deviation = std::max(s.max_f_deviation, (*c.f_values - Eigen::Vector3d(0, -1, 0)).cwiseAbs().maxCoeff());
    if (c.jacobian_rank) ++s.rank_histogram[*c.jacobian_rank];
    s.failures += !c.pass;
  }
  s.certificates = std::move(certs);
  return s;
}

GridClassification summarize(int n, int denominator, const std::vector<RationalVector>& grid,
                             const std::vector<GridPointVerdict>& verdicts) {
  constexpr std::size_t kExamples = 5;
  GridClassification g;
  g.n = n;
  g.denominator = denominator;
  g.points = grid.size();
  const auto arrangement = exact::arrangement_for_n(n);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& v = verdicts[i];
    g.regular_mu += v.mu;
    g.regular_mu_tilde += v.mu_tilde;
    g.mu_tilde_only += v.mu_tilde && !v.mu;
    if (v.mu && !v.mu_tilde) {
      ++g.mu_only;
      if (g.mu_only_examples.size() < kExamples) g.mu_only_examples.push_back(grid[i]);
    }
    if (v.mu) ++g.chamber_counts[exact::sign_vector(grid[i], arrangement)];
  }
  return g;
}

namespace serial {

FiberSweep fiber_sweep(FiberKind kind, std::size_t samples, std::uint64_t seed, Orbit orbit, const Tolerances& tol) {
  std::vector<FiberCertificate> certs;
  certs.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) certs.push_back(certify_sample(kind, seed, i, orbit, tol));
  return summarize(kind, orbit, seed, std::move(certs));
}

GridClassification classify_grid(int n, int denominator) {
  const auto grid = hypersimplex_grid(n, denominator);
  const MuTildeRegularity tilde(n);
  std::vector<GridPointVerdict> verdicts;
  verdicts.reserve(grid.size());
  for (const auto& x : grid) verdicts.push_back({is_regular_mu(x, n), tilde(x)});
  return summarize(n, denominator, grid, verdicts);
}

}  // namespace serial
}  // namespace mfib
