#include <exception>

#include <omp.h>

#include "mfib/regularity.hpp"
#include "mfib/sweep.hpp"

namespace mfib::parallel {

FiberSweep fiber_sweep(FiberKind kind, std::size_t samples, std::uint64_t seed, Orbit orbit, const Tolerances& tol) {
  std::vector<FiberCertificate> certs(samples);
  const auto count = static_cast<std::int64_t>(samples);
  // certify_sample never throws, so no exception can cross the region.
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i)
    certs[static_cast<std::size_t>(i)] = certify_sample(kind, seed, static_cast<std::size_t>(i), orbit, tol);
  return summarize(kind, orbit, seed, std::move(certs));
}

GridClassification classify_grid(int n, int denominator) {
  const auto grid = hypersimplex_grid(n, denominator);
  const MuTildeRegularity tilde(n);
  std::vector<GridPointVerdict> verdicts(grid.size());
  const auto count = static_cast<std::int64_t>(grid.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      const auto& x = grid[static_cast<std::size_t>(i)];
      verdicts[static_cast<std::size_t>(i)] = {is_regular_mu(x, n), tilde(x)};
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return summarize(n, denominator, grid, verdicts);
}

}  // namespace mfib::parallel
