#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mfib/certificate.hpp"
#include "mfib/exactgeom.hpp"

// Embarrassingly parallel sweeps. Each has a serial reference implementation
// and an OpenMP one; both produce identical results for identical inputs,
// ordered by sample or grid index.
namespace mfib {

struct FiberSweep {
  FiberKind kind = FiberKind::mq5;
  Orbit orbit = Orbit::first;
  std::uint64_t seed = 0;
  std::vector<FiberCertificate> certificates;
  double max_moment = 0;
  double max_plucker = 0;
  double max_surface = 0;
  double max_f_deviation = 0;
  std::map<int, std::size_t> rank_histogram;
  std::size_t failures = 0;

  bool pass() const { return failures == 0; }
};

// Aggregates certificates that are already in index order.
FiberSweep summarize(FiberKind kind, Orbit orbit, std::uint64_t seed, std::vector<FiberCertificate> certs);

// Regularity verdicts for every point of the denominator grid of Delta_{n,2}.
struct GridPointVerdict {
  bool mu = false;
  bool mu_tilde = false;
};

struct GridClassification {
  int n = 0;
  int denominator = 0;
  std::size_t points = 0;
  std::size_t regular_mu = 0;
  std::size_t regular_mu_tilde = 0;
  std::size_t mu_tilde_only = 0;  // regular for mu_tilde but not mu; must stay 0
  std::size_t mu_only = 0;        // regular for mu but not mu_tilde
  std::vector<RationalVector> mu_only_examples;  // first few, grid order
  std::map<exact::SignVector, std::size_t> chamber_counts;  // mu-regular points
};

GridClassification summarize(int n, int denominator, const std::vector<RationalVector>& grid,
                             const std::vector<GridPointVerdict>& verdicts);

namespace serial {
FiberSweep fiber_sweep(FiberKind kind, std::size_t samples, std::uint64_t seed, Orbit orbit,
                       const Tolerances& tol = {});
GridClassification classify_grid(int n, int denominator);
}  // namespace serial

namespace parallel {
FiberSweep fiber_sweep(FiberKind kind, std::size_t samples, std::uint64_t seed, Orbit orbit,
                       const Tolerances& tol = {});
GridClassification classify_grid(int n, int denominator);
}  // namespace parallel

}  // namespace mfib
