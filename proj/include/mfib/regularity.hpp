#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mfib/exactgeom.hpp"
#include "mfib/rational.hpp"

namespace mfib {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

// Indices (into the lexicographic pair list) of the nonzero homogeneous
// coordinates of a stratum of CP^N, N + 1 = C(n,2).
struct StratumSupport {
  std::vector<int> sigma;
  int n = 4;
};

struct StabilizerReport {
  int dim_stabilizer = 0;  // includes the diagonal circle
  int dim_polytope = 0;
};

StabilizerReport stabilizer_dim(const StratumSupport& support);

// Vertex set {Lambda_I : I in sigma} of the admissible polytope.
std::vector<RationalVector> admissible_vertices(const StratumSupport& support);

// Regular value of mu on G_{n,2}: interior point lying on no hyperplane of the
// arrangement. Throws DomainError if x is not in the hypersimplex.
bool is_regular_mu(const RationalVector& x, int n);

// Regular value of mu_tilde on CP^N. Non-regular iff x lies in conv(S) for a
// vertex subset S with |S| <= n-1 and affine rank <= n-2. The candidate
// subsets depend on n only and are enumerated once at construction; the
// object is immutable afterwards.
class MuTildeRegularity {
 public:
  explicit MuTildeRegularity(int n);  // throws Unsupported for n > 6

  int n() const { return n_; }
  std::size_t candidate_count() const { return candidates_.size(); }
  bool operator()(const RationalVector& x) const;

 private:
  struct Candidate {
    std::vector<RationalVector> vertices;
    std::uint32_t has_one = 0;   // coordinates where some vertex is 1
    std::uint32_t has_zero = 0;  // coordinates where some vertex is 0
  };

  int n_;
  std::vector<Candidate> candidates_;
};

bool is_regular_mu_tilde(const RationalVector& x, int n);

struct ChamberReport {
  exact::SignVector id;
  int dimension = 0;
  RationalVector representative;
};

// The 8 open chambers of Delta_{4,2}. Representatives are taken from the
// denominator-9 grid: the grid point of the chamber with the largest
// stabilizer in S_4, ties broken lexicographically.
std::vector<ChamberReport> enumerate_chambers(int n);

struct ChamberOrbits {
  std::vector<std::vector<exact::SignVector>> orbits;  // sorted, each sorted
  exact::SignVector c_minus;                            // all -1
  exact::SignVector c_plus;                             // all +1
  // "C-" or "C+" for a chamber id.
  std::string orbit_label(const exact::SignVector& id) const;
};

ChamberOrbits s4_chamber_orbits();

// All points of Delta_{n,2} whose coordinates are k/denominator.
std::vector<RationalVector> hypersimplex_grid(int n, int denominator);

// Is (2/n, ..., 2/n) a regular value of mu?
bool center_point_regular(int n);

// Exact point with x_T < 1 for all |T| <= floor(n/2) - 1 (even n) or
// |T| <= floor(n/2) (odd n), lying on no arrangement hyperplane. Tries the
// center first, then seeded random rational perturbations of it.
RationalVector largest_chamber_witness(int n, std::uint64_t seed = kDefaultSeed);

}  // namespace mfib
