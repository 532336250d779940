#include "mfib/regularity.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "mfib/errors.hpp"
#include "mfib/plucker.hpp"

namespace mfib {

using exact::Hyperplane;
using exact::SignVector;

std::vector<RationalVector> admissible_vertices(const StratumSupport& support) {
  const auto all = pairs(support.n);
  std::vector<RationalVector> verts;
  for (int idx : support.sigma) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= all.size())
      throw DomainError("stratum support index out of range");
    auto [i, j] = all[static_cast<std::size_t>(idx)];
    verts.push_back(exact::hypersimplex_vertex(support.n, i, j));
  }
  return verts;
}

StabilizerReport stabilizer_dim(const StratumSupport& support) {
  if (support.sigma.empty()) throw DomainError("empty stratum support");
  const auto verts = admissible_vertices(support);
  StabilizerReport r;
  r.dim_polytope = exact::affine_rank(verts);
  r.dim_stabilizer = support.n - r.dim_polytope;
  return r;
}

bool is_regular_mu(const RationalVector& x, int n) {
  if (static_cast<int>(x.size()) != n) throw DomainError("point length differs from n");
  if (!exact::in_hypersimplex(x)) throw DomainError("point is not in the hypersimplex");
  for (const auto& v : x)
    if (v.sign() <= 0 || v >= Rational(1)) return false;
  for (const auto& h : exact::arrangement_for_n(n))
    if (h.evaluate(x).is_zero()) return false;
  return true;
}

MuTildeRegularity::MuTildeRegularity(int n) : n_(n) {
  if (n < 4) throw DomainError("n must be at least 4");
  if (n > 6) throw Unsupported("mu_tilde regularity is limited to n <= 6");
  const auto all = pairs(n);
  const int m = static_cast<int>(all.size());
  std::vector<RationalVector> verts;
  for (auto [i, j] : all) verts.push_back(exact::hypersimplex_vertex(n, i, j));

  // Low-dimensional subsets of at most n-1 vertices; Caratheodory reduces
  // any lower-dimensional admissible polytope containing x to one of these.
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    const int size = std::popcount(mask);
    if (size > n - 1) continue;
    std::vector<RationalVector> s;
    for (int k = 0; k < m; ++k)
      if (mask & (1u << k)) s.push_back(verts[static_cast<std::size_t>(k)]);
    if (exact::affine_rank(s) <= n - 2) masks.push_back(mask);
  }
  // conv(S) is contained in conv(S') for S subset of S'; keep maximal ones.
  std::sort(masks.begin(), masks.end(),
            [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) > std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b); });
  std::vector<std::uint32_t> kept;
  for (auto mask : masks) {
    bool covered = std::any_of(kept.begin(), kept.end(), [mask](std::uint32_t k) { return (mask & k) == mask; });
    if (!covered) kept.push_back(mask);
  }
  for (auto mask : kept) {
    Candidate c;
    for (int k = 0; k < m; ++k) {
      if (!(mask & (1u << k))) continue;
      c.vertices.push_back(verts[static_cast<std::size_t>(k)]);
      const std::uint32_t ones = (1u << all[static_cast<std::size_t>(k)].first) | (1u << all[static_cast<std::size_t>(k)].second);
      c.has_one |= ones;
      c.has_zero |= ~ones & ((1u << n) - 1);
    }
    candidates_.push_back(std::move(c));
  }
}

bool MuTildeRegularity::operator()(const RationalVector& x) const {
  if (static_cast<int>(x.size()) != n_) throw DomainError("point length differs from n");
  if (!exact::in_hypersimplex(x)) throw DomainError("point is not in the hypersimplex");
  std::uint32_t positive = 0, below_one = 0;
  for (int i = 0; i < n_; ++i) {
    if (x[static_cast<std::size_t>(i)].sign() > 0) positive |= 1u << i;
    if (x[static_cast<std::size_t>(i)] < Rational(1)) below_one |= 1u << i;
  }
  for (const auto& c : candidates_) {
    // Coordinate-wise necessary condition before the exact LP.
    if ((positive & ~c.has_one) || (below_one & ~c.has_zero)) continue;
    if (exact::convex_membership(x, c.vertices)) return false;
  }
  return true;
}

bool is_regular_mu_tilde(const RationalVector& x, int n) { return MuTildeRegularity(n)(x); }

std::vector<RationalVector> hypersimplex_grid(int n, int denominator) {
  if (n < 2 || denominator < 1) throw DomainError("invalid grid parameters");
  std::vector<RationalVector> out;
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  const int total = 2 * denominator;
  // Odometer over the first n-1 coordinates; the last is forced by the sum.
  auto emit = [&] {
    int rest = total - std::accumulate(k.begin(), k.end() - 1, 0);
    if (rest < 0 || rest > denominator) return;
    RationalVector x(static_cast<std::size_t>(n));
    for (int i = 0; i + 1 < n; ++i) x[static_cast<std::size_t>(i)] = Rational(k[static_cast<std::size_t>(i)], denominator);
    x[static_cast<std::size_t>(n - 1)] = Rational(rest, denominator);
    out.push_back(std::move(x));
  };
  while (true) {
    emit();
    int pos = n - 2;
    while (pos >= 0 && k[static_cast<std::size_t>(pos)] == denominator) k[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++k[static_cast<std::size_t>(pos)];
  }
  return out;
}

namespace {

RationalVector permuted(const RationalVector& x, const std::vector<int>& perm) {
  RationalVector y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[static_cast<std::size_t>(perm[i])] = x[i];
  return y;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::vector<ChamberReport> enumerate_chambers(int n) {
  if (n != 4) throw Unsupported("chamber enumeration is implemented for n = 4 only");
  const auto arrangement = exact::arrangement_for_n(n);
  const auto perms = all_permutations(n);
  struct Best {
    RationalVector rep;
    int symmetry = -1;
  };
  std::map<SignVector, Best> found;
  for (const auto& x : hypersimplex_grid(n, 9)) {
    const bool interior = std::all_of(x.begin(), x.end(), [](const Rational& v) { return v.sign() > 0 && v < Rational(1); });
    if (!interior) continue;
    auto id = exact::sign_vector(x, arrangement);
    if (!id.strict()) continue;
    int symmetry = 0;
    for (const auto& p : perms) symmetry += permuted(x, p) == x;
    auto& best = found[id];
    if (symmetry > best.symmetry || (symmetry == best.symmetry && x < best.rep)) best = {x, symmetry};
  }
  std::vector<ChamberReport> out;
  for (auto& [id, best] : found) out.push_back({id, n - 1, best.rep});
  return out;
}

std::string ChamberOrbits::orbit_label(const SignVector& id) const {
  for (const auto& orbit : orbits) {
    if (std::find(orbit.begin(), orbit.end(), id) == orbit.end()) continue;
    if (std::find(orbit.begin(), orbit.end(), c_minus) != orbit.end()) return "C-";
    if (std::find(orbit.begin(), orbit.end(), c_plus) != orbit.end()) return "C+";
    return "other";
  }
  return "none";
}

ChamberOrbits s4_chamber_orbits() {
  const int n = 4;
  const auto chambers = enumerate_chambers(n);
  const auto arrangement = exact::arrangement_for_n(n);
  const auto perms = all_permutations(n);
  std::set<SignVector> seen;
  ChamberOrbits result;
  for (const auto& c : chambers) {
    if (seen.count(c.id)) continue;
    std::set<SignVector> orbit;
    for (const auto& p : perms) orbit.insert(exact::sign_vector(permuted(c.representative, p), arrangement));
    seen.insert(orbit.begin(), orbit.end());
    result.orbits.emplace_back(orbit.begin(), orbit.end());
  }
  std::sort(result.orbits.begin(), result.orbits.end());
  result.c_minus.signs.assign(arrangement.size(), -1);
  result.c_plus.signs.assign(arrangement.size(), +1);
  return result;
}

bool center_point_regular(int n) {
  if (n < 4) throw DomainError("n must be at least 4");
  return is_regular_mu(RationalVector(std::vector<Rational>(static_cast<std::size_t>(n), Rational(2, n))), n);
}

namespace {

bool is_largest_chamber_point(const RationalVector& x, int n) {
  if (!exact::in_hypersimplex(x)) return false;
  for (const auto& v : x)
    if (v.sign() <= 0 || v >= Rational(1)) return false;
  const int strict_bound = (n % 2 == 0) ? n / 2 - 1 : n / 2;
  for (const auto& h : exact::arrangement_for_n(n)) {
    const int sign = h.evaluate(x).sign();
    if (sign == 0) return false;
    if (static_cast<int>(h.support.size()) <= strict_bound && sign > 0) return false;
  }
  return true;
}

}  // namespace

RationalVector largest_chamber_witness(int n, std::uint64_t seed) {
  if (n < 4) throw DomainError("n must be at least 4");
  if (n > 8) throw Unsupported("largest chamber witness search is limited to n <= 8");
  RationalVector center(std::vector<Rational>(static_cast<std::size_t>(n), Rational(2, n)));
  if (is_largest_chamber_point(center, n)) return center;

  constexpr int kScale = 60;
  constexpr int kSpread = 5;
  constexpr int kTrials = 10000;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> step(-kSpread, kSpread);
  for (int trial = 0; trial < kTrials; ++trial) {
    std::vector<int> k(static_cast<std::size_t>(n));
    int sum = 0;
    for (int i = 0; i + 1 < n; ++i) sum += (k[static_cast<std::size_t>(i)] = step(rng));
    k[static_cast<std::size_t>(n - 1)] = -sum;
    if (std::abs(sum) > kSpread) continue;
    RationalVector x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      x[static_cast<std::size_t>(i)] = Rational(2 * kScale + k[static_cast<std::size_t>(i)], static_cast<std::int64_t>(n) * kScale);
    if (is_largest_chamber_point(x, n)) return x;
  }
  throw SearchExhausted("no largest-chamber witness found for n = " + std::to_string(n));
}

}  // namespace mfib
