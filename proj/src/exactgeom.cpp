#include "mfib/exactgeom.hpp"

#include <algorithm>

#include "mfib/errors.hpp"
#include "mfib/linear_program.hpp"

namespace mfib::exact {

Rational Hyperplane::evaluate(const RationalVector& x) const {
  Rational s = -1;
  for (int i : support) {
    if (i < 0 || static_cast<std::size_t>(i) >= x.size())
      throw DomainError("hyperplane support exceeds point dimension");
    s += x[static_cast<std::size_t>(i)];
  }
  return s;
}

std::string Hyperplane::label() const {
  std::string out;
  for (std::size_t k = 0; k < support.size(); ++k)
    out += (k ? "+x" : "x") + std::to_string(support[k] + 1);
  return out + "=1";
}

bool SignVector::strict() const {
  return std::none_of(signs.begin(), signs.end(), [](int s) { return s == 0; });
}

std::string SignVector::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < signs.size(); ++k) out += (k ? "," : "") + std::to_string(signs[k]);
  return out + "]";
}

namespace {

// Lexicographic enumeration of k-subsets of {0..n-1}.
void for_each_subset(int n, int k, std::vector<int>& cur, int start,
                     std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
    cur.push_back(i);
    for_each_subset(n, k, cur, i + 1, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Hyperplane> arrangement_for_n(int n) {
  if (n < 4) throw DomainError("arrangement requires n >= 4");
  std::vector<Hyperplane> out;
  for (int s = 2; s <= n / 2; ++s) {
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    for_each_subset(n, s, cur, 0, subsets);
    for (auto& t : subsets) {
      if (2 * s == n) {
        std::vector<int> complement;
        for (int i = 0; i < n; ++i)
          if (!std::binary_search(t.begin(), t.end(), i)) complement.push_back(i);
        if (complement < t) continue;
      }
      out.push_back(Hyperplane{std::move(t)});
    }
  }
  return out;
}

SignVector sign_vector(const RationalVector& x, std::span<const Hyperplane> arrangement) {
  SignVector sv;
  sv.signs.reserve(arrangement.size());
  for (const auto& h : arrangement) sv.signs.push_back(h.evaluate(x).sign());
  return sv;
}

int affine_rank(std::span<const RationalVector> points) {
  if (points.empty()) throw DomainError("affine rank of an empty set");
  const std::size_t dim = points.front().size();
  RationalMatrix m(points.size() - 1, dim);
  for (std::size_t r = 1; r < points.size(); ++r) {
    auto d = points[r] - points.front();
    for (std::size_t c = 0; c < dim; ++c) m(r - 1, c) = d[c];
  }
  return rank(std::move(m));
}

std::optional<RationalVector> convex_membership(const RationalVector& x,
                                                std::span<const RationalVector> points) {
  if (points.empty()) return std::nullopt;
  const std::size_t dim = x.size();
  RationalMatrix a(dim + 1, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].size() != dim) throw DomainError("convex membership length mismatch");
    for (std::size_t i = 0; i < dim; ++i) a(i, j) = points[j][i];
    a(dim, j) = 1;
  }
  RationalVector b(dim + 1);
  for (std::size_t i = 0; i < dim; ++i) b[i] = x[i];
  b[dim] = 1;
  auto lp = solve_standard_lp(a, b);
  if (lp.status != LpStatus::optimal) return std::nullopt;
  return lp.x;
}

RationalVector hypersimplex_vertex(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw DomainError("invalid vertex pair");
  RationalVector v(static_cast<std::size_t>(n));
  v[static_cast<std::size_t>(i)] = 1;
  v[static_cast<std::size_t>(j)] = 1;
  return v;
}

bool in_hypersimplex(const RationalVector& x) {
  if (x.sum() != Rational(2)) return false;
  return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v.sign() >= 0 && v <= Rational(1); });
}

}  // namespace mfib::exact
