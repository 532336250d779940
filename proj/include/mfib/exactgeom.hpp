#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mfib/rational.hpp"

// Exact combinatorics of the hypersimplex: the hyperplane arrangement that
// cuts it into chambers, sign vectors identifying chambers, affine ranks and
// exact convex membership. Floating point never enters here.
namespace mfib::exact {

// Hyperplane sum_{i in support} x_i = 1. Support indices are 0-based and
// sorted; printed 1-based.
struct Hyperplane {
  std::vector<int> support;

  // sum_{i in support} x_i - 1
  Rational evaluate(const RationalVector& x) const;
  std::string label() const;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

// Chamber identifier: one sign in {-1,0,+1} per arrangement hyperplane.
struct SignVector {
  std::vector<int> signs;

  bool strict() const;  // no zero entry
  std::string to_string() const;  // "[-1,-1,-1]"

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector&, const SignVector&) = default;
};

// All hyperplanes x_T = 1 with 2 <= |T| <= floor(n/2), ordered by support
// size then lexicographically. For even n a support of size n/2 and its
// complement cut the same hyperplane of the slice sum x = 2; only the
// lexicographically smaller one is kept.
std::vector<Hyperplane> arrangement_for_n(int n);

SignVector sign_vector(const RationalVector& x, std::span<const Hyperplane> arrangement);

// Rank of {v - v0 : v in points}.
int affine_rank(std::span<const RationalVector> points);

// Exact test x in conv(points). On success returns weights lambda >= 0 with
// sum 1 and sum lambda_i v_i = x.
std::optional<RationalVector> convex_membership(const RationalVector& x,
                                                std::span<const RationalVector> points);

// Vertex Lambda_I of the hypersimplex for the pair I = {i, j}, 0-based.
RationalVector hypersimplex_vertex(int n, int i, int j);

// True when sum x = 2 and 0 <= x_i <= 1.
bool in_hypersimplex(const RationalVector& x);

}  // namespace mfib::exact
