#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "mfib/errors.hpp"
#include "mfib/linear_program.hpp"
#include "mfib/rational.hpp"

using mfib::Rational;
using mfib::RationalVector;

TEST_CASE("rationals are stored reduced with positive denominator") {
  const Rational r(6, -8);
  CHECK(r.num() == -3);
  CHECK(r.den() == 4);
  CHECK(Rational(0, -5).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), mfib::DomainError);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational a(1, 3), b(5, 9);
  CHECK(a + b == Rational(8, 9));
  CHECK(a - b == Rational(-2, 9));
  CHECK(a * b == Rational(5, 27));
  CHECK(a / b == Rational(3, 5));
  CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
  CHECK(a < b);
  CHECK(-a == Rational(-1, 3));
}

TEST_CASE("serialization uses p/q and bare integers") {
  CHECK(Rational(5, 9).to_string() == "5/9");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(-1, 3).to_string() == "-1/3");
  CHECK(Rational::parse("10/15") == Rational(2, 3));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational::parse("1/x"), mfib::DomainError);
  CHECK_THROWS_AS(Rational::parse(""), mfib::DomainError);
}

TEST_CASE("overflow is reported instead of wrapping") {
  const Rational big(std::numeric_limits<std::int64_t>::max() / 2);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("rational vectors reject mixed lengths") {
  const auto x = RationalVector::parse("1/3,5/9,5/9,5/9");
  CHECK(x.size() == 4);
  CHECK(x.sum() == Rational(2));
  RationalVector y(3);
  CHECK_THROWS_AS(x + y, mfib::DomainError);
  CHECK_THROWS_AS(x.dot(y), mfib::DomainError);
}

TEST_CASE("exact rank and parametric solve") {
  mfib::exact::RationalMatrix m(3, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  m(2, 0) = 1; m(2, 1) = 0; m(2, 2) = 1;
  CHECK(mfib::exact::rank(m) == 2);

  mfib::exact::RationalMatrix a(2, 3);
  a(0, 0) = 1; a(0, 1) = 1; a(0, 2) = 1;
  a(1, 0) = 1; a(1, 1) = -1; a(1, 2) = 0;
  const auto sol = mfib::exact::solve_parametric(a, RationalVector{Rational(1), Rational(0)}, {2});
  CHECK(sol.constant == RationalVector{Rational(1, 2), Rational(1, 2), Rational(0)});
  CHECK(sol.direction[0] == RationalVector{Rational(-1, 2), Rational(-1, 2), Rational(1)});
}

TEST_CASE("exact simplex: feasibility, optimum, infeasibility") {
  using namespace mfib::exact;
  RationalMatrix a(1, 2);
  a(0, 0) = 1;
  a(0, 1) = 1;
  const RationalVector b{Rational(1)};
  auto r = solve_standard_lp(a, b, RationalVector{Rational(2), Rational(3)});
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == Rational(3));
  CHECK(r.x == RationalVector{Rational(0), Rational(1)});
  CHECK(solve_standard_lp(a, RationalVector{Rational(-1)}).status == LpStatus::infeasible);
  RationalMatrix c(1, 2);
  c(0, 0) = 1;
  c(0, 1) = -1;
  CHECK(solve_standard_lp(c, RationalVector{Rational(0)}, RationalVector{Rational(1), Rational(0)}).status ==
        LpStatus::unbounded);
}
