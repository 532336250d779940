#include <cmath>

#include "mfib/errors.hpp"
#include "mfib/fibers4.hpp"
#include "mfib/moment.hpp"

namespace mfib {

namespace {

constexpr double kSphereTol = 1e-10;
constexpr double kNinth = 1.0 / 9.0;

void require_sphere(const SpherePoint& s) {
  const double r = std::norm(s.z[0]) + std::norm(s.z[1]) + std::norm(s.z[2]);
  if (std::abs(r - 1.0 / 3.0) > kSphereTol) throw DomainError("point is off the sphere |z|^2 = 1/3");
}

double root(double x) { return std::sqrt(std::max(0.0, x)); }

Complex unit_phase(Complex w) {
  const double m = std::abs(w);
  return m > 0.0 ? w / m : Complex(1.0, 0.0);
}

}  // namespace

RationalVector orbit_point(Orbit orbit) {
  return orbit == Orbit::first ? RationalVector{Rational(1, 3), Rational(5, 9), Rational(5, 9), Rational(5, 9)}
                               : RationalVector{Rational(2, 3), Rational(4, 9), Rational(4, 9), Rational(4, 9)};
}

Vector6c orbit_permute(const Vector6c& z, Orbit orbit) {
  if (z.size() != 6) throw DomainError("expected 6 homogeneous coordinates");
  if (orbit == Orbit::first) return z;
  Vector6c w(6);
  w << z[3], z[4], z[5], z[0], z[1], z[2];
  return w;
}

double a_of(Complex w) { return std::sqrt(std::norm(w) + kNinth); }

Magnitudes mq7_magnitudes(const SpherePoint& s) {
  require_sphere(s);
  const double x0 = std::norm(s.z[0]), x1 = std::norm(s.z[1]), x2 = std::norm(s.z[2]);
  return {root((x0 + x1 + 4 * x2) / 3), root((x0 + 4 * x1 + x2) / 3), root((4 * x0 + x1 + x2) / 3)};
}

Magnitudes mq7_magnitudes_embedded(const SpherePoint& s) {
  require_sphere(s);
  const double x0 = std::norm(s.z[0]), x1 = std::norm(s.z[1]);
  return {root(4.0 / 9.0 - x0 - x1), root(x1 + kNinth), root(x0 + kNinth)};
}

MQ7Point lift_f(const SpherePoint& s) { return h_param(s, 1.0, 1.0); }

MQ7Point h_param(const SpherePoint& s, Complex t4, Complex t5) {
  const auto m = mq7_magnitudes(s);
  Vector6c z(6);
  z << s.z[0], s.z[1], s.z[2], m.z3, m.z4 * t4, m.z5 * t5;
  return {z};
}

HPreimage h_preimage(const MQ7Point& p) {
  const auto& z = p.z;
  if (z.size() != 6) throw DomainError("expected 6 homogeneous coordinates");
  // Bring the representative to z3 > 0; z3 never vanishes on the fiber.
  const Complex gauge = std::conj(unit_phase(z[3]));
  const double scale = std::sqrt(1.0 / 3.0) / z.head(3).norm();
  const Vector6c w = z * gauge * scale;
  return {SpherePoint{{w[0], w[1], w[2]}}, unit_phase(w[4]), unit_phase(w[5])};
}

RationalVector TriangleP::point(const Rational& x0, const Rational& x1) const {
  const auto& c = solution.constant;
  const auto& d4 = solution.direction[0];
  const auto& d5 = solution.direction[1];
  // Solve for the free coordinates (x4, x5) from the prescribed x0, x1.
  const Rational det = d4[0] * d5[1] - d5[0] * d4[1];
  if (det.is_zero()) throw DegenerateInput("x0, x1 do not parametrize the triangle");
  const Rational r0 = x0 - c[0], r1 = x1 - c[1];
  const Rational s4 = (r0 * d5[1] - d5[0] * r1) / det;
  const Rational s5 = (d4[0] * r1 - r0 * d4[1]) / det;
  RationalVector x = c;
  x += d4 * s4;
  x += d5 * s5;
  return x;
}

RationalVector TriangleP::edge_point(int k, const Rational& s) const {
  switch (k) {
    case 0: return point(Rational(0), s);
    case 1: return point(s, Rational(0));
    case 2: return point(s, Rational(1, 3) - s);
    default: throw DomainError("edge index must be 0, 1 or 2");
  }
}

TriangleP solve_triangle_P() {
  TriangleP t;
  t.solution = exact::solve_parametric(a_matrix(4), orbit_point(Orbit::first), {4, 5});
  t.x01 = t.point(Rational(0), Rational(0));
  t.x02 = t.point(Rational(0), Rational(1, 3));
  t.x12 = t.point(Rational(1, 3), Rational(0));
  return t;
}

namespace {

void require_curve_domain(double x0, double x1) {
  if (!(x0 >= 0.0 && x1 >= 0.0 && x0 + x1 <= 1.0 / 3.0 + 1e-12))
    throw DomainError("curve arguments need x0, x1 >= 0 and x0 + x1 <= 1/3");
}

struct CurveTerms {
  double r0, r2, r1;  // |z0||z5|, |z2||z3|, |z1||z4|
};

CurveTerms curve_terms(double x0, double x1) {
  const double x2 = std::max(0.0, 1.0 / 3.0 - x0 - x1);
  return {root(x0 * (x0 + kNinth)), root(x2 * (x2 + kNinth)), root(x1 * (x1 + kNinth))};
}

}  // namespace

double curve_Pprime_residual(double x0, double x1) {
  require_curve_domain(x0, x1);
  const auto t = curve_terms(x0, x1);
  return std::abs(t.r0 + t.r2 - t.r1);
}

double curve_modulus_residual(double x0, double x1) {
  require_curve_domain(x0, x1);
  const auto t = curve_terms(x0, x1);
  const double lo = std::abs(t.r0 - t.r2), hi = t.r0 + t.r2;
  if (t.r1 < lo) return lo - t.r1;
  if (t.r1 > hi) return t.r1 - hi;
  return 0.0;
}

}  // namespace mfib
