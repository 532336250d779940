#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "mfib/linear_program.hpp"
#include "mfib/plucker.hpp"
#include "mfib/rational.hpp"

// Explicit fibers of the T^4 action for n = 4 over Q = (1/3,5/9,5/9,5/9).
//
// Fiber points are stored as raw 6-vectors in the normalization
// |z0|^2 + |z1|^2 + |z2|^2 = 1/3 with z3 real positive; the total norm is
// then 1. The second chamber orbit is reached by the coordinate permutation
// z0<->z3, z1<->z4, z2<->z5 (see Orbit).
namespace mfib {

using Vector6c = Eigen::VectorXcd;
using Phases3 = std::array<Complex, 3>;

enum class Orbit { first, second };

// (1/3,5/9,5/9,5/9) or (2/3,4/9,4/9,4/9).
RationalVector orbit_point(Orbit orbit);
// Self-inverse coordinate permutation; identity for Orbit::first.
Vector6c orbit_permute(const Vector6c& z, Orbit orbit);

// a(w) = sqrt(|w|^2 + 1/9).
double a_of(Complex w);

// ---------------------------------------------------------------- M_Q^7

struct SpherePoint {
  Phases3 z{};  // |z0|^2 + |z1|^2 + |z2|^2 = 1/3
};

struct Magnitudes {
  double z3 = 0, z4 = 0, z5 = 0;
};

struct MQ7Point {
  Vector6c z;
};

// |z3|^2 = (|z0|^2+|z1|^2+4|z2|^2)/3, |z4|^2 = (|z0|^2+4|z1|^2+|z2|^2)/3,
// |z5|^2 = (4|z0|^2+|z1|^2+|z2|^2)/3. Throws DomainError off the sphere.
Magnitudes mq7_magnitudes(const SpherePoint& s);
// The equivalent forms 4/9-|z0|^2-|z1|^2, |z1|^2+1/9, |z0|^2+1/9.
Magnitudes mq7_magnitudes_embedded(const SpherePoint& s);

MQ7Point lift_f(const SpherePoint& s);
MQ7Point h_param(const SpherePoint& s, Complex t4, Complex t5);

struct HPreimage {
  SpherePoint s;
  Complex t4, t5;
};
HPreimage h_preimage(const MQ7Point& p);

// ------------------------------------------------------- triangle and curve

// The triangle P = mu_hat(M_Q^7): solution set of A X = Q over the free
// coordinates x4, x5, restricted to x >= 0.
struct TriangleP {
  exact::ParametricSolution solution;
  RationalVector x01, x02, x12;  // vertices: x0=x1=0, x0=x2=0, x1=x2=0

  // Point with prescribed x0, x1; lies in P iff all coordinates are >= 0.
  RationalVector point(const Rational& x0, const Rational& x1) const;
  // Edge I_k is {x_k = 0}; s is x1 on I0 and x0 on I1, I2.
  RationalVector edge_point(int k, const Rational& s) const;
};

TriangleP solve_triangle_P();

// |sqrt(x0(x0+1/9)) + sqrt((1/3-x0-x1)(4/9-x0-x1)) - sqrt(x1(x1+1/9))|.
double curve_Pprime_residual(double x0, double x1);
// Distance of |z1||z4| from [||z0||z5| - |z2||z3||, |z0||z5| + |z2||z3|]:
// zero iff the phases can close the fiber equation.
double curve_modulus_residual(double x0, double x1);

// ---------------------------------------------------------- M^2, M^3, M_Q^5

struct M2Point {
  Complex z0, z1;
  double z2 = 0;  // |z2| >= 0
};

struct M3Point {
  Complex z0, z1, z2;
};

struct MQ5Point {
  Vector6c z;
};

// |z0 a(z0) + z2 a(z2) - z1 a(z1)|.
double surface_residual(const M2Point& m);
double surface_residual(const M3Point& m);

// Prescribes |z0| = r0, |z1| = r1 and closes z0 a(z0) + |z2||z3| = z1 a(z1)
// by the law of cosines; branch = +1 or -1 picks the sign of sin(alpha).
// Throws NoSolution when the magnitudes cannot close, DomainError when
// r0^2 + r1^2 > 1/3.
M2Point m2_sample(double r0, double r1, int branch);

// Rejection sampling over the feasible magnitude region.
M2Point m2_random(std::mt19937_64& rng);
// lambda * m2 for a uniform phase lambda.
M3Point m3_sample(std::mt19937_64& rng);
M3Point s1_action(const M2Point& m, Complex lambda);
M3Point s1_action(const M3Point& m, Complex lambda);

SpherePoint sphere_random(std::mt19937_64& rng);
Complex phase_random(std::mt19937_64& rng);
Phases3 torus3_random(std::mt19937_64& rng);

// rho(t1,t2,t3) = (t1, t2, t3, 1, t3/t2, t3/t1) applied to the M^2 point.
MQ5Point F_param(const M2Point& m, const Phases3& t);
std::pair<M2Point, Phases3> F_preimage(const MQ5Point& p);

// (t1 z0, t2 z1, z2, |z3|, |z4|/t2, |z5|/t1).
MQ5Point G_param(const M3Point& m, Complex t1, Complex t2);

struct GPreimage {
  M3Point m;
  Complex t1, t2;
};
GPreimage G_preimage(const MQ5Point& p);

// (z1|z4| : z0|z5|); throws DegenerateInput when both vanish.
ProjectivePoint proj_p(const M2Point& m);
ProjectivePoint proj_p(const M3Point& m);
// (z1|z4| : z0|z5| : z2|z3|).
ProjectivePoint hopf_q(const M3Point& m);
// (z1 a(z1), z0 a(z0)) scaled to unit norm; S^1-equivariant.
Eigen::Vector2cd g_map(const M3Point& m);

// A circle M_{Q,i} = T^3 . base. Coordinate k of a circle point is
// base_k * prod_j tau_j^exponents[k][j], rescaled so z3 is real positive.
struct FiberCircle {
  int index = 0;
  Vector6c base;
  std::array<std::array<int, 3>, 6> exponents{};
  Eigen::VectorXd mu_hat;  // X_index

  MQ5Point at(const Phases3& tau) const;
};

std::array<FiberCircle, 3> mq5_fiber_circles();

// ----------------------------------------------- complete intersection (R^8)

struct ChartUV {
  Eigen::Vector4d u, v;  // a_k = u_k + i v_k
};

ChartUV chart_uv(const Vector6c& z);

Eigen::Vector3d complete_intersection_f(const ChartUV& p);
// 3x8 analytic Jacobian, columns (u1,v1,u2,v2,u3,v3,u4,v4).
Eigen::Matrix<double, 3, 8> jacobian_f(const ChartUV& p);
// Numerical rank with singular values below tol * sigma_max dropped.
int jacobian_rank(const ChartUV& p, double tol = 1e-6);

// ---------------------------------------------------- principal T^3 bundle

enum class ChartDirection { zero_to_one, one_to_zero };

using ExponentMatrix = std::array<std::array<int, 3>, 3>;

ExponentMatrix transition_matrix(ChartDirection direction);
int transition_determinant();
Phases3 bundle_transition(const Phases3& t, ChartDirection direction);

struct ChartCoverage {
  double p23 = 0, p24 = 0, p34 = 0;  // moduli
  bool p12_zero = false, p13_zero = false, p14_zero = false;
  bool in_m0 = false;  // P13 != 0
  bool in_m1 = false;  // P12 != 0
};

// Throws CertificateFailure if P23, P24 or P34 vanishes.
ChartCoverage verify_chart_coverage(const MQ5Point& p);
// (a1 a4 : a2 a3).
ProjectivePoint bundle_projection(const MQ5Point& p);

// ------------------------------------------------------ tangent dimensions

// Real dimension of the moment fiber through the unit vector z in C^6,
// computed from the rank of the sphere, moment and gauge constraints;
// with_quadric adds the two real rows of the Pluecker relation.
int tangent_dimension(const Vector6c& z, bool with_quadric, double tol = 1e-6);

}  // namespace mfib
