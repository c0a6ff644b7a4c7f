#pragma once

#include <array>
#include <utility>
#include <vector>

#include "bargmann/states.hpp"

namespace bargmann {

/// Polar curve sampled as (theta, r) pairs with theta strictly increasing.
struct PolarCurve {
  std::vector<std::pair<double, double>> samples;
};

/// Angle folded into [0, 2pi).
double normalize_angle(double theta);

/// arg z in [0, 2pi), with arg 0 := 0.
double arg_2pi(Complex z);

/// r_n(theta) = cos^n(pi/n) sec^n((theta - pi)/n), theta in [0, 2pi).
double boundary_radius(int n, double theta);

/// Same point computed from the complex form ((w_n+1)/(w_n+e^{-2i theta/n}))^n
/// with w_n = e^{-2 pi i / n}; used as a cross-check of boundary_radius.
Complex boundary_point_complex(int n, double theta);

/// |z| <= r_n(arg z) + tol
bool region_contains(int n, Complex z, double tol);

/// Largest imaginary part of the region: cos^n(pi/n) sec^{n-1}(pi/(2(n-1))).
double tau(int n);

/// Angle attaining tau: theta* = ((n-2)/(n-1)) pi/2.
double theta_star(int n);

/// Single-parameter qubit tuple |psi_k(t)> = sin t |0> + e^{2 pi i k/n} cos t |1>
/// whose invariant traces out the boundary curve.
PureTuple extremal_tuple(int n, double t);

/// Inverts the boundary parameterization: cos^2 t = sin(theta/n) /
/// (2 sin(pi/n) cos((theta-pi)/n)), returning t in [0, pi/2].
double t_from_theta(int n, double theta);

/// Positive root s = 2 cos((theta - pi)/3) of s^3 - 3s + 2 cos(theta) = 0;
/// satisfies s^{-3} = boundary_radius(3, theta).
double cubic_root_n3(double theta);

/// All three real roots 2 cos((theta - pi)/3 + 2k pi/3), k = 0,1,2.
std::array<double, 3> cubic_roots_n3(double theta);

}  // namespace bargmann
