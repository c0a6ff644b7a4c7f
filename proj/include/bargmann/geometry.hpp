#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "bargmann/states.hpp"

namespace bargmann {

/// Elliptical disk {z : |z| + |z - c| <= s} with one focus at the origin.
/// Degenerates to a segment when |c| = s and to {0} when s = 0.
struct EllipticalDisk {
  Complex c;  // second focus
  double s;   // focal-sum bound = major-axis length
};

/// Finite cloud of complex points plus a tag for where they came from.
struct PlanarSample {
  std::vector<Complex> points;
  std::string provenance;
};

/// Parameters of the numerical range of the rank-one matrix u v^dag:
/// foci 0 and <v|u>, focal sum ||u|| ||v||.
EllipticalDisk rank_one_nr_params(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v);

/// Numerical range of the projector product psi_1 ... psi_{n-1}:
/// c = Tr(psi_1...psi_{n-1}), s = |prod_{j=1}^{n-2} <psi_j|psi_{j+1}>|.
/// The product vanishing collapses the set to {0}.
EllipticalDisk disk_from_tuple(const std::vector<PureState>& states);

/// |z| + |z - c| <= s + tol
bool disk_contains(const EllipticalDisk& disk, Complex z, double tol);

/// Polar radius of the boundary |z| + |z - c| = s at angle theta:
/// r = (s^2 - |c|^2) / (2 (s - |c| cos(theta - arg c))).
/// Only defined for non-degenerate disks (0 <= |c| < s).
double ellipse_polar(const EllipticalDisk& disk, double theta);

/// Monte Carlo Minkowski product: each output point is the product of one
/// uniform draw from every input set.
PlanarSample minkowski_sample(const std::vector<PlanarSample>& sets, std::size_t count,
                              std::uint64_t seed);

/// Polar radius of the boundary of E_t^2 (E_t = {|z|+|z-t| <= 1}):
/// r = (1-t^2)^2 / (4 (1 - t cos(theta/2))^2), theta in [0, 2pi).
double minkowski_square_boundary(double t, double theta);

}  // namespace bargmann
