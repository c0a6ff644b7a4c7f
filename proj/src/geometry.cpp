#include "bargmann/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "bargmann/rng.hpp"

namespace bargmann {

EllipticalDisk rank_one_nr_params(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("rank_one_nr_params: dimension mismatch");
  Complex c = v.dot(u);  // <v|u>
  double s = u.norm() * v.norm();
  return {c, s};
}

EllipticalDisk disk_from_tuple(const std::vector<PureState>& states) {
  const int m = static_cast<int>(states.size());
  if (m < 2) throw std::invalid_argument("disk_from_tuple: need at least 2 states");
  for (const auto& s : states)
    if (s.dim() != states.front().dim())
      throw std::invalid_argument("disk_from_tuple: dimension mismatch");
  Complex chain(1.0, 0.0);
  for (int j = 0; j + 1 < m; ++j) chain *= overlap(states[j], states[j + 1]);
  double s = std::abs(chain);
  Complex c = chain * overlap(states[m - 1], states[0]);  // = Tr(psi_1...psi_{m})
  if (s == 0.0) c = Complex(0.0, 0.0);
  return {c, s};
}

bool disk_contains(const EllipticalDisk& disk, Complex z, double tol) {
  if (tol < 0.0) throw std::invalid_argument("disk_contains: negative tolerance");
  return std::abs(z) + std::abs(z - disk.c) <= disk.s + tol;
}

double ellipse_polar(const EllipticalDisk& disk, double theta) {
  double cmod = std::abs(disk.c);
  if (disk.s <= 0.0 || disk.s - cmod <= 0.0)
    throw std::invalid_argument("ellipse_polar: degenerate disk");
  double phase = std::arg(disk.c);
  return (disk.s * disk.s - cmod * cmod) /
         (2.0 * (disk.s - cmod * std::cos(theta - phase)));
}

PlanarSample minkowski_sample(const std::vector<PlanarSample>& sets, std::size_t count,
                              std::uint64_t seed) {
  for (const auto& s : sets)
    if (s.points.empty()) throw std::invalid_argument("minkowski_sample: empty factor set");
  PlanarSample out;
  out.provenance = "minkowski_sample";
  out.points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto gen = engine_for(seed, i);
    Complex z(1.0, 0.0);
    for (const auto& s : sets) {
      std::uniform_int_distribution<std::size_t> pick(0, s.points.size() - 1);
      z *= s.points[pick(gen)];
    }
    out.points.push_back(z);
  }
  return out;
}

double minkowski_square_boundary(double t, double theta) {
  if (t < 0.0 || t >= 1.0)
    throw std::invalid_argument("minkowski_square_boundary: t must lie in [0,1)");
  // The squaring map reaches angle theta from half-angles theta/2 and
  // theta/2 + pi, and for |cos(theta/2)| < t an oblique pairing of factor
  // angles dominates both; the boundary takes the largest branch.
  double c = std::abs(std::cos(theta / 2.0));
  if (c >= t) {
    double den = 1.0 - t * c;
    return (1.0 - t * t) * (1.0 - t * t) / (4.0 * den * den);
  }
  double s2 = 1.0 - c * c;  // sin^2(theta/2)
  return (1.0 - t * t) / (4.0 * s2);
}

}  // namespace bargmann
