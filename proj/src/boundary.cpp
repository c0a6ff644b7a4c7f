#include "bargmann/boundary.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bargmann {

namespace {

constexpr double kPi = std::numbers::pi;

void require_order(int n) {
  if (n < 3) throw std::invalid_argument("boundary: order must be >= 3");
}

}  // namespace

double normalize_angle(double theta) {
  double t = std::fmod(theta, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  // fmod can land exactly on 2pi after the correction
  if (t >= 2.0 * kPi) t = 0.0;
  return t;
}

double arg_2pi(Complex z) {
  if (z == Complex(0.0, 0.0)) return 0.0;
  return normalize_angle(std::arg(z));
}

double boundary_radius(int n, double theta) {
  require_order(n);
  double th = normalize_angle(theta);
  // |theta - pi|/n <= pi/n < pi/2, so the secant stays finite
  return std::pow(std::cos(kPi / n) / std::cos((th - kPi) / n), n);
}

Complex boundary_point_complex(int n, double theta) {
  require_order(n);
  double th = normalize_angle(theta);
  Complex w = std::exp(Complex(0.0, -2.0 * kPi / n));
  Complex ratio = (w + 1.0) / (w + std::exp(Complex(0.0, -2.0 * th / n)));
  return std::pow(ratio, n);
}

bool region_contains(int n, Complex z, double tol) {
  require_order(n);
  if (tol < 0.0) throw std::invalid_argument("region_contains: negative tolerance");
  return std::abs(z) <= boundary_radius(n, arg_2pi(z)) + tol;
}

double tau(int n) {
  require_order(n);
  return std::pow(std::cos(kPi / n), n) / std::pow(std::cos(kPi / (2.0 * (n - 1))), n - 1);
}

double theta_star(int n) {
  require_order(n);
  return (static_cast<double>(n - 2) / (n - 1)) * kPi / 2.0;
}

PureTuple extremal_tuple(int n, double t) {
  require_order(n);
  std::vector<PureState> states;
  states.reserve(n);
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXcd v(2);
    v(0) = Complex(std::sin(t), 0.0);
    // conj(w_n)^k = e^{+2 pi i k / n}
    v(1) = std::exp(Complex(0.0, 2.0 * kPi * k / n)) * std::cos(t);
    v /= v.norm();
    states.emplace_back(std::move(v));
  }
  return PureTuple(std::move(states));
}

double t_from_theta(int n, double theta) {
  require_order(n);
  double th = normalize_angle(theta);
  double val = std::sin(th / n) / (2.0 * std::sin(kPi / n) * std::cos((th - kPi) / n));
  constexpr double eps = 1e-12;
  if (val < -eps || val > 1.0 + eps)
    throw std::domain_error("t_from_theta: cos^2 t out of [0,1] at theta=" +
                            std::to_string(th));
  val = std::clamp(val, 0.0, 1.0);
  return std::acos(std::sqrt(val));
}

double cubic_root_n3(double theta) {
  return 2.0 * std::cos((normalize_angle(theta) - kPi) / 3.0);
}

std::array<double, 3> cubic_roots_n3(double theta) {
  double base = (normalize_angle(theta) - kPi) / 3.0;
  return {2.0 * std::cos(base), 2.0 * std::cos(base + 2.0 * kPi / 3.0),
          2.0 * std::cos(base + 4.0 * kPi / 3.0)};
}

}  // namespace bargmann
