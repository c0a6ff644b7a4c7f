#include "bargmann/invariants.hpp"

#include <cmath>
#include <stdexcept>

namespace bargmann {

namespace {

constexpr double kUnitBlochTol = 1e-12;

double dot(const BlochVector& a, const BlochVector& b) { return a.dot(b); }

double det3_cols(const BlochVector& a, const BlochVector& b, const BlochVector& c) {
  Eigen::Matrix3d m;
  m.col(0) = a;
  m.col(1) = b;
  m.col(2) = c;
  return m.determinant();
}

}  // namespace

InvariantValue delta_trace(const MixedTuple& tuple) {
  Eigen::MatrixXcd prod = tuple[0].entries();
  for (int k = 1; k < tuple.order(); ++k) prod = prod * tuple[k].entries();
  return {tuple.order(), prod.trace()};
}

InvariantValue delta_pure(const PureTuple& tuple) {
  const int n = tuple.order();
  Complex z(1.0, 0.0);
  for (int k = 0; k < n; ++k) z *= overlap(tuple[k], tuple[(k + 1) % n]);
  return {n, z};
}

BlochAccumulator bloch_accumulate(const BlochAccumulator& acc, const BlochVector& r) {
  Eigen::Vector3cd rc = r.cast<Complex>();
  BlochAccumulator next;
  // bilinear dot and cross: no conjugation on p (Eigen conjugates both)
  next.p0 = acc.p0 + acc.p.cwiseProduct(rc).sum();
  Eigen::Vector3cd cr(acc.p(1) * rc(2) - acc.p(2) * rc(1),
                      acc.p(2) * rc(0) - acc.p(0) * rc(2),
                      acc.p(0) * rc(1) - acc.p(1) * rc(0));
  next.p = acc.p0 * rc + acc.p + Complex(0.0, 1.0) * cr;
  return next;
}

InvariantValue delta_qubit_bloch(const std::vector<BlochVector>& rs) {
  const int n = static_cast<int>(rs.size());
  if (n < 2) throw std::invalid_argument("delta_qubit_bloch: need at least 2 vectors");
  for (const auto& r : rs)
    if (std::abs(r.norm() - 1.0) > kUnitBlochTol)
      throw std::invalid_argument("delta_qubit_bloch: non-unit Bloch vector");
  BlochAccumulator acc{Complex(1.0, 0.0), rs[0].cast<Complex>()};
  for (int k = 1; k < n; ++k) acc = bloch_accumulate(acc, rs[k]);
  return {n, std::pow(2.0, 1 - n) * acc.p0};
}

std::pair<double, double> closed_form_xy(int n, const std::vector<BlochVector>& rs) {
  if (static_cast<int>(rs.size()) != n)
    throw std::invalid_argument("closed_form_xy: length mismatch");
  for (const auto& r : rs)
    if (std::abs(r.norm() - 1.0) > kUnitBlochTol)
      throw std::invalid_argument("closed_form_xy: non-unit Bloch vector");

  if (n == 3) {
    const auto &r1 = rs[0], &r2 = rs[1], &r3 = rs[2];
    double x = 0.25 * (1.0 + dot(r1, r2) + dot(r1, r3) + dot(r2, r3));
    double y = 0.25 * det3_cols(r1, r2, r3);
    return {x, y};
  }
  if (n == 4) {
    const auto &r1 = rs[0], &r2 = rs[1], &r3 = rs[2], &r4 = rs[3];
    double x = 0.125 * ((1.0 + dot(r1, r2)) * (1.0 + dot(r3, r4)) -
                        (1.0 - dot(r1, r3)) * (1.0 - dot(r2, r4)) +
                        (1.0 + dot(r1, r4)) * (1.0 + dot(r2, r3)));
    double y = 0.125 * det3_cols(r1 + r2, r2 + r3, r3 + r4);
    return {x, y};
  }
  if (n == 5) {
    const auto &r1 = rs[0], &r2 = rs[1], &r3 = rs[2], &r4 = rs[3], &r5 = rs[4];
    double pairsum = 0.0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) pairsum += dot(rs[i], rs[j]);
    double x = 1.0 + pairsum + dot(r1, r2) * dot(r3, r4) - dot(r1, r3) * dot(r2, r4) +
               dot(r1, r4) * dot(r2, r3) +
               (dot(r2, r3) + dot(r2, r4) + dot(r3, r4)) * dot(r1, r5) +
               (-dot(r1, r3) - dot(r1, r4) + dot(r3, r4)) * dot(r2, r5) +
               (dot(r1, r2) - dot(r1, r4) - dot(r2, r4)) * dot(r3, r5) +
               (dot(r1, r2) + dot(r1, r3) + dot(r2, r3)) * dot(r4, r5);
    x /= 16.0;
    double triplesum = 0.0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        for (int k = j + 1; k < 5; ++k) triplesum += det3_cols(rs[i], rs[j], rs[k]);
    double y = triplesum + dot(r2, r3) * det3_cols(r1, r4, r5) -
               dot(r1, r3) * det3_cols(r2, r4, r5) +
               dot(r1, r2) * det3_cols(r3, r4, r5) +
               dot(r4, r5) * det3_cols(r1, r2, r3);
    y /= 16.0;
    return {x, y};
  }
  throw std::invalid_argument("closed_form_xy: n must be 3, 4 or 5");
}

BlochVector bloch_vector(const PureState& a) {
  if (a.dim() != 2) throw std::invalid_argument("bloch_vector: qubit states only");
  Complex c = std::conj(a.amplitudes()(0)) * a.amplitudes()(1);
  double z = std::norm(a.amplitudes()(0)) - std::norm(a.amplitudes()(1));
  return BlochVector(2.0 * c.real(), 2.0 * c.imag(), z);
}

PureState state_from_bloch(const BlochVector& r) {
  if (std::abs(r.norm() - 1.0) > kUnitBlochTol)
    throw std::invalid_argument("state_from_bloch: non-unit Bloch vector");
  double theta = std::acos(std::clamp(r.z(), -1.0, 1.0));
  double phi = std::atan2(r.y(), r.x());
  Eigen::VectorXcd v(2);
  v(0) = Complex(std::cos(theta / 2.0), 0.0);
  v(1) = std::exp(Complex(0.0, phi)) * std::sin(theta / 2.0);
  v /= v.norm();
  return PureState(std::move(v));
}

DensityMatrix density_from_bloch(const BlochVector& r) {
  if (r.norm() > 1.0 + kUnitBlochTol)
    throw std::invalid_argument("density_from_bloch: Bloch vector outside the ball");
  Eigen::Matrix2cd m;
  m(0, 0) = Complex(0.5 * (1.0 + r.z()), 0.0);
  m(1, 1) = Complex(0.5 * (1.0 - r.z()), 0.0);
  m(0, 1) = 0.5 * Complex(r.x(), -r.y());
  m(1, 0) = 0.5 * Complex(r.x(), r.y());
  return DensityMatrix(Eigen::MatrixXcd(m));
}

}  // namespace bargmann
