#include "bargmann/states.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "bargmann/rng.hpp"

namespace bargmann {

PureState::PureState(Eigen::VectorXcd amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() < 1) throw std::invalid_argument("PureState: empty amplitude vector");
  double norm = amps_.norm();
  if (std::abs(norm * norm - 1.0) > kStateTol)
    throw std::invalid_argument("PureState: squared norm deviates from 1 beyond 1e-12");
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : mat_(std::move(entries)) {
  if (mat_.rows() < 1 || mat_.rows() != mat_.cols())
    throw std::invalid_argument("DensityMatrix: not square");
  if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > kStateTol)
    throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-12");
  if (std::abs(mat_.trace() - Complex(1.0, 0.0)) > kStateTol)
    throw std::invalid_argument("DensityMatrix: trace deviates from 1 beyond 1e-12");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPsdTol)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond 1e-10");
}

namespace {

Eigen::VectorXcd gaussian_vector(int d, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd v(d);
  for (int i = 0; i < d; ++i) {
    double re = normal(gen);
    double im = normal(gen);
    v(i) = Complex(re, im);
  }
  return v;
}

Eigen::MatrixXcd gaussian_matrix(int d, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double re = normal(gen);
      double im = normal(gen);
      g(i, j) = Complex(re, im);
    }
  return g;
}

}  // namespace

PureState haar_random_pure(int d, std::uint64_t seed, std::uint64_t index) {
  auto gen = engine_for(seed, index);
  return haar_random_pure(d, gen);
}

PureState haar_random_pure(int d, std::mt19937_64& gen) {
  if (d < 1) throw std::invalid_argument("haar_random_pure: dimension must be >= 1");
  Eigen::VectorXcd v = gaussian_vector(d, gen);
  while (v.norm() == 0.0) v = gaussian_vector(d, gen);
  v /= v.norm();
  return PureState(std::move(v));
}

DensityMatrix ginibre_density(int d, std::uint64_t seed, std::uint64_t index) {
  auto gen = engine_for(seed, index);
  return ginibre_density(d, gen);
}

DensityMatrix ginibre_density(int d, std::mt19937_64& gen) {
  if (d < 1) throw std::invalid_argument("ginibre_density: dimension must be >= 1");
  Eigen::MatrixXcd g = gaussian_matrix(d, gen);
  Eigen::MatrixXcd w = g * g.adjoint();
  Complex tr = w.trace();
  while (std::abs(tr) == 0.0) {
    g = gaussian_matrix(d, gen);
    w = g * g.adjoint();
    tr = w.trace();
  }
  w /= tr.real();
  // symmetrize away rounding residue before validation
  w = ((w + w.adjoint()) * 0.5).eval();
  return DensityMatrix(std::move(w));
}

Eigen::MatrixXcd haar_random_unitary(int d, std::mt19937_64& gen) {
  if (d < 1) throw std::invalid_argument("haar_random_unitary: dimension must be >= 1");
  Eigen::MatrixXcd g = gaussian_matrix(d, gen);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    Complex rii = r(i, i);
    Complex phase = std::abs(rii) > 0.0 ? rii / std::abs(rii) : Complex(1.0, 0.0);
    q.col(i) *= phase;
  }
  return q;
}

Complex overlap(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("overlap: dimension mismatch");
  return a.amplitudes().dot(b.amplitudes());
}

DensityMatrix projector(const PureState& a) {
  Eigen::MatrixXcd p = a.amplitudes() * a.amplitudes().adjoint();
  p = ((p + p.adjoint()) * 0.5).eval();
  return DensityMatrix(std::move(p));
}

}  // namespace bargmann
