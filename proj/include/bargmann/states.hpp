#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace bargmann {

using Complex = std::complex<double>;

// tolerances for state validity
inline constexpr double kStateTol = 1e-12;  // norms, traces, Hermiticity
inline constexpr double kPsdTol = 1e-10;    // eigenvalue floor after decomposition

/// Unit vector in C^d.
class PureState {
 public:
  explicit PureState(Eigen::VectorXcd amplitudes);

  int dim() const { return static_cast<int>(amps_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }

 private:
  Eigen::VectorXcd amps_;
};

/// Hermitian, positive semidefinite, unit-trace d x d matrix.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd entries);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Eigen::MatrixXcd& entries() const { return mat_; }

 private:
  Eigen::MatrixXcd mat_;
};

/// Ordered tuple of n >= 2 states sharing one dimension.
template <class StateT>
class StateTuple {
 public:
  explicit StateTuple(std::vector<StateT> states) : states_(std::move(states)) {
    if (states_.size() < 2)
      throw std::invalid_argument("StateTuple: need at least 2 states");
    for (const auto& s : states_)
      if (s.dim() != states_.front().dim())
        throw std::invalid_argument("StateTuple: dimension mismatch");
  }

  int order() const { return static_cast<int>(states_.size()); }
  int dim() const { return states_.front().dim(); }
  const std::vector<StateT>& states() const { return states_; }
  const StateT& operator[](std::size_t k) const { return states_[k]; }

 private:
  std::vector<StateT> states_;
};

using PureTuple = StateTuple<PureState>;
using MixedTuple = StateTuple<DensityMatrix>;

/// Haar-random pure state: normalized i.i.d. complex Gaussian vector.
PureState haar_random_pure(int d, std::uint64_t seed, std::uint64_t index = 0);
PureState haar_random_pure(int d, std::mt19937_64& gen);

/// Hilbert-Schmidt random density matrix: G G^dag / Tr(G G^dag) with Ginibre G.
DensityMatrix ginibre_density(int d, std::uint64_t seed, std::uint64_t index = 0);
DensityMatrix ginibre_density(int d, std::mt19937_64& gen);

/// Haar-random unitary via QR of a Ginibre matrix with phase correction.
Eigen::MatrixXcd haar_random_unitary(int d, std::mt19937_64& gen);

/// <a|b>
Complex overlap(const PureState& a, const PureState& b);

/// |a><a|
DensityMatrix projector(const PureState& a);

}  // namespace bargmann
