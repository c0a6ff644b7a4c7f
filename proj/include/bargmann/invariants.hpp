#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "bargmann/states.hpp"

namespace bargmann {

using BlochVector = Eigen::Vector3d;

/// Order-n Bargmann invariant, a complex number of modulus <= 1.
struct InvariantValue {
  int order;
  Complex value;
};

/// Running state of the qubit product recursion: rho_1...rho_k written as
/// 2^{-k} (p0 * I + p . sigma), with p complex once cross terms kick in.
struct BlochAccumulator {
  Complex p0;
  Eigen::Vector3cd p;
};

/// Tr(rho_1 ... rho_n)
InvariantValue delta_trace(const MixedTuple& tuple);

/// <psi_1|psi_2> <psi_2|psi_3> ... <psi_n|psi_1>
InvariantValue delta_pure(const PureTuple& tuple);

/// One step of the product recursion:
///   p0' = p0 + <p, r>          (bilinear, r real)
///   p'  = p0 r + p + i (p x r)
BlochAccumulator bloch_accumulate(const BlochAccumulator& acc, const BlochVector& r);

/// Delta_n = 2^{1-n} p0^{(n)} for unit Bloch vectors (pure qubits only).
InvariantValue delta_qubit_bloch(const std::vector<BlochVector>& rs);

/// Explicit (x, y) expressions for n in {3,4,5} in terms of the Bloch dot
/// and triple products; matches delta_qubit_bloch.
std::pair<double, double> closed_form_xy(int n, const std::vector<BlochVector>& rs);

/// Bloch vector of a qubit pure state; requires dim == 2.
BlochVector bloch_vector(const PureState& a);

/// Qubit pure state with the given unit Bloch vector.
PureState state_from_bloch(const BlochVector& r);

/// Qubit density matrix (1/2)(I + r.sigma); requires |r| <= 1.
DensityMatrix density_from_bloch(const BlochVector& r);

}  // namespace bargmann
