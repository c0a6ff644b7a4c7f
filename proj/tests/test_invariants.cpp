#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bargmann/boundary.hpp"
#include "bargmann/invariants.hpp"
#include "bargmann/rng.hpp"
#include "bargmann/states.hpp"

using namespace bargmann;
constexpr double kPi = std::numbers::pi;

namespace {

std::vector<PureState> random_tuple(int n, int d, std::uint64_t seed) {
  auto gen = engine_for(seed);
  std::vector<PureState> states;
  for (int k = 0; k < n; ++k) states.push_back(haar_random_pure(d, gen));
  return states;
}

}  // namespace

TEST_CASE("trace and pure routes agree on projectors") {
  for (int n = 2; n <= 8; ++n)
    for (int d = 2; d <= 4; ++d) {
      auto states = random_tuple(n, d, 100 * n + d);
      std::vector<DensityMatrix> projs;
      for (const auto& s : states) projs.push_back(projector(s));
      Complex zp = delta_pure(PureTuple(states)).value;
      Complex zt = delta_trace(MixedTuple(projs)).value;
      CHECK(std::abs(zp - zt) < 1e-13);
    }
}

TEST_CASE("bloch accumulator worked examples") {
  BlochAccumulator acc{1.0, Eigen::Vector3cd(1.0, 0.0, 0.0)};
  SUBCASE("aligned vector doubles the scalar part") {
    auto next = bloch_accumulate(acc, BlochVector(1, 0, 0));
    CHECK(std::abs(next.p0 - 2.0) < 1e-15);
    CHECK((next.p - Eigen::Vector3cd(2.0, 0.0, 0.0)).norm() < 1e-15);
  }
  SUBCASE("orthogonal vector produces the imaginary cross term") {
    auto next = bloch_accumulate(acc, BlochVector(0, 1, 0));
    CHECK(std::abs(next.p0 - 1.0) < 1e-15);
    CHECK((next.p - Eigen::Vector3cd(1.0, 1.0, Complex(0.0, 1.0))).norm() < 1e-15);
  }
  SUBCASE("antipodal vector annihilates") {
    auto next = bloch_accumulate(acc, BlochVector(-1, 0, 0));
    CHECK(std::abs(next.p0) < 1e-15);
    CHECK(next.p.norm() < 1e-15);
  }
}

TEST_CASE("qubit bloch route matches the trace route") {
  for (int n : {3, 4, 5, 6}) {
    auto gen = engine_for(200 + n);
    std::vector<BlochVector> rs;
    std::vector<DensityMatrix> projs;
    for (int k = 0; k < n; ++k) {
      BlochVector r = bloch_vector(haar_random_pure(2, gen));
      r.normalize();
      rs.push_back(r);
      projs.push_back(density_from_bloch(r));
    }
    Complex zb = delta_qubit_bloch(rs).value;
    Complex zt = delta_trace(MixedTuple(projs)).value;
    CHECK(std::abs(zb - zt) < 1e-12);
  }
  CHECK_THROWS_AS(delta_qubit_bloch({BlochVector(0.5, 0, 0), BlochVector(1, 0, 0),
                                     BlochVector(0, 1, 0)}),
                  std::invalid_argument);
}

TEST_CASE("closed forms for n = 3, 4, 5 match the trace route") {
  for (int n : {3, 4, 5})
    for (int rep = 0; rep < 20; ++rep) {
      auto gen = engine_for(300 + n, rep);
      std::vector<BlochVector> rs;
      std::vector<DensityMatrix> projs;
      for (int k = 0; k < n; ++k) {
        BlochVector r = bloch_vector(haar_random_pure(2, gen));
        r.normalize();
        rs.push_back(r);
        projs.push_back(density_from_bloch(r));
      }
      auto [x, y] = closed_form_xy(n, rs);
      Complex zt = delta_trace(MixedTuple(projs)).value;
      CHECK(std::abs(Complex(x, y) - zt) < 1e-12);
    }
}

TEST_CASE("orthonormal-axis triple gives Delta_3 = (1+i)/4") {
  std::vector<BlochVector> axes = {BlochVector(1, 0, 0), BlochVector(0, 1, 0),
                                   BlochVector(0, 0, 1)};
  auto [x, y] = closed_form_xy(3, axes);
  CHECK(std::abs(x - 0.25) < 1e-15);
  CHECK(std::abs(y - 0.25) < 1e-15);
  CHECK(std::abs(delta_qubit_bloch(axes).value - Complex(0.25, 0.25)) < 1e-15);
}

TEST_CASE("extremal tuple values on the negative real axis") {
  // t = pi/4 puts the invariant at theta = pi: Delta_n = ((1 + w)/2)^n
  Complex d3 = delta_pure(extremal_tuple(3, kPi / 4.0)).value;
  CHECK(std::abs(d3 - Complex(-0.125, 0.0)) < 1e-14);
  Complex d4 = delta_pure(extremal_tuple(4, kPi / 4.0)).value;
  CHECK(std::abs(d4 - Complex(-0.25, 0.0)) < 1e-14);
}

TEST_CASE("cyclic, conjugation, and unitary invariance") {
  auto states = random_tuple(5, 3, 77);
  Complex base = delta_pure(PureTuple(states)).value;

  std::vector<PureState> rotated(states.begin() + 1, states.end());
  rotated.push_back(states.front());
  CHECK(std::abs(delta_pure(PureTuple(rotated)).value - base) < 1e-14);

  std::vector<PureState> reversed(states.rbegin(), states.rend());
  CHECK(std::abs(delta_pure(PureTuple(reversed)).value - std::conj(base)) < 1e-14);

  auto gen = engine_for(78);
  Eigen::MatrixXcd u = haar_random_unitary(3, gen);
  std::vector<PureState> moved;
  for (const auto& s : states) moved.emplace_back(PureState(u * s.amplitudes()));
  CHECK(std::abs(delta_pure(PureTuple(moved)).value - base) < 1e-13);
}

TEST_CASE("bloch helpers round-trip") {
  auto gen = engine_for(55);
  PureState psi = haar_random_pure(2, gen);
  BlochVector r = bloch_vector(psi);
  CHECK(std::abs(r.norm() - 1.0) < 1e-13);
  PureState back = state_from_bloch(r);
  // states match up to global phase
  CHECK(std::abs(std::abs(overlap(psi, back)) - 1.0) < 1e-12);
  CHECK((density_from_bloch(r).entries() - projector(psi).entries()).norm() < 1e-13);
}
