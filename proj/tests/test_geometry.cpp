#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bargmann/geometry.hpp"
#include "bargmann/invariants.hpp"
#include "bargmann/rng.hpp"
#include "bargmann/states.hpp"

using namespace bargmann;
constexpr double kPi = std::numbers::pi;

TEST_CASE("rank-one numerical range parameters") {
  Eigen::VectorXcd u(2), v(2);
  u << 1.0, 0.0;
  v << 0.5, Complex(0.0, 0.5);
  EllipticalDisk disk = rank_one_nr_params(u, v);
  CHECK(std::abs(disk.c - Complex(0.5, 0.0)) < 1e-15);
  CHECK(std::abs(disk.s - std::sqrt(0.5)) < 1e-15);
}

TEST_CASE("disk from a tuple contains every completion of the chain") {
  // fixing the first n-1 states, Delta_n over all last states fills an
  // elliptical disk; membership must hold for random completions
  for (int n : {3, 4, 5}) {
    auto gen = engine_for(500 + n);
    std::vector<PureState> head;
    for (int k = 0; k + 1 < n; ++k) head.push_back(haar_random_pure(3, gen));
    EllipticalDisk disk = disk_from_tuple(head);
    for (int rep = 0; rep < 200; ++rep) {
      auto tuple = head;
      tuple.push_back(haar_random_pure(3, gen));
      Complex z = delta_pure(PureTuple(tuple)).value;
      CHECK(disk_contains(disk, z, 1e-12));
    }
  }
}

TEST_CASE("ellipse polar boundary satisfies the two-focus identity") {
  EllipticalDisk disk{Complex(0.3, 0.2), 0.9};
  for (int k = 0; k < 32; ++k) {
    double th = 2.0 * kPi * k / 32;
    double r = ellipse_polar(disk, th);
    Complex z = std::polar(r, th);
    CHECK(std::abs(std::abs(z) + std::abs(z - disk.c) - disk.s) < 1e-12);
  }
  CHECK_THROWS_AS(ellipse_polar(EllipticalDisk{Complex(1.0, 0.0), 0.5}, 0.0),
                  std::invalid_argument);
}

TEST_CASE("sampled numerical range stays inside the predicted disk") {
  auto gen = engine_for(91);
  std::vector<PureState> head = {haar_random_pure(4, gen), haar_random_pure(4, gen),
                                 haar_random_pure(4, gen)};
  EllipticalDisk disk = disk_from_tuple(head);
  // directional support: sampled max over completions approaches the disk
  // radius along several directions, so the disk is tight, not just valid
  double worst_gap = 0.0;
  for (int dir = 0; dir < 8; ++dir) {
    double phi = 2.0 * kPi * dir / 8;
    Complex e = std::polar(1.0, phi);
    double sampled = -1e9;
    for (int rep = 0; rep < 20000; ++rep) {
      auto tuple = head;
      tuple.push_back(haar_random_pure(4, gen));
      Complex z = delta_pure(PureTuple(tuple)).value;
      sampled = std::max(sampled, (z * std::conj(e)).real());
    }
    double ce = (disk.c * std::conj(e)).real();
    double support =
        ce / 2.0 + 0.5 * std::sqrt(ce * ce + disk.s * disk.s - std::norm(disk.c));
    worst_gap = std::max(worst_gap, support - sampled);
    CHECK(sampled <= support + 1e-12);
  }
  CHECK(worst_gap < 5e-3);
}

TEST_CASE("minkowski sampling reproduces products of members") {
  PlanarSample a{{Complex(0.5, 0.0)}, "a"};
  PlanarSample b{{Complex(0.0, 2.0)}, "b"};
  PlanarSample prod = minkowski_sample({a, b}, 5, 0);
  REQUIRE(prod.points.size() == 5);
  for (Complex z : prod.points) CHECK(std::abs(z - Complex(0.0, 1.0)) < 1e-15);
}

TEST_CASE("minkowski square boundary against brute force") {
  // E_t^2 with E_t = {|z| + |z - t| <= 1}: compare the closed form with a
  // dense directional-support sweep over boundary pairs
  for (double t : {0.2, 0.5, 0.8}) {
    EllipticalDisk disk{Complex(t, 0.0), 1.0};
    const int m = 2000;
    std::vector<Complex> ring;
    for (int k = 0; k < m; ++k) {
      double th = 2.0 * kPi * k / m;
      ring.push_back(std::polar(ellipse_polar(disk, th), th));
    }
    for (double theta : {0.3, kPi / 2, kPi, 4.0, 2.0 * kPi - 0.3}) {
      // max r such that r e^{i theta} = z1 z2 with z1, z2 in E_t
      double best = 0.0;
      for (Complex z1 : ring) {
        // choose z2 on the boundary with the complementary phase
        double phi = theta - std::arg(z1);
        best = std::max(best, std::abs(z1) * ellipse_polar(disk, phi));
      }
      CHECK(std::abs(best - minkowski_square_boundary(t, theta)) < 2e-5);
    }
  }
}

TEST_CASE("minkowski square boundary closed-form spot values") {
  // t = 0: circle of radius 1/2, squared set is the disk of radius 1/4
  for (double th : {0.1, 2.0, 5.0}) {
    CHECK(std::abs(minkowski_square_boundary(0.0, th) - 0.25) < 1e-15);
  }
  // theta -> 0 along the real axis: ((1 - t^2)^2) / (4 (1 - t)^2) = (1+t)^2/4
  CHECK(std::abs(minkowski_square_boundary(0.5, 1e-12) - 0.5625) < 1e-9);
  // theta = pi with t >= cos(pi/2) = 0: inner branch (1 - t^2)/4
  CHECK(std::abs(minkowski_square_boundary(0.5, kPi) - 0.1875) < 1e-15);
}
