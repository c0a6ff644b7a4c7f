#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "bargmann/geometry.hpp"
#include "bargmann/invariants.hpp"

namespace bargmann {

enum class CloudKind { Pure, Mixed };

/// Containment statistics of a sampled invariant cloud against R_n.
struct CloudStats {
  int n;
  int d;
  std::size_t count;
  std::size_t inside;
  double worst_violation;  // max over samples of |z| - r_n(arg z)
  std::uint64_t seed;
};

/// count Bargmann invariants of Haar (pure) or Hilbert-Schmidt (mixed)
/// random n-tuples at dimension d. Trial i draws from a generator seeded by
/// (seed, i), so the result is a fixed multiset for any worker count.
PlanarSample sample_cloud(int n, int d, std::size_t count, std::uint64_t seed,
                          CloudKind kind, int workers = 0);

CloudStats containment_report(const PlanarSample& cloud, int n, double tol);

/// Convex polygon, counterclockwise, no duplicate or collinear vertices.
struct Hull {
  std::vector<Eigen::Vector2d> vertices;
};

Hull convex_hull(std::vector<Eigen::Vector2d> points);
Hull hull_of_samples(const PlanarSample& cloud);
double hull_area(const Hull& hull);

/// Symmetric-difference area over union area; 0 for identical regions.
double hull_compare(const Hull& a, const Hull& b);

/// true iff z is inside (or within tol of) the hull
bool hull_contains(const Hull& hull, const Eigen::Vector2d& z, double tol);

/// det of the 3x3 column matrix (r1 r2 r3)
double det3(const BlochVector& r1, const BlochVector& r2, const BlochVector& r3);

/// det(r1+r2, r2+r3, r3+r4) for unit vectors; bounded by 16/(3 sqrt 3)
double det_quad(const BlochVector& r1, const BlochVector& r2, const BlochVector& r3,
                const BlochVector& r4);

struct SearchResult {
  double best_im;
  std::vector<BlochVector> argmax;
};

/// Multi-restart coordinate descent over qubit Bloch angles maximizing
/// Im Delta_n; deterministic in seed.
SearchResult max_im_search(int n, int restarts, std::uint64_t seed);

struct ConcavityReport {
  bool all_negative;
  double worst_second_derivative;  // max over grid (want < 0)
  bool analytic_sign_agrees;       // vs the closed-form d2y/dx2, n >= 4 only
};

/// Finite-difference d2y/dx2 of the parametric boundary on (0, pi).
ConcavityReport concavity_check(int n, int grid);

}  // namespace bargmann
