#include "bargmann/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "bargmann/boundary.hpp"
#include "bargmann/rng.hpp"

namespace bargmann {

namespace {

constexpr double kPi = std::numbers::pi;

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body) {
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers <= 1 || count < 2048) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::size_t lo = static_cast<std::size_t>(w) * chunk;
    std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

double cross2(const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

double polygon_area(const std::vector<Eigen::Vector2d>& poly) {
  double twice = 0.0;
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % m];
    twice += p.x() * q.y() - p.y() * q.x();
  }
  return 0.5 * twice;
}

// clip a convex ccw polygon by the half-plane left of edge (a, b)
std::vector<Eigen::Vector2d> clip_halfplane(const std::vector<Eigen::Vector2d>& poly,
                                            const Eigen::Vector2d& a,
                                            const Eigen::Vector2d& b) {
  std::vector<Eigen::Vector2d> out;
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Eigen::Vector2d& p = poly[i];
    const Eigen::Vector2d& q = poly[(i + 1) % m];
    double sp = cross2(a, b, p);
    double sq = cross2(a, b, q);
    if (sp >= 0.0) out.push_back(p);
    if ((sp > 0.0 && sq < 0.0) || (sp < 0.0 && sq > 0.0)) {
      double t = sp / (sp - sq);
      out.push_back(p + t * (q - p));
    }
  }
  return out;
}

}  // namespace

PlanarSample sample_cloud(int n, int d, std::size_t count, std::uint64_t seed,
                          CloudKind kind, int workers) {
  if (n < 2) throw std::invalid_argument("sample_cloud: order must be >= 2");
  if (d < 2) throw std::invalid_argument("sample_cloud: dimension must be >= 2");
  if (count < 1) throw std::invalid_argument("sample_cloud: count must be >= 1");
  PlanarSample out;
  out.provenance = kind == CloudKind::Pure ? "haar_pure_cloud" : "ginibre_mixed_cloud";
  out.points.resize(count);
  parallel_for(count, workers, [&](std::size_t i) {
    auto gen = engine_for(seed, i);
    if (kind == CloudKind::Pure) {
      std::vector<PureState> states;
      states.reserve(n);
      for (int k = 0; k < n; ++k) states.push_back(haar_random_pure(d, gen));
      out.points[i] = delta_pure(PureTuple(std::move(states))).value;
    } else {
      std::vector<DensityMatrix> states;
      states.reserve(n);
      for (int k = 0; k < n; ++k) states.push_back(ginibre_density(d, gen));
      out.points[i] = delta_trace(MixedTuple(std::move(states))).value;
    }
  });
  return out;
}

CloudStats containment_report(const PlanarSample& cloud, int n, double tol) {
  CloudStats stats{n, 0, cloud.points.size(), 0, -std::numeric_limits<double>::infinity(), 0};
  for (Complex z : cloud.points) {
    double violation = std::abs(z) - boundary_radius(n, arg_2pi(z));
    stats.worst_violation = std::max(stats.worst_violation, violation);
    if (violation <= tol) ++stats.inside;
  }
  return stats;
}

Hull convex_hull(std::vector<Eigen::Vector2d> points) {
  if (points.empty()) throw std::invalid_argument("convex_hull: no points");
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  points.erase(std::unique(points.begin(), points.end(),
                           [](const auto& a, const auto& b) { return a == b; }),
               points.end());
  const std::size_t m = points.size();
  if (m <= 2) return Hull{points};
  std::vector<Eigen::Vector2d> h(2 * m);
  std::size_t k = 0;
  for (std::size_t i = 0; i < m; ++i) {  // lower
    while (k >= 2 && cross2(h[k - 2], h[k - 1], points[i]) <= 0.0) --k;
    h[k++] = points[i];
  }
  for (std::size_t i = m - 1, lower = k + 1; i-- > 0;) {  // upper
    while (k >= lower && cross2(h[k - 2], h[k - 1], points[i]) <= 0.0) --k;
    h[k++] = points[i];
  }
  h.resize(k - 1);
  return Hull{std::move(h)};
}

Hull hull_of_samples(const PlanarSample& cloud) {
  std::vector<Eigen::Vector2d> pts;
  pts.reserve(cloud.points.size());
  for (Complex z : cloud.points) pts.emplace_back(z.real(), z.imag());
  return convex_hull(std::move(pts));
}

double hull_area(const Hull& hull) {
  if (hull.vertices.size() < 3) return 0.0;
  return polygon_area(hull.vertices);
}

double hull_compare(const Hull& a, const Hull& b) {
  if (hull_area(a) <= 0.0 || hull_area(b) <= 0.0)
    throw std::invalid_argument("hull_compare: degenerate hull");
  std::vector<Eigen::Vector2d> inter = a.vertices;
  const std::size_t mb = b.vertices.size();
  for (std::size_t i = 0; i < mb && !inter.empty(); ++i)
    inter = clip_halfplane(inter, b.vertices[i], b.vertices[(i + 1) % mb]);
  double ai = inter.size() >= 3 ? polygon_area(inter) : 0.0;
  double aa = hull_area(a);
  double ab = hull_area(b);
  double uni = aa + ab - ai;
  return (aa + ab - 2.0 * ai) / uni;
}

bool hull_contains(const Hull& hull, const Eigen::Vector2d& z, double tol) {
  const std::size_t m = hull.vertices.size();
  if (m < 3) throw std::invalid_argument("hull_contains: degenerate hull");
  for (std::size_t i = 0; i < m; ++i) {
    const Eigen::Vector2d& p = hull.vertices[i];
    const Eigen::Vector2d& q = hull.vertices[(i + 1) % m];
    if (cross2(p, q, z) < -tol * (q - p).norm()) return false;
  }
  return true;
}

double det3(const BlochVector& r1, const BlochVector& r2, const BlochVector& r3) {
  Eigen::Matrix3d m;
  m.col(0) = r1;
  m.col(1) = r2;
  m.col(2) = r3;
  return m.determinant();
}

double det_quad(const BlochVector& r1, const BlochVector& r2, const BlochVector& r3,
                const BlochVector& r4) {
  for (const auto* r : {&r1, &r2, &r3, &r4})
    if (std::abs(r->norm() - 1.0) > 1e-10)
      throw std::invalid_argument("det_quad: non-unit vector");
  return det3(r1 + r2, r2 + r3, r3 + r4);
}

namespace {

BlochVector vector_from_angles(double polar, double azimuth) {
  return BlochVector(std::sin(polar) * std::cos(azimuth),
                     std::sin(polar) * std::sin(azimuth), std::cos(polar));
}

double im_delta(const std::vector<double>& angles, int n) {
  std::vector<BlochVector> rs;
  rs.reserve(n);
  for (int k = 0; k < n; ++k) rs.push_back(vector_from_angles(angles[2 * k], angles[2 * k + 1]));
  return delta_qubit_bloch(rs).value.imag();
}

}  // namespace

SearchResult max_im_search(int n, int restarts, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("max_im_search: order must be >= 3");
  SearchResult best{-std::numeric_limits<double>::infinity(), {}};
  for (int r = 0; r < restarts; ++r) {
    auto gen = engine_for(seed, r);
    std::uniform_real_distribution<double> upolar(0.0, kPi);
    std::uniform_real_distribution<double> uazim(0.0, 2.0 * kPi);
    std::vector<double> angles(2 * n);
    for (int k = 0; k < n; ++k) {
      angles[2 * k] = upolar(gen);
      angles[2 * k + 1] = uazim(gen);
    }
    double value = im_delta(angles, n);
    double step = 0.5;
    while (step > 1e-7) {
      bool improved = false;
      for (std::size_t c = 0; c < angles.size(); ++c) {
        for (double sgn : {1.0, -1.0}) {
          double saved = angles[c];
          angles[c] = saved + sgn * step;
          double trial = im_delta(angles, n);
          if (trial > value) {
            value = trial;
            improved = true;
            break;
          }
          angles[c] = saved;
        }
      }
      if (!improved) step *= 0.5;
    }
    if (value > best.best_im) {
      best.best_im = value;
      best.argmax.clear();
      for (int k = 0; k < n; ++k)
        best.argmax.push_back(vector_from_angles(angles[2 * k], angles[2 * k + 1]));
    }
  }
  return best;
}

ConcavityReport concavity_check(int n, int grid) {
  if (grid < 8) throw std::invalid_argument("concavity_check: grid must be >= 8");
  auto xf = [n](double th) { return boundary_radius(n, th) * std::cos(th); };
  auto yf = [n](double th) { return boundary_radius(n, th) * std::sin(th); };
  const double h = 1e-5;
  ConcavityReport report{true, -std::numeric_limits<double>::infinity(), true};
  for (int i = 1; i <= grid; ++i) {
    double th = kPi * i / (grid + 1);
    double xp = (xf(th + h) - xf(th - h)) / (2.0 * h);
    double yp = (yf(th + h) - yf(th - h)) / (2.0 * h);
    double xpp = (xf(th + h) - 2.0 * xf(th) + xf(th - h)) / (h * h);
    double ypp = (yf(th + h) - 2.0 * yf(th) + yf(th - h)) / (h * h);
    double d2 = (ypp * xp - yp * xpp) / (xp * xp * xp);
    report.worst_second_derivative = std::max(report.worst_second_derivative, d2);
    if (d2 >= 0.0) report.all_negative = false;
    if (n >= 4) {
      double analytic = -(static_cast<double>(n - 1) / n) *
                        std::pow(1.0 / std::cos(kPi / n), n) *
                        std::pow(std::cos((th - kPi) / n), n + 1) /
                        std::pow(std::sin((kPi + (n - 1) * th) / n), 3);
      if (std::signbit(analytic) != std::signbit(d2)) report.analytic_sign_agrees = false;
    }
  }
  return report;
}

}  // namespace bargmann
