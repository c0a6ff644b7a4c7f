#include "bargmann/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bargmann {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kParamEdge = 1e-9;
constexpr int kScanBrackets = 256;
constexpr double kBisectTol = 1e-12;

}  // namespace

CurveFamily make_family_n3() {
  return {FamilyId::N3, 0.0, 0.0, 1.0 - kParamEdge};
}

CurveFamily make_family_n4_inner(double t) {
  if (t <= 0.0 || t >= 1.0)
    throw std::invalid_argument("make_family_n4_inner: t must lie in (0,1)");
  return {FamilyId::N4Inner, t, 0.0, 2.0 * kPi};
}

CurveFamily make_family_n4_outer() {
  // t = 0 is the degenerate circle member; its stationary point carries the
  // envelope at theta = pi
  return {FamilyId::N4Outer, 0.0, 0.0, 1.0 - kParamEdge};
}

FamilyEval family_eval(const CurveFamily& family, double r, double theta, double param) {
  switch (family.id) {
    case FamilyId::N3: {
      double t = param;
      double F = r * (1.0 - t * std::cos(theta)) - t * (1.0 - t * t) / 2.0;
      double dF = 0.5 * (3.0 * t * t - 2.0 * r * std::cos(theta) - 1.0);
      return {F, dF};
    }
    case FamilyId::N4Inner: {
      double t = family.fixed_t;
      double a = param;
      double F = (1.0 - t * std::cos(a)) * (1.0 - t * std::cos(a - theta)) * r -
                 (1.0 - t * t) * (1.0 - t * t) / 4.0;
      double dF =
          r * t * (std::sin(a - theta) + std::sin(a) - t * std::sin(2.0 * a - theta));
      return {F, dF};
    }
    case FamilyId::N4Outer: {
      double t = param;
      double sr = std::sqrt(r);
      double F = (1.0 - t * std::cos(theta / 2.0)) * sr - (1.0 - t * t) / 2.0;
      double dF = t - sr * std::cos(theta / 2.0);
      return {F, dF};
    }
  }
  throw std::invalid_argument("family_eval: unknown family id");
}

double family_radius(const CurveFamily& family, double theta, double param) {
  switch (family.id) {
    case FamilyId::N3: {
      double t = param;
      return t * (1.0 - t * t) / (2.0 * (1.0 - t * std::cos(theta)));
    }
    case FamilyId::N4Inner: {
      double t = family.fixed_t;
      double a = param;
      return (1.0 - t * t) * (1.0 - t * t) /
             (4.0 * (1.0 - t * std::cos(a)) * (1.0 - t * std::cos(a - theta)));
    }
    case FamilyId::N4Outer: {
      double t = param;
      double sr = (1.0 - t * t) / (2.0 * (1.0 - t * std::cos(theta / 2.0)));
      return sr * sr;
    }
  }
  throw std::invalid_argument("family_radius: unknown family id");
}

namespace {

double stationarity(const CurveFamily& family, double theta, double param) {
  return family_eval(family, family_radius(family, theta, param), theta, param).dF_dparam;
}

}  // namespace

EnvelopeResult envelope_numeric(const CurveFamily& family,
                                const std::vector<double>& theta_grid) {
  EnvelopeResult result;
  for (double theta : theta_grid) {
    // enumerate stationary parameters, then keep the branch that bounds the union
    std::vector<double> roots;
    double prev_p = family.param_min;
    double prev_g = stationarity(family, theta, prev_p);
    for (int k = 1; k <= kScanBrackets; ++k) {
      double p = family.param_min +
                 (family.param_max - family.param_min) * k / kScanBrackets;
      double g = stationarity(family, theta, p);
      if (prev_g == 0.0) {
        roots.push_back(prev_p);
      } else if (g != 0.0 && std::signbit(g) != std::signbit(prev_g)) {
        double lo = prev_p, hi = p, glo = prev_g;
        while (hi - lo > kBisectTol) {
          double mid = 0.5 * (lo + hi);
          double gm = stationarity(family, theta, mid);
          if (gm == 0.0) {
            lo = hi = mid;
            break;
          }
          if (std::signbit(gm) == std::signbit(glo)) {
            lo = mid;
            glo = gm;
          } else {
            hi = mid;
          }
        }
        roots.push_back(0.5 * (lo + hi));
      }
      prev_p = p;
      prev_g = g;
    }
    if (prev_g == 0.0) roots.push_back(prev_p);
    double best_r = -1.0;
    for (double p : roots) {
      double r = family_radius(family, theta, p);
      if (r > 0.0 && r <= 1.0 + 1e-12) best_r = std::max(best_r, r);
    }
    if (best_r < 0.0)
      result.failed_thetas.push_back(theta);
    else
      result.curve.samples.emplace_back(theta, best_r);
  }
  return result;
}

}  // namespace bargmann
