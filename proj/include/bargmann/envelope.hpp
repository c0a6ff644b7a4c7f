#pragma once

#include <vector>

#include "bargmann/boundary.hpp"

namespace bargmann {

/// The three curve families eliminated in the boundary derivation:
///   N3      F(r,theta,t)       = r (1 - t cos theta) - t (1 - t^2)/2
///   N4Inner F~(r,theta,alpha)  = (1 - t cos a)(1 - t cos(a - theta)) r - (1-t^2)^2/4
///           (parameter alpha at fixed ellipse parameter t)
///   N4Outer G(r,theta,t)       = (1 - t cos(theta/2)) sqrt(r) - (1 - t^2)/2
enum class FamilyId { N3, N4Inner, N4Outer };

struct CurveFamily {
  FamilyId id;
  double fixed_t;     // N4Inner only
  double param_min;
  double param_max;
};

CurveFamily make_family_n3();
CurveFamily make_family_n4_inner(double t);
CurveFamily make_family_n4_outer();

struct FamilyEval {
  double F;
  double dF_dparam;
};

/// Family function and its analytic parameter derivative at (r, theta, param).
FamilyEval family_eval(const CurveFamily& family, double r, double theta, double param);

/// Radius solving F(r, theta, param) = 0 for a fixed family member.
double family_radius(const CurveFamily& family, double theta, double param);

struct EnvelopeResult {
  PolarCurve curve;
  std::vector<double> failed_thetas;  // grid points with no stationary parameter
};

/// Numeric envelope: per theta, enumerate roots of dF/dparam = 0 along the
/// family (256 scan brackets + bisection to 1e-12), solve F = 0 for r, and
/// keep the largest candidate radius in (0, 1].
EnvelopeResult envelope_numeric(const CurveFamily& family,
                                const std::vector<double>& theta_grid);

}  // namespace bargmann
