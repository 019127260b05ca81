#pragma once

#include <string>
#include <utility>

// The four sharp gradient-bound functions for positive harmonic (or
// conformal-Laplacian) functions on geodesic balls, the Harnack envelopes
// they integrate to, and the barrier functions and constants used to prove
// them.

namespace cygrad {

enum class BoundKind { EuclidBall, ConformalSpaceForm, Surface2D, ManifoldND };

std::string to_string(BoundKind kind);
BoundKind bound_kind_from_string(const std::string& s);

// (n-1)/(R-s) + 1/(R+s) on the flat ball; s is the Euclidean norm |x|.
double bound_euclid(int n, double R, double s);

// cs(R/2)/cs(r/2) * ((n-1)/(2 sn((R-r)/2)) + 1/(2 sn((R+r)/2))), the bound
// on |grad ln(cs^{n-2}(r/2) u)| for positive solutions of the conformal
// Laplacian equation on the curvature-K space form.
double bound_conformal(int n, double K, double R, double r);

// sn(R)/(2 sn((R+r)/2) sn((R-r)/2)): surfaces with Gaussian curvature >= K.
double bound_2d(double K, double R, double r);

// (2n-3) * bound_2d: manifolds with Ricci >= (n-1)K, n >= 3 (n = 2 allowed,
// reproduces bound_2d).
double bound_manifold(int n, double K, double R, double r);

// Dispatch on BoundKind; for EuclidBall the radius argument is |x| = r.
double bound_value(BoundKind kind, int n, double K, double R, double r);

// Two-sided Harnack factors: u(x)/u(p) lies in [lower, upper] with
// lower = rho^{2n-3}, upper = rho^{-(2n-3)}, rho = sn((R-r)/2)/sn((R+r)/2).
std::pair<double, double> harnack_envelope(int n, double K, double R, double r);

// Constants from the n >= 3 barrier argument.
struct BarrierParams {
  int n;
  double nu;
  double q_nu;     // (n-2)^2/(2(n-1)nu) - n/(2(n-1))
  double C2;       // ((n-2)^2 + (2n-3)nu)/((1-nu)nu)
};

BarrierParams barrier_constants(int n, double nu);

// Minimizer of C2(nu) over (0,1): ((n-2)/(2n-3), (2n-3)^2).
std::pair<double, double> optimal_nu(int n);

// Residual of the equality chain for the 2-D barrier F(r): the diffused
// barrier (F' sn)'/sn minus 2 e^F + 2K. Vanishes identically.
double barrier_residual_2d(double K, double R, double r);

// Slack of the inequality step bounding the intermediate three-term
// expression for Delta(F^{2(q+1)}-type barrier) by its target right-hand
// side. Nonnegative on the valid domain.
double barrier_chain_slack(int n, double nu, double K, double R, double r);

}  // namespace cygrad
