#pragma once

#include <span>
#include <string>
#include <vector>

// Curvature-parameterized special functions and model charts for the three
// space forms: Euclidean space, the sphere minus the antipode in its
// stereographic chart, and hyperbolic space in the Poincare ball chart.

namespace cygrad {

enum class ChartKind { Euclidean, SphereStereo, PoincareBall };

std::string to_string(ChartKind kind);

// A model geometry of constant curvature K in a fixed conformally flat chart.
// Sign conventions: SphereStereo needs K > 0, PoincareBall K < 0, Euclidean
// K == 0. The chart metric is g = lambda(y)^2 * flat with
// lambda = 2/(1 + K*|y|^2) for the curved charts and lambda = 1 for flat.
struct CurvedChart {
  ChartKind kind;
  double K;
  int n;

  static CurvedChart euclidean(int n);
  static CurvedChart sphere(double K, int n);    // K > 0
  static CurvedChart poincare(double K, int n);  // K < 0
  static CurvedChart for_curvature(double K, int n);

  // Chart domain is all of R^n except for the Poincare ball, where it is the
  // open ball of radius 1/sqrt(-K).
  double chart_limit() const;
  bool contains(std::span<const double> y) const;
};

// Geodesic ball centered at the chart origin.
struct GeodesicBall {
  double R;
  CurvedChart chart;

  GeodesicBall(double R, CurvedChart chart);
};

// sn_K: solution of f'' + K f = 0 with f(0)=0, f'(0)=1. Total function.
double sn(double K, double r);

// cs_K = sn_K'.
double cs(double K, double r);

// Euclidean chart norm of the point at geodesic distance r from the origin:
// sn_K(r/2)/cs_K(r/2) for K != 0 (tan(r/2), tanh(r/2) at K = +-1), r itself
// for the flat identity chart.
double chart_radius(double K, double r);

// Inverse of chart_radius in r.
double geodesic_radius(double K, double rho);

// lambda(y) with g = lambda^2 * flat chart metric.
double conformal_factor(const CurvedChart& chart, std::span<const double> y);

// Curved-metric gradient norm from the flat-chart one: |grad f|_g = flat/lambda.
double grad_norm_convert(const CurvedChart& chart, std::span<const double> y,
                         double flat_grad_norm);

// (n-1) cs_K(r)/sn_K(r), the model value bounding the Laplacian of the
// distance function.
double laplacian_comparison(int n, double K, double r);

}  // namespace cygrad
