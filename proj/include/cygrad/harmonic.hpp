#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cygrad/spaceform.hpp"

// Exact positive harmonic functions on Euclidean balls (Poisson kernels and
// finite positive mixtures of them) and their conformal transports to the
// space forms, where they solve the conformal Laplacian equation with
// closed-form log-gradients.

namespace cygrad {

// Volume of the unit n-ball.
double omega_n(int n);

struct PoissonKernelSpec {
  int n;
  double R;
  std::vector<double> pole;  // on the boundary sphere, |pole| = R

  PoissonKernelSpec(int n, double R, std::vector<double> pole);
};

// P(x,y) = (R^2 - |x|^2) / (n omega_n R |y - x|^n) for |x| < R.
double poisson_eval(const PoissonKernelSpec& spec, std::span<const double> x);

struct MixtureTerm {
  double lambda;             // > 0
  std::vector<double> pole;  // boundary point
};

struct PoissonMixture {
  int n;
  double R;
  std::vector<MixtureTerm> terms;

  PoissonMixture(int n, double R, std::vector<MixtureTerm> terms);

  // {n, R, terms: [{lambda, pole: [...]}]}; poles are directions, scaled to
  // radius R internally.
  static PoissonMixture from_json_text(const std::string& text);
  static PoissonMixture from_json_file(const std::string& path);
};

struct EvalGrad {
  double value;
  std::vector<double> grad_log;  // gradient of ln u
};

EvalGrad mixture_eval_grad(const PoissonMixture& mix, std::span<const double> x);

// A Poisson mixture on the chart ball B(chart_radius(K, R)) transported to
// the curvature-K space form. For n = 2 the transport is harmonic; for
// n >= 3 it solves -Lap u + n(n-2)K/4 u = 0.
struct PulledBackSolution {
  PoissonMixture base;  // lives on the flat chart ball
  CurvedChart chart;
  double R;  // geodesic ball radius; base.R == chart_radius(chart.K, R)

  PulledBackSolution(PoissonMixture base, CurvedChart chart, double R);
  double chart_R() const { return base.R; }
};

// u at the chart point y: (1 + K|y|^2)^{(n-2)/2} * base(y), which is the
// flat value for n = 2 and continuous in K at K = 0.
double pullback_eval(const PulledBackSolution& sol, std::span<const double> y);

// Curved-metric norm of grad ln(cs^{n-2}(r/2) u): the flat log-gradient of
// the base mixture converted through the conformal factor.
double pullback_grad_log_norm(const PulledBackSolution& sol, std::span<const double> y);

// Generic positive scalar field on a chart ball, for finite-difference
// residual checks.
struct ScalarField {
  int n;
  double domain_radius;  // chart ball radius
  std::function<double(std::span<const double>)> value;
};

// Finite-difference evaluation of -Lap_g u + n(n-2)K/4 u at y, using the
// conformal-chart Laplacian. The independent oracle for pullback
// correctness.
double conformal_laplacian_residual(const CurvedChart& chart, const ScalarField& field,
                                    std::span<const double> y, double h);

ScalarField as_scalar_field(const PulledBackSolution& sol);

}  // namespace cygrad
