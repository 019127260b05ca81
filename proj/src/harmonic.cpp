#include "cygrad/harmonic.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cygrad {

namespace {

double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

}  // namespace

double omega_n(int n) {
  if (n < 2) throw std::invalid_argument("omega_n: n must be >= 2");
  return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

PoissonKernelSpec::PoissonKernelSpec(int n_, double R_, std::vector<double> pole_)
    : n(n_), R(R_), pole(std::move(pole_)) {
  if (n < 2) throw std::invalid_argument("PoissonKernelSpec: n must be >= 2");
  if (!(R > 0)) throw std::invalid_argument("PoissonKernelSpec: R must be > 0");
  if (static_cast<int>(pole.size()) != n)
    throw std::invalid_argument("PoissonKernelSpec: pole dimension mismatch");
  const double nrm = std::sqrt(norm2(pole));
  if (std::abs(nrm - R) > 1e-12 * R)
    throw std::invalid_argument("PoissonKernelSpec: pole must lie on the boundary sphere");
}

double poisson_eval(const PoissonKernelSpec& spec, std::span<const double> x) {
  const double x2 = norm2(x);
  if (!(x2 < spec.R * spec.R))
    throw std::domain_error("poisson_eval: point outside the open ball");
  double d2 = 0.0;
  for (int i = 0; i < spec.n; ++i) {
    const double t = spec.pole[i] - x[i];
    d2 += t * t;
  }
  return (spec.R * spec.R - x2) /
         (spec.n * omega_n(spec.n) * spec.R * std::pow(d2, spec.n / 2.0));
}

PoissonMixture::PoissonMixture(int n_, double R_, std::vector<MixtureTerm> terms_)
    : n(n_), R(R_), terms(std::move(terms_)) {
  if (n < 2) throw std::invalid_argument("PoissonMixture: n must be >= 2");
  if (!(R > 0)) throw std::invalid_argument("PoissonMixture: R must be > 0");
  if (terms.empty()) throw std::invalid_argument("PoissonMixture: needs at least one term");
  for (auto& t : terms) {
    if (!(t.lambda > 0))
      throw std::invalid_argument("PoissonMixture: weights must be positive");
    if (static_cast<int>(t.pole.size()) != n)
      throw std::invalid_argument("PoissonMixture: pole dimension mismatch");
    // poles may come in as directions; rescale onto the boundary sphere
    const double nrm = std::sqrt(norm2(t.pole));
    if (!(nrm > 0)) throw std::invalid_argument("PoissonMixture: zero pole direction");
    for (double& c : t.pole) c *= R / nrm;
  }
}

PoissonMixture PoissonMixture::from_json_text(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const int n = j.at("n").get<int>();
  const double R = j.at("R").get<double>();
  std::vector<MixtureTerm> terms;
  for (const auto& t : j.at("terms")) {
    MixtureTerm term;
    term.lambda = t.at("lambda").get<double>();
    term.pole = t.at("pole").get<std::vector<double>>();
    terms.push_back(std::move(term));
  }
  return PoissonMixture(n, R, std::move(terms));
}

PoissonMixture PoissonMixture::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mixture file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

EvalGrad mixture_eval_grad(const PoissonMixture& mix, std::span<const double> x) {
  const int n = mix.n;
  const double R = mix.R;
  const double x2 = norm2(x);
  if (!(x2 < R * R))
    throw std::domain_error("mixture_eval_grad: point outside the open ball");

  double value = 0.0;
  std::vector<double> grad(n, 0.0);  // gradient of u itself
  for (const auto& term : mix.terms) {
    PoissonKernelSpec spec(n, R, term.pole);
    const double p = term.lambda * poisson_eval(spec, x);
    value += p;
    double d2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double t = term.pole[i] - x[i];
      d2 += t * t;
    }
    // grad P = P * (-2x/(R^2-|x|^2) + n (y-x)/|y-x|^2)
    for (int i = 0; i < n; ++i)
      grad[i] += p * (-2.0 * x[i] / (R * R - x2) + n * (term.pole[i] - x[i]) / d2);
  }
  for (double& g : grad) g /= value;
  return {value, std::move(grad)};
}

PulledBackSolution::PulledBackSolution(PoissonMixture base_, CurvedChart chart_, double R_)
    : base(std::move(base_)), chart(chart_), R(R_) {
  GeodesicBall ball(R, chart);  // validates R against the chart
  if (base.n != chart.n)
    throw std::invalid_argument("PulledBackSolution: dimension mismatch");
  const double want = chart_radius(chart.K, R);
  if (std::abs(base.R - want) > 1e-10 * want)
    throw std::invalid_argument(
        "PulledBackSolution: base ball radius must equal chart_radius(K, R)");
}

double pullback_eval(const PulledBackSolution& sol, std::span<const double> y) {
  const double ut = mixture_eval_grad(sol.base, y).value;
  const int n = sol.chart.n;
  if (n == 2 || sol.chart.kind == ChartKind::Euclidean) return ut;
  const double w = 1.0 + sol.chart.K * norm2(y);
  return std::pow(w, (n - 2) / 2.0) * ut;
}

double pullback_grad_log_norm(const PulledBackSolution& sol, std::span<const double> y) {
  const auto eg = mixture_eval_grad(sol.base, y);
  const double flat = std::sqrt(norm2(eg.grad_log));
  return grad_norm_convert(sol.chart, y, flat);
}

ScalarField as_scalar_field(const PulledBackSolution& sol) {
  ScalarField f;
  f.n = sol.chart.n;
  f.domain_radius = sol.chart_R();
  f.value = [sol](std::span<const double> y) { return pullback_eval(sol, y); };
  return f;
}

double conformal_laplacian_residual(const CurvedChart& chart, const ScalarField& field,
                                    std::span<const double> y, double h) {
  const int n = chart.n;
  const double Rt = field.domain_radius;
  if (!(h >= 1e-6 * Rt && h <= 1e-2 * Rt))
    throw std::invalid_argument("conformal_laplacian_residual: h outside [1e-6,1e-2]*R");
  if (std::sqrt(norm2(y)) > Rt - 2.0 * h)
    throw std::domain_error("conformal_laplacian_residual: stencil leaves the ball");

  std::vector<double> pt(y.begin(), y.end());
  const double u0 = field.value(pt);
  double lap_flat = 0.0;
  std::vector<double> grad_flat(n);
  for (int i = 0; i < n; ++i) {
    pt[i] = y[i] + h;
    const double up = field.value(pt);
    pt[i] = y[i] - h;
    const double um = field.value(pt);
    pt[i] = y[i];
    lap_flat += (up - 2.0 * u0 + um) / (h * h);
    grad_flat[i] = (up - um) / (2.0 * h);
  }

  const double K = chart.K;
  double lap_g;
  if (chart.kind == ChartKind::Euclidean) {
    lap_g = lap_flat;
  } else {
    const double lam = conformal_factor(chart, y);
    // grad lambda = -K lambda^2 y
    double dot = 0.0;
    for (int i = 0; i < n; ++i) dot += (-K * lam * lam * y[i]) * grad_flat[i];
    lap_g = (lap_flat + (n - 2) / lam * dot) / (lam * lam);
  }
  return -lap_g + n * (n - 2) * K / 4.0 * u0;
}

}  // namespace cygrad
