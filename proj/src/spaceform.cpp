#include "cygrad/spaceform.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cygrad {

namespace {

constexpr double kSmallKr2 = 1e-10;  // switch to series below this |K|*r^2

double norm2(std::span<const double> y) {
  double s = 0.0;
  for (double v : y) s += v * v;
  return s;
}

}  // namespace

std::string to_string(ChartKind kind) {
  switch (kind) {
    case ChartKind::Euclidean: return "euclidean";
    case ChartKind::SphereStereo: return "sphere_stereo";
    case ChartKind::PoincareBall: return "poincare_ball";
  }
  return "?";
}

CurvedChart CurvedChart::euclidean(int n) {
  if (n < 2) throw std::invalid_argument("CurvedChart: n must be >= 2");
  return {ChartKind::Euclidean, 0.0, n};
}

CurvedChart CurvedChart::sphere(double K, int n) {
  if (n < 2) throw std::invalid_argument("CurvedChart: n must be >= 2");
  if (!(K > 0)) throw std::invalid_argument("CurvedChart: sphere chart needs K > 0");
  return {ChartKind::SphereStereo, K, n};
}

CurvedChart CurvedChart::poincare(double K, int n) {
  if (n < 2) throw std::invalid_argument("CurvedChart: n must be >= 2");
  if (!(K < 0)) throw std::invalid_argument("CurvedChart: Poincare ball needs K < 0");
  return {ChartKind::PoincareBall, K, n};
}

CurvedChart CurvedChart::for_curvature(double K, int n) {
  if (K > 0) return sphere(K, n);
  if (K < 0) return poincare(K, n);
  return euclidean(n);
}

double CurvedChart::chart_limit() const {
  if (kind == ChartKind::PoincareBall) return 1.0 / std::sqrt(-K);
  return std::numeric_limits<double>::infinity();
}

bool CurvedChart::contains(std::span<const double> y) const {
  if (static_cast<int>(y.size()) != n) return false;
  if (kind == ChartKind::PoincareBall)
    return norm2(y) < 1.0 / (-K);
  return true;
}

GeodesicBall::GeodesicBall(double R_, CurvedChart chart_) : R(R_), chart(chart_) {
  if (!(R > 0)) throw std::invalid_argument("GeodesicBall: R must be positive");
  if (chart.K > 0 && !(R < std::numbers::pi / std::sqrt(chart.K)))
    throw std::invalid_argument("GeodesicBall: need R < pi/sqrt(K) for K > 0");
}

double sn(double K, double r) {
  const double x = K * r * r;
  if (std::abs(x) < kSmallKr2)
    return r * (1.0 - x / 6.0 + x * x / 120.0 - x * x * x / 5040.0);
  if (K > 0) {
    const double k = std::sqrt(K);
    return std::sin(k * r) / k;
  }
  const double k = std::sqrt(-K);
  return std::sinh(k * r) / k;
}

double cs(double K, double r) {
  const double x = K * r * r;
  if (std::abs(x) < kSmallKr2)
    return 1.0 - x / 2.0 + x * x / 24.0 - x * x * x / 720.0;
  if (K > 0) return std::cos(std::sqrt(K) * r);
  return std::cosh(std::sqrt(-K) * r);
}

double chart_radius(double K, double r) {
  if (r < 0) throw std::domain_error("chart_radius: r must be >= 0");
  if (K == 0) return r;
  if (K > 0 && !(r < std::numbers::pi / std::sqrt(K)))
    throw std::domain_error("chart_radius: need r < pi/sqrt(K) for K > 0");
  return sn(K, r / 2) / cs(K, r / 2);
}

double geodesic_radius(double K, double rho) {
  if (rho < 0) throw std::domain_error("geodesic_radius: rho must be >= 0");
  if (K == 0) return rho;
  const double x = K * rho * rho;
  if (K < 0 && x <= -1.0)
    throw std::domain_error("geodesic_radius: point outside the Poincare ball");
  if (std::abs(x) < kSmallKr2) {
    // inverse series of sn(K,r/2)/cs(K,r/2) = rho
    return 2 * rho * (1.0 - x / 3.0 + x * x / 5.0 - x * x * x / 7.0);
  }
  if (K > 0) {
    const double k = std::sqrt(K);
    return 2.0 * std::atan(k * rho) / k;
  }
  const double k = std::sqrt(-K);
  return 2.0 * std::atanh(k * rho) / k;
}

double conformal_factor(const CurvedChart& chart, std::span<const double> y) {
  if (!chart.contains(y))
    throw std::domain_error("conformal_factor: point outside chart domain");
  if (chart.kind == ChartKind::Euclidean) return 1.0;
  return 2.0 / (1.0 + chart.K * norm2(y));
}

double grad_norm_convert(const CurvedChart& chart, std::span<const double> y,
                         double flat_grad_norm) {
  return flat_grad_norm / conformal_factor(chart, y);
}

double laplacian_comparison(int n, double K, double r) {
  if (n < 2) throw std::invalid_argument("laplacian_comparison: n must be >= 2");
  if (!(r > 0)) throw std::domain_error("laplacian_comparison: r must be > 0");
  if (K > 0 && !(r < std::numbers::pi / std::sqrt(K)))
    throw std::domain_error("laplacian_comparison: need r < pi/sqrt(K) for K > 0");
  return (n - 1) * cs(K, r) / sn(K, r);
}

}  // namespace cygrad
