#include "cygrad/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cygrad/spaceform.hpp"

namespace cygrad {

namespace {

constexpr double kBoundaryCut = 1e-9;  // reject r > R*(1 - kBoundaryCut)

void check_ball(double K, double R, double r) {
  if (!(R > 0)) throw std::domain_error("bound: R must be > 0");
  if (K > 0 && !(R < std::numbers::pi / std::sqrt(K)))
    throw std::domain_error("bound: need R < pi/sqrt(K) for K > 0");
  if (r < 0) throw std::domain_error("bound: r must be >= 0");
  if (!(r <= R * (1.0 - kBoundaryCut)))
    throw std::domain_error("bound: r too close to R (bound diverges at r = R)");
}

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::EuclidBall: return "euclid";
    case BoundKind::ConformalSpaceForm: return "conformal";
    case BoundKind::Surface2D: return "surface2d";
    case BoundKind::ManifoldND: return "manifold";
  }
  return "?";
}

BoundKind bound_kind_from_string(const std::string& s) {
  if (s == "euclid") return BoundKind::EuclidBall;
  if (s == "conformal") return BoundKind::ConformalSpaceForm;
  if (s == "surface2d") return BoundKind::Surface2D;
  if (s == "manifold") return BoundKind::ManifoldND;
  throw std::invalid_argument("unknown bound kind: " + s);
}

double bound_euclid(int n, double R, double s) {
  if (n < 2) throw std::invalid_argument("bound_euclid: n must be >= 2");
  check_ball(0.0, R, s);
  return (n - 1) / (R - s) + 1.0 / (R + s);
}

double bound_conformal(int n, double K, double R, double r) {
  if (n < 2) throw std::invalid_argument("bound_conformal: n must be >= 2");
  check_ball(K, R, r);
  const double pre = cs(K, R / 2) / cs(K, r / 2);
  return pre * ((n - 1) / (2.0 * sn(K, (R - r) / 2)) + 1.0 / (2.0 * sn(K, (R + r) / 2)));
}

double bound_2d(double K, double R, double r) {
  check_ball(K, R, r);
  return sn(K, R) / (2.0 * sn(K, (R + r) / 2) * sn(K, (R - r) / 2));
}

double bound_manifold(int n, double K, double R, double r) {
  if (n < 2) throw std::invalid_argument("bound_manifold: n must be >= 2");
  return (2 * n - 3) * bound_2d(K, R, r);
}

double bound_value(BoundKind kind, int n, double K, double R, double r) {
  switch (kind) {
    case BoundKind::EuclidBall:
      if (K != 0) throw std::domain_error("euclid bound requires K = 0");
      return bound_euclid(n, R, r);
    case BoundKind::ConformalSpaceForm:
      return bound_conformal(n, K, R, r);
    case BoundKind::Surface2D:
      return bound_2d(K, R, r);
    case BoundKind::ManifoldND:
      return bound_manifold(n, K, R, r);
  }
  throw std::invalid_argument("bound_value: bad kind");
}

std::pair<double, double> harnack_envelope(int n, double K, double R, double r) {
  if (n < 2) throw std::invalid_argument("harnack_envelope: n must be >= 2");
  check_ball(K, R, r);
  const double rho = sn(K, (R - r) / 2) / sn(K, (R + r) / 2);
  const double lower = std::pow(rho, 2 * n - 3);
  return {lower, 1.0 / lower};
}

BarrierParams barrier_constants(int n, double nu) {
  if (n < 3) throw std::invalid_argument("barrier_constants: n must be >= 3");
  if (!(nu > 0 && nu < 1))
    throw std::domain_error("barrier_constants: nu must lie in (0,1)");
  BarrierParams p;
  p.n = n;
  p.nu = nu;
  p.q_nu = (n - 2) * (n - 2) / (2.0 * (n - 1) * nu) - n / (2.0 * (n - 1));
  p.C2 = ((n - 2) * (n - 2) + (2 * n - 3) * nu) / ((1.0 - nu) * nu);
  return p;
}

std::pair<double, double> optimal_nu(int n) {
  if (n < 3) throw std::invalid_argument("optimal_nu: n must be >= 3");
  const double d = 2 * n - 3;
  return {(n - 2) / d, d * d};
}

double barrier_residual_2d(double K, double R, double r) {
  if (!(r > 0)) throw std::domain_error("barrier_residual_2d: r must be > 0");
  check_ball(K, R, r);
  const double sp = sn(K, (R + r) / 2), sm = sn(K, (R - r) / 2);
  const double ctp = cs(K, (R + r) / 2) / sp, ctm = cs(K, (R - r) / 2) / sm;
  // F = 2 ln(sn(R)/(2 sp sm)); analytic derivatives via the half-sum
  // cotangents: (cs/sn)' = -K - (cs/sn)^2.
  const double F1 = ctm - ctp;
  const double F2 = K + 0.5 * (ctm * ctm + ctp * ctp);
  const double eF = std::pow(sn(K, R) / (2.0 * sp * sm), 2);
  // (F' sn(r))'/sn(r) = F'' + F' cs(r)/sn(r)
  return F2 + F1 * cs(K, r) / sn(K, r) - 2.0 * eF - 2.0 * K;
}

double barrier_chain_slack(int n, double nu, double K, double R, double r) {
  const BarrierParams p = barrier_constants(n, nu);
  if (!(r > 0)) throw std::domain_error("barrier_chain_slack: r must be > 0");
  check_ball(K, R, r);
  const double q = p.q_nu;
  const double sp = sn(K, (R + r) / 2), sm = sn(K, (R - r) / 2);
  const double cp = cs(K, (R + r) / 2), cm = cs(K, (R - r) / 2);
  const double C = std::sqrt(p.C2);
  const double F = std::pow(C * sn(K, R) / (2.0 * sp * sm), 2.0 * (q + 1));
  const double Fpow = std::pow(F, (q + 2) / (q + 1));
  // intermediate upper bound for Delta F after the comparison step
  const double mid = n * (q + 1) * cs(K, r) / (sp * sm) * F
                   - 2.0 * (q + 1) * (2 * q + 3) * cp * cm / (sp * sm) * F
                   + 2.0 * (q + 1) * (2 * q + 3) / p.C2 * Fpow;
  const double target = 2.0 * (1.0 - nu) * (q + 1) / (n - 1) * Fpow
                      + 2.0 * (n - 1) * (q + 1) * K * F;
  return target - mid;
}

}  // namespace cygrad
