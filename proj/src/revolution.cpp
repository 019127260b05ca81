#include "cygrad/revolution.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

namespace cygrad {

namespace odeint = boost::numeric::odeint;
using std::numbers::pi;

WarpProfile WarpProfile::flat() {
  WarpProfile w;
  w.name = "flat";
  w.phi = [](double r) { return r; };
  w.dphi = [](double) { return 1.0; };
  w.d2phi = [](double) { return 0.0; };
  w.r_max = std::numeric_limits<double>::infinity();
  return w;
}

WarpProfile WarpProfile::sphere() {
  WarpProfile w;
  w.name = "sphere";
  w.phi = [](double r) { return std::sin(r); };
  w.dphi = [](double r) { return std::cos(r); };
  w.d2phi = [](double r) { return -std::sin(r); };
  w.c3 = -1.0 / 6.0;
  w.c5 = 1.0 / 120.0;
  w.r_max = pi;
  return w;
}

WarpProfile WarpProfile::hyperbolic() {
  WarpProfile w;
  w.name = "hyperbolic";
  w.phi = [](double r) { return std::sinh(r); };
  w.dphi = [](double r) { return std::cosh(r); };
  w.d2phi = [](double r) { return std::sinh(r); };
  w.c3 = 1.0 / 6.0;
  w.c5 = 1.0 / 120.0;
  w.r_max = std::numeric_limits<double>::infinity();
  return w;
}

WarpProfile WarpProfile::polynomial(const std::vector<std::pair<int, double>>& coeffs) {
  WarpProfile w;
  w.name = "polynomial";
  for (auto [k, b] : coeffs) {
    if (k < 3 || k % 2 == 0)
      throw std::invalid_argument("polynomial warp: exponents must be odd and >= 3");
    if (k == 3) w.c3 = b;
    if (k == 5) w.c5 = b;
  }
  auto c = coeffs;
  w.phi = [c](double r) {
    double v = r;
    for (auto [k, b] : c) v += b * std::pow(r, k);
    return v;
  };
  w.dphi = [c](double r) {
    double v = 1.0;
    for (auto [k, b] : c) v += k * b * std::pow(r, k - 1);
    return v;
  };
  w.d2phi = [c](double r) {
    double v = 0.0;
    for (auto [k, b] : c) v += k * (k - 1) * b * std::pow(r, k - 2);
    return v;
  };
  w.r_max = std::numeric_limits<double>::infinity();  // callers check phi > 0 on (0,R]
  return w;
}

WarpProfile WarpProfile::by_name(const std::string& name) {
  if (name == "flat") return flat();
  if (name == "sphere") return sphere();
  if (name == "hyperbolic") return hyperbolic();
  throw std::invalid_argument("unknown warp profile: " + name);
}

double warp_curvature(const WarpProfile& warp, double r) {
  if (!(r > 0)) throw std::domain_error("warp_curvature: r must be > 0");
  const double p = warp.phi(r);
  if (!(p > 0)) throw std::domain_error("warp_curvature: phi(r) <= 0");
  return -warp.d2phi(r) / p;
}

CurvatureCheck check_curvature_lower_bound(const WarpProfile& warp, double R, double K,
                                           int grid_size) {
  if (grid_size < 100)
    throw std::invalid_argument("check_curvature_lower_bound: grid_size must be >= 100");
  double mn = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= grid_size; ++i) {
    const double r = std::max(1e-6 * R, R * i / grid_size);
    mn = std::min(mn, warp_curvature(warp, r));
  }
  return {mn >= K - 1e-10, mn};
}

double RadialMode::series(double r) const {
  const double r2 = r * r;
  return scale_ * std::pow(r, m_) * (1.0 + alpha2_ * r2 + alpha4_ * r2 * r2);
}

double RadialMode::series_deriv(double r) const {
  const double r2 = r * r;
  return scale_ * std::pow(r, m_ - 1) *
         (m_ + (m_ + 2) * alpha2_ * r2 + (m_ + 4) * alpha4_ * r2 * r2);
}

double RadialMode::eval(double r) const {
  if (r < 0 || r > R_ * (1.0 + 1e-12))
    throw std::domain_error("RadialMode::eval: r outside [0, R]");
  if (m_ == 0) return 1.0;
  if (r <= 1e-2 * R_) return series(r);
  // cubic Hermite on the stored grid
  const double h = grid_[1] - grid_[0];
  size_t i = std::min(grid_.size() - 2, static_cast<size_t>((r - grid_[0]) / h));
  const double t = (r - grid_[i]) / h;
  const double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
  const double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
  return h00 * a_[i] + h * h10 * ap_[i] + h01 * a_[i + 1] + h * h11 * ap_[i + 1];
}

double RadialMode::deriv(double r) const {
  if (r < 0 || r > R_ * (1.0 + 1e-12))
    throw std::domain_error("RadialMode::deriv: r outside [0, R]");
  if (m_ == 0) return 0.0;
  if (r <= 1e-2 * R_) return series_deriv(r);
  const double h = grid_[1] - grid_[0];
  size_t i = std::min(grid_.size() - 2, static_cast<size_t>((r - grid_[0]) / h));
  const double t = (r - grid_[i]) / h;
  const double d00 = 6 * t * (t - 1) / h, d10 = (3 * t - 1) * (t - 1);
  const double d01 = -6 * t * (t - 1) / h, d11 = t * (3 * t - 2);
  return d00 * a_[i] + d10 * ap_[i] + d01 * a_[i + 1] + d11 * ap_[i + 1];
}

RadialMode solve_mode(const WarpProfile& warp, double R, int m) {
  if (m < 0) throw std::invalid_argument("solve_mode: m must be >= 0");
  if (!(R > 0) || R >= warp.r_max)
    throw std::domain_error("solve_mode: R outside (0, first zero of phi)");
  // reject warps whose phi vanishes inside (0, R]
  for (int i = 1; i <= 64; ++i)
    if (!(warp.phi(R * i / 64.0) > 0))
      throw std::domain_error("solve_mode: phi vanishes in (0, R]");

  RadialMode mode;
  mode.m_ = m;
  mode.R_ = R;
  if (m == 0) return mode;  // constants are harmonic

  // Frobenius start a = r^m (1 + a2 r^2 + a4 r^4) from the pole expansion
  // phi = r + c3 r^3 + c5 r^5 + ...
  const double c3 = warp.c3, c5 = warp.c5;
  mode.alpha2_ = -c3 * m / 2.0;
  mode.alpha4_ = m * (c3 * c3 * (m + 2) - 2.0 * c5) / 8.0;
  const double r0 = 1e-3 * R;
  mode.r0_ = r0;

  using State = std::array<double, 2>;
  auto rhs = [&warp, m](const State& y, State& dy, double r) {
    const double p = warp.phi(r);
    dy[0] = y[1];
    dy[1] = -warp.dphi(r) / p * y[1] + static_cast<double>(m) * m / (p * p) * y[0];
  };

  const int npts = 4001;
  mode.grid_.resize(npts);
  for (int i = 0; i < npts; ++i)
    mode.grid_[i] = r0 + (R - r0) * i / (npts - 1);
  mode.a_.resize(npts);
  mode.ap_.resize(npts);

  State y = {mode.series(r0), mode.series_deriv(r0)};  // scale_ = 1 here
  auto stepper = odeint::make_controlled<odeint::runge_kutta_cash_karp54<State>>(
      1e-100, 1e-12);
  int idx = 0;
  try {
    odeint::integrate_times(
        stepper, rhs, y, mode.grid_.begin(), mode.grid_.end(), (R - r0) / 1000.0,
        [&mode, &idx](const State& s, double) {
          mode.a_[idx] = s[0];
          mode.ap_[idx] = s[1];
          ++idx;
        });
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("solve_mode: integration failed: ") + e.what());
  }
  const double aR = mode.a_.back();
  if (!(aR > 0) || !std::isfinite(aR))
    throw std::runtime_error("solve_mode: integration produced a nonpositive profile");
  for (int i = 0; i < npts; ++i) {
    mode.a_[i] /= aR;
    mode.ap_[i] /= aR;
  }
  mode.scale_ = 1.0 / aR;
  return mode;
}

SolvedHarmonic assemble_and_eval(const DirichletProblem& problem) {
  SolvedHarmonic sol;
  sol.phi_ = problem.warp.phi;
  sol.R_ = problem.R;
  int M = 0;
  for (const auto& b : problem.boundary) {
    if (b.m < 0) throw std::invalid_argument("boundary modes must have m >= 0");
    M = std::max(M, b.m);
  }
  sol.coeff_.assign(M + 1, {0.0, 0.0});
  for (const auto& b : problem.boundary) sol.coeff_[b.m] += b.c;
  if (std::abs(sol.coeff_[0].imag()) > 1e-14 * (1.0 + std::abs(sol.coeff_[0].real())))
    throw std::invalid_argument("c_0 must be real for real boundary data");

  // boundary positivity on a 4M-point grid (minimum 16)
  const int ng = std::max(16, 4 * M);
  sol.modes_.resize(M + 1);
  for (int m = 0; m <= M; ++m) sol.modes_[m] = solve_mode(problem.warp, problem.R, m);
  for (int j = 0; j < ng; ++j) {
    const double th = 2.0 * pi * j / ng;
    if (!(sol.boundary_value(th) > 0))
      throw std::invalid_argument("boundary data is not strictly positive");
  }
  return sol;
}

double SolvedHarmonic::boundary_value(double theta) const {
  double v = coeff_[0].real();
  for (size_t m = 1; m < coeff_.size(); ++m)
    v += 2.0 * (coeff_[m] * std::polar(1.0, m * theta)).real();
  return v;
}

double SolvedHarmonic::eval(double r, double theta) const {
  double v = coeff_[0].real();
  for (size_t m = 1; m < coeff_.size(); ++m)
    v += 2.0 * modes_[m].eval(r) * (coeff_[m] * std::polar(1.0, m * theta)).real();
  return v;
}

double SolvedHarmonic::grad_log_norm(double r, double theta) const {
  const double u = eval(r, theta);
  if (!(u > 0))
    throw std::domain_error("grad_log_norm: u is not positive at the sample point");
  double ur = 0.0, ut = 0.0;
  for (size_t m = 1; m < coeff_.size(); ++m) {
    const auto e = coeff_[m] * std::polar(1.0, m * theta);
    ur += 2.0 * modes_[m].deriv(r) * e.real();
    // d/dtheta of 2 Re(c e^{im theta}) = -2 m Im(c e^{im theta})
    ut += -2.0 * static_cast<double>(m) * modes_[m].eval(r) * e.imag();
  }
  double ang;  // angular part (1/phi) du/dtheta, with the r -> 0 limit
  if (r <= 1e-12 * R_) {
    ang = 0.0;  // every m >= 1 mode vanishes at least linearly
    ur = 0.0;
    for (size_t m = 1; m < coeff_.size(); ++m) {
      if (m == 1) {
        const auto e = coeff_[1] * std::polar(1.0, theta);
        const double d = modes_[1].deriv(0.0);
        ur = 2.0 * d * e.real();
        ang = -2.0 * d * e.imag();
      }
    }
  } else {
    ang = ut / phi_(r);
  }
  return std::sqrt(ur * ur + ang * ang) / u;
}

double DiskGrid::theta_at(int j) const { return 2.0 * pi * j / ntheta_; }

DiskGrid fd_disk_oracle(const std::vector<double>& boundary, int nr) {
  if (nr < 64) throw std::invalid_argument("fd_disk_oracle: resolution must be >= 64");
  const int nt = static_cast<int>(boundary.size());
  if (nt < 8) throw std::invalid_argument("fd_disk_oracle: too few boundary samples");

  DiskGrid g;
  g.nr_ = nr;
  g.ntheta_ = nt;
  g.u_.assign((nr + 1) * nt, 0.0);
  auto at = [&](int i, int j) -> double& { return g.u_[i * nt + ((j % nt) + nt) % nt]; };

  double bscale = 0.0, bmean = 0.0;
  for (int j = 0; j < nt; ++j) {
    at(nr, j) = boundary[j];
    bscale = std::max(bscale, std::abs(boundary[j]));
    bmean += boundary[j] / nt;
  }
  if (bscale == 0.0) bscale = 1.0;
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nt; ++j) at(i, j) = bmean;

  const double hr = 1.0 / nr;
  const double ht = 2.0 * pi / nt;
  const double omega = 2.0 / (1.0 + std::sin(pi * hr));

  // Circulant tridiagonal solve (Thomas + Sherman-Morrison) for
  // -c x_{j-1} + d x_j - c x_{j+1} = rhs_j with periodic wraparound.
  std::vector<double> rhs(nt), xline(nt), y1(nt), y2(nt), cp(nt), dp(nt);
  auto solve_ring = [&](double d, double c) {
    // remove the corner entries via a rank-one correction
    const double gamma = -d;
    std::vector<double>& x = xline;
    auto thomas = [&](const std::vector<double>& b, std::vector<double>& out,
                      double d0, double dn) {
      double diag0 = d0;
      cp[0] = -c / diag0;
      dp[0] = b[0] / diag0;
      for (int j = 1; j < nt; ++j) {
        const double dj = (j == nt - 1 ? dn : d) + c * cp[j - 1];
        cp[j] = -c / dj;
        dp[j] = (b[j] + c * dp[j - 1]) / dj;
      }
      out[nt - 1] = dp[nt - 1];
      for (int j = nt - 2; j >= 0; --j) out[j] = dp[j] - cp[j] * out[j + 1];
    };
    thomas(rhs, y1, d - gamma, d - c * c / gamma);
    std::vector<double> unit(nt, 0.0);
    unit[0] = gamma;
    unit[nt - 1] = -c;
    thomas(unit, y2, d - gamma, d - c * c / gamma);
    const double fact = (y1[0] - c / gamma * y1[nt - 1]) /
                        (1.0 + y2[0] - c / gamma * y2[nt - 1]);
    for (int j = 0; j < nt; ++j) x[j] = y1[j] - fact * y2[j];
  };

  // five-point polar stencil u_rr + u_r/r + u_tt/r^2 = 0, relaxed ring by
  // ring: each angular line is solved exactly, sweeps ordered inward-out
  const int cap = 20000;
  int it = 0;
  for (; it < cap; ++it) {
    double maxres = 0.0;
    for (int i = 1; i < nr; ++i) {
      const double r = i * hr;
      const double cr_p = 1.0 / (hr * hr) + 1.0 / (2.0 * r * hr);
      const double cr_m = 1.0 / (hr * hr) - 1.0 / (2.0 * r * hr);
      const double ct = 1.0 / (r * r * ht * ht);
      const double diag = 2.0 / (hr * hr) + 2.0 * ct;
      for (int j = 0; j < nt; ++j) {
        rhs[j] = cr_p * at(i + 1, j) + cr_m * at(i - 1, j);
        const double res = rhs[j] + ct * (at(i, j + 1) + at(i, j - 1)) - diag * at(i, j);
        maxres = std::max(maxres, std::abs(res) / diag);
      }
      solve_ring(diag, ct);
      for (int j = 0; j < nt; ++j)
        at(i, j) = (1.0 - omega) * at(i, j) + omega * xline[j];
    }
    // center: mean over the first ring
    double mean = 0.0;
    for (int j = 0; j < nt; ++j) mean += at(1, j);
    mean /= nt;
    maxres = std::max(maxres, std::abs(mean - at(0, 0)));
    for (int j = 0; j < nt; ++j) at(0, j) = mean;
    if (maxres <= 1e-10 * bscale) break;
  }
  if (it >= cap)
    throw std::runtime_error("fd_disk_oracle: iteration did not converge to tolerance");
  return g;
}

}  // namespace cygrad
