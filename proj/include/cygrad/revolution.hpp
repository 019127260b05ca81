#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

// Harmonic functions on rotationally symmetric surfaces dr^2 + phi(r)^2
// dtheta^2, solved mode by mode (the separated Laplace-Beltrami ODE), plus
// a flat-disk finite-difference solver used as an independent oracle.

namespace cygrad {

struct WarpProfile {
  std::string name;
  std::function<double(double)> phi, dphi, d2phi;
  double c3 = 0.0, c5 = 0.0;  // r^3, r^5 coefficients of phi near the pole
  double r_max;               // first zero of phi (inf if none)

  static WarpProfile flat();
  static WarpProfile sphere();
  static WarpProfile hyperbolic();
  // phi = r + sum b_k r^k over the given odd (k, b_k) pairs
  static WarpProfile polynomial(const std::vector<std::pair<int, double>>& coeffs);
  static WarpProfile by_name(const std::string& name);
};

// Gaussian curvature -phi''/phi at r > 0.
double warp_curvature(const WarpProfile& warp, double r);

struct CurvatureCheck {
  bool ok;
  double min_curvature;
};

// Grid check that -phi''/phi >= K on (0, R].
CurvatureCheck check_curvature_lower_bound(const WarpProfile& warp, double R, double K,
                                           int grid_size = 1000);

// Radial profile a_m with a_m'' + (phi'/phi) a_m' - (m^2/phi^2) a_m = 0,
// regular at 0 and normalized a_m(R) = 1.
class RadialMode {
 public:
  RadialMode() = default;
  int m() const { return m_; }
  double R() const { return R_; }
  double eval(double r) const;
  double deriv(double r) const;

 private:
  friend RadialMode solve_mode(const WarpProfile&, double, int);
  int m_ = 0;
  double R_ = 1.0;
  double r0_ = 0.0;               // series launch radius
  double alpha2_ = 0.0, alpha4_ = 0.0;
  double scale_ = 1.0;            // normalization applied to the raw series
  std::vector<double> grid_, a_, ap_;  // Hermite data on [r0, R]

  double series(double r) const;
  double series_deriv(double r) const;
};

RadialMode solve_mode(const WarpProfile& warp, double R, int m);

struct BoundaryCoeff {
  int m;  // >= 0; negative modes are implied by conjugate symmetry
  std::complex<double> c;
};

struct DirichletProblem {
  WarpProfile warp;
  double R;
  std::vector<BoundaryCoeff> boundary;
};

class SolvedHarmonic {
 public:
  double eval(double r, double theta) const;
  double grad_log_norm(double r, double theta) const;
  double boundary_value(double theta) const;
  int max_mode() const { return static_cast<int>(modes_.size()) - 1; }

 private:
  friend SolvedHarmonic assemble_and_eval(const DirichletProblem&);
  std::function<double(double)> phi_;
  double R_ = 1.0;
  std::vector<std::complex<double>> coeff_;  // index = mode m >= 0
  std::vector<RadialMode> modes_;
};

// Solves all boundary modes and assembles u(r,theta); throws if the
// reconstructed boundary data is not strictly positive.
SolvedHarmonic assemble_and_eval(const DirichletProblem& problem);

// Second-order finite-difference solution of the flat-disk Dirichlet
// problem in polar coordinates. boundary holds values at ntheta equispaced
// angles on the unit circle.
class DiskGrid {
 public:
  int nr() const { return nr_; }
  int ntheta() const { return ntheta_; }
  double r_at(int i) const { return static_cast<double>(i) / nr_; }
  double theta_at(int j) const;
  double value(int i, int j) const { return u_[i * ntheta_ + j]; }

 private:
  friend DiskGrid fd_disk_oracle(const std::vector<double>&, int);
  int nr_ = 0, ntheta_ = 0;
  std::vector<double> u_;
};

DiskGrid fd_disk_oracle(const std::vector<double>& boundary, int nr);

}  // namespace cygrad
