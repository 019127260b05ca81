#include "cygrad/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cygrad {

namespace {

using std::numbers::pi;

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

std::vector<double> normalized(std::span<const double> v) {
  std::vector<double> out(v.begin(), v.end());
  const double n = norm(v);
  for (double& x : out) x /= n;
  return out;
}

// Deterministic angular grids for extrema over geodesic spheres: equispaced
// angles in 2-D, a Fibonacci spiral in 3-D, a fixed seeded set otherwise.
std::vector<std::vector<double>> direction_grid(int n, std::uint64_t seed) {
  std::vector<std::vector<double>> dirs;
  if (n == 2) {
    dirs.reserve(720);
    for (int j = 0; j < 720; ++j) {
      const double th = 2.0 * pi * j / 720;
      dirs.push_back({std::cos(th), std::sin(th)});
    }
  } else if (n == 3) {
    const int N = 2048;
    const double golden = pi * (3.0 - std::sqrt(5.0));
    dirs.reserve(N);
    for (int j = 0; j < N; ++j) {
      const double z = 1.0 - 2.0 * (j + 0.5) / N;
      const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double th = golden * j;
      dirs.push_back({rho * std::cos(th), rho * std::sin(th), z});
    }
  } else {
    SampleRng rng(seed ^ 0x9e3779b97f4a7c15ull);
    dirs.reserve(1024);
    for (int j = 0; j < 1024; ++j) dirs.push_back(rng.direction(n));
  }
  return dirs;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

ChartKind chart_kind_for(double K) {
  if (K > 0) return ChartKind::SphereStereo;
  if (K < 0) return ChartKind::PoincareBall;
  return ChartKind::Euclidean;
}

PoissonMixture rebase_mixture(const PoissonMixture& mix, double new_R) {
  std::vector<MixtureTerm> terms = mix.terms;
  return PoissonMixture(mix.n, new_R, std::move(terms));
}

TestFunction constant_function(const GeometrySpec& geom) {
  TestFunction f;
  f.name = "constant";
  f.geom = geom;
  f.value = [](double, std::span<const double>) { return 1.0; };
  f.grad_log = [](double, std::span<const double>) { return 0.0; };
  return f;
}

TestFunction build_function(const VerificationTask& task) {
  if (task.mixture) return make_test_function(*task.mixture, task.geom);
  if (task.warp_name || !task.warp_coeffs.empty()) {
    WarpProfile warp = task.warp_name ? WarpProfile::by_name(*task.warp_name)
                                      : WarpProfile::polynomial(task.warp_coeffs);
    DirichletProblem problem{warp, task.geom.R, task.boundary};
    return make_test_function(assemble_and_eval(problem), task.geom);
  }
  return constant_function(task.geom);
}

}  // namespace

std::string to_string(TaskKind kind) {
  switch (kind) {
    case TaskKind::Bounds: return "bounds";
    case TaskKind::Equality: return "equality";
    case TaskKind::Monotonicity: return "monotonicity";
    case TaskKind::Harnack: return "harnack";
    case TaskKind::Barrier: return "barrier";
    case TaskKind::Bochner: return "bochner";
    case TaskKind::SolverCross: return "solve-cross";
  }
  return "?";
}

// xoshiro256++ with splitmix64 seeding; hand-rolled so that identical seeds
// give identical streams on every platform.
SampleRng::SampleRng(std::uint64_t seed) {
  std::uint64_t x = seed;
  for (auto& s : s_) {
    x += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    s = z ^ (z >> 31);
  }
}

std::uint64_t SampleRng::next() {
  auto rotl = [](std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double SampleRng::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::vector<double> SampleRng::direction(int n) {
  std::vector<double> v(n);
  while (true) {
    for (int i = 0; i < n; i += 2) {
      // Box-Muller
      double u1 = uniform();
      while (u1 == 0.0) u1 = uniform();
      const double u2 = uniform();
      const double rad = std::sqrt(-2.0 * std::log(u1));
      v[i] = rad * std::cos(2.0 * pi * u2);
      if (i + 1 < n) v[i + 1] = rad * std::sin(2.0 * pi * u2);
    }
    const double nn = norm(v);
    if (nn > 1e-8) {
      for (double& x : v) x /= nn;
      return v;
    }
  }
}

TestFunction make_test_function(const PoissonMixture& mix, const GeometrySpec& geom) {
  TestFunction f;
  f.geom = geom;
  if (geom.K == 0.0) {
    f.name = "mixture";
    if (std::abs(mix.R - geom.R) > 1e-12 * geom.R)
      throw std::invalid_argument("make_test_function: mixture ball must match geometry");
    PoissonMixture m = mix;
    f.value = [m](double r, std::span<const double> dir) {
      std::vector<double> x(dir.begin(), dir.end());
      for (double& c : x) c *= r;
      return mixture_eval_grad(m, x).value;
    };
    f.grad_log = [m](double r, std::span<const double> dir) {
      std::vector<double> x(dir.begin(), dir.end());
      for (double& c : x) c *= r;
      return norm(mixture_eval_grad(m, x).grad_log);
    };
    return f;
  }
  f.name = "pulled_back_mixture";
  const CurvedChart chart = CurvedChart::for_curvature(geom.K, geom.n);
  const double Rt = chart_radius(geom.K, geom.R);
  PulledBackSolution sol(rebase_mixture(mix, Rt), chart, geom.R);
  f.value = [sol](double r, std::span<const double> dir) {
    const double rho = chart_radius(sol.chart.K, r);
    std::vector<double> y(dir.begin(), dir.end());
    for (double& c : y) c *= rho;
    return pullback_eval(sol, y);
  };
  f.grad_log = [sol](double r, std::span<const double> dir) {
    const double rho = chart_radius(sol.chart.K, r);
    std::vector<double> y(dir.begin(), dir.end());
    for (double& c : y) c *= rho;
    return pullback_grad_log_norm(sol, y);
  };
  return f;
}

TestFunction make_test_function(const SolvedHarmonic& sol, const GeometrySpec& geom) {
  TestFunction f;
  f.name = "solved_harmonic";
  f.geom = geom;
  f.value = [sol](double r, std::span<const double> dir) {
    return sol.eval(r, std::atan2(dir[1], dir[0]));
  };
  f.grad_log = [sol](double r, std::span<const double> dir) {
    return sol.grad_log_norm(r, std::atan2(dir[1], dir[0]));
  };
  return f;
}

VerificationReport run_bound_check(const VerificationTask& task) {
  Timer timer;
  const auto& g = task.geom;
  TestFunction f = build_function(task);
  SampleRng rng(task.sampling.seed);

  VerificationReport rep;
  rep.task = to_string(task.kind);
  rep.geom = g;
  rep.sampling = task.sampling;

  double worst = -std::numeric_limits<double>::infinity();
  const double rmax = 0.99 * g.R;
  for (int i = 0; i < task.sampling.count; ++i) {
    const double r = rmax * rng.uniform();
    const auto dir = rng.direction(g.n);
    const double obs = f.grad_log(r, dir);
    const double b = bound_value(task.bound, g.n, g.K, g.R, r);
    const double viol = (obs - b) / b;
    if (viol > worst) {
      worst = viol;
      rep.worst_point.assign(1, r);
      rep.worst_point.insert(rep.worst_point.end(), dir.begin(), dir.end());
    }
  }

  const auto dirs = direction_grid(g.n, task.sampling.seed);
  for (int j = 0; j < task.sampling.radii; ++j) {
    const double r = rmax * j / std::max(1, task.sampling.radii - 1);
    double mx = -std::numeric_limits<double>::infinity(), mn = -mx;
    for (const auto& d : dirs) {
      const double obs = f.grad_log(r, d);
      mx = std::max(mx, obs);
      mn = std::min(mn, obs);
    }
    rep.curves.push_back({r, bound_value(task.bound, g.n, g.K, g.R, r), mx, mn});
  }

  rep.max_violation = worst;
  rep.pass = worst <= task.tol;
  rep.wall_ms = timer.ms();
  return rep;
}

double kernel_fit_deviation(const PoissonMixture& mix, int samples, std::uint64_t seed) {
  const int n = mix.n;
  const double R = mix.R;
  std::vector<double> origin(n, 0.0);
  const auto center = mixture_eval_grad(mix, origin);
  // the log-gradient of a single kernel at the center points at its pole;
  // if it vanishes (symmetric mixtures) any direction serves the fit
  std::vector<double> pole = norm(center.grad_log) > 1e-12 * n / R
                                 ? normalized(center.grad_log)
                                 : normalized(mix.terms[0].pole);
  for (double& c : pole) c *= R;
  PoissonKernelSpec fit(n, R, pole);
  const double lam = center.value / poisson_eval(fit, origin);

  SampleRng rng(seed);
  double dev = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double r = 0.9 * R * rng.uniform();
    auto x = rng.direction(n);
    for (double& c : x) c *= r;
    const double u = mixture_eval_grad(mix, x).value;
    const double p = lam * poisson_eval(fit, x);
    dev = std::max(dev, std::abs(u - p) / p);
  }
  return dev;
}

VerificationReport run_equality_check(const VerificationTask& task) {
  Timer timer;
  const auto& g = task.geom;
  if (!task.mixture)
    throw std::invalid_argument("equality check needs a mixture function spec");
  TestFunction f = build_function(task);
  const auto pole_dir = normalized(task.mixture->terms[0].pole);

  VerificationReport rep;
  rep.task = to_string(task.kind);
  rep.geom = g;
  rep.sampling = task.sampling;

  // equality on the center-to-pole segment
  double seg_err = 0.0;
  const int seg_pts = 20;
  for (int i = 0; i < seg_pts; ++i) {
    const double r = 0.95 * g.R * i / (seg_pts - 1);
    const double obs = f.grad_log(r, pole_dir);
    const double b = bound_value(task.bound, g.n, g.K, g.R, r);
    seg_err = std::max(seg_err, std::abs(obs - b) / b);
    rep.curves.push_back({r, b, obs, obs});
  }

  // Off the segment: for n >= 3 the kernel is strictly below the bound, so
  // sample outside a tube around the pole axis and demand a positive margin.
  // For n = 2 the kernel attains the bound at every point of the disk, so
  // the off-segment samples are additional equality points.
  SampleRng rng(task.sampling.seed);
  double min_margin = std::numeric_limits<double>::infinity();
  double off_err = 0.0;
  int found = 0;
  while (found < 1000) {
    const double r = (0.2 + 0.7 * rng.uniform()) * g.R;
    const auto dir = rng.direction(g.n);
    double dot = 0.0;
    for (int i = 0; i < g.n; ++i) dot += dir[i] * pole_dir[i];
    if (std::acos(std::min(1.0, std::abs(dot))) < 0.2) continue;
    const double obs = f.grad_log(r, dir);
    const double b = bound_value(task.bound, g.n, g.K, g.R, r);
    const double margin = (b - obs) / b;
    if (g.n == 2) off_err = std::max(off_err, std::abs(margin));
    if (margin < min_margin) {
      min_margin = margin;
      rep.worst_point.assign(1, r);
      rep.worst_point.insert(rep.worst_point.end(), dir.begin(), dir.end());
    }
    ++found;
  }

  // a single kernel must be recovered exactly by the center fit
  const PoissonMixture chart_mix =
      g.K == 0.0 ? *task.mixture
                 : rebase_mixture(*task.mixture, chart_radius(g.K, g.R));
  const double fit_dev = kernel_fit_deviation(chart_mix, 1000, task.sampling.seed + 1);

  const double strictness = g.n == 2 ? off_err : 1e-3 - min_margin;
  rep.max_violation = std::max({seg_err, strictness, fit_dev});
  rep.pass = rep.max_violation <= task.tol;
  rep.wall_ms = timer.ms();
  return rep;
}

VerificationReport run_monotonicity_check(const VerificationTask& task) {
  Timer timer;
  const auto& g = task.geom;
  TestFunction f = build_function(task);

  VerificationReport rep;
  rep.task = to_string(task.kind);
  rep.geom = g;
  rep.sampling = task.sampling;

  const auto dirs = direction_grid(g.n, task.sampling.seed);
  const int J = std::max(2, task.sampling.radii);
  std::vector<double> scaled_max(J), scaled_min(J), radii(J);
  for (int j = 0; j < J; ++j) {
    const double r = 0.95 * g.R * j / (J - 1);
    radii[j] = r;
    double mx = -std::numeric_limits<double>::infinity(), mn = -mx;
    for (const auto& d : dirs) {
      const double u = f.value(r, d);
      mx = std::max(mx, u);
      mn = std::min(mn, u);
    }
    const double rho = sn(g.K, (g.R - r) / 2) / sn(g.K, (g.R + r) / 2);
    const double w = std::pow(rho, 2 * g.n - 3);
    scaled_max[j] = mx * w;
    scaled_min[j] = mn / w;
    rep.curves.push_back({r, w, mx, mn});
  }

  double worst = -std::numeric_limits<double>::infinity();
  for (int j = 0; j + 1 < J; ++j) {
    const double up = (scaled_max[j + 1] - scaled_max[j]) / std::abs(scaled_max[j]);
    const double dn = (scaled_min[j] - scaled_min[j + 1]) / std::abs(scaled_min[j]);
    if (std::max(up, dn) > worst) {
      worst = std::max(up, dn);
      rep.worst_point = {radii[j + 1]};
    }
  }
  rep.max_violation = worst;
  rep.pass = worst <= task.tol;
  rep.wall_ms = timer.ms();
  return rep;
}

VerificationReport run_harnack_check(const VerificationTask& task) {
  Timer timer;
  const auto& g = task.geom;
  TestFunction f = build_function(task);
  SampleRng rng(task.sampling.seed);

  VerificationReport rep;
  rep.task = to_string(task.kind);
  rep.geom = g;
  rep.sampling = task.sampling;

  std::vector<double> e1(g.n, 0.0);
  e1[0] = 1.0;
  const double up0 = f.value(0.0, e1);

  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < task.sampling.count; ++i) {
    const double r = 0.99 * g.R * rng.uniform();
    const auto dir = rng.direction(g.n);
    const double u = f.value(r, dir);
    const auto [lo, hi] = harnack_envelope(g.n, g.K, g.R, r);
    const double viol =
        std::max((lo * up0 - u) / (lo * up0), (u - hi * up0) / (hi * up0));
    if (viol > worst) {
      worst = viol;
      rep.worst_point.assign(1, r);
      rep.worst_point.insert(rep.worst_point.end(), dir.begin(), dir.end());
    }
  }

  const auto dirs = direction_grid(g.n, task.sampling.seed);
  for (int j = 0; j < task.sampling.radii; ++j) {
    const double r = 0.99 * g.R * j / std::max(1, task.sampling.radii - 1);
    double mx = -std::numeric_limits<double>::infinity(), mn = -mx;
    for (const auto& d : dirs) {
      const double u = f.value(r, d) / up0;
      mx = std::max(mx, u);
      mn = std::min(mn, u);
    }
    rep.curves.push_back({r, harnack_envelope(g.n, g.K, g.R, r).second, mx, mn});
  }

  rep.max_violation = worst;
  rep.pass = worst <= task.tol;
  rep.wall_ms = timer.ms();
  return rep;
}

VerificationReport run_barrier_check(const VerificationTask& task) {
  Timer timer;
  const auto& g = task.geom;

  VerificationReport rep;
  rep.task = to_string(task.kind);
  rep.geom = g;
  rep.sampling = task.sampling;

  // 2-D barrier identity on a radial grid
  double max_res = 0.0;
  const int J = std::max(2, task.sampling.radii);
  for (int j = 1; j <= J; ++j) {
    const double r = 0.95 * g.R * j / J;
    const double res = std::abs(barrier_residual_2d(g.K, g.R, r));
    rep.curves.push_back({r, 0.0, res, res});
    if (res > max_res) {
      max_res = res;
      rep.worst_point = {r};
    }
  }

  // chain slack scan for the task's dimension (n >= 3 only)
  double min_slack = std::numeric_limits<double>::infinity();
  if (g.n >= 3) {
    const auto [nu_m, _] = optimal_nu(g.n);
    for (double nu : {0.2, nu_m, 0.8})
      for (int j = 1; j <= 20; ++j) {
        const double r = 0.95 * g.R * j / 20;
        min_slack = std::min(min_slack, barrier_chain_slack(g.n, nu, g.K, g.R, r));
      }
  } else {
    min_slack = 0.0;
  }

  rep.max_violation = std::max(max_res, -min_slack);
  rep.pass = rep.max_violation <= task.tol;
  rep.wall_ms = timer.ms();
  return rep;
}

VerificationReport run_bochner_check(const VerificationTask& task) {
  Timer timer;
  const auto& g = task.geom;
  if (g.K != 0.0)
    throw std::invalid_argument("bochner check is restricted to K = 0");
  const int n = g.n;

  // closed-form log-gradient of the test function
  std::function<std::vector<double>(std::span<const double>)> grad_log;
  if (task.mixture) {
    const PoissonMixture mix = *task.mixture;
    grad_log = [mix](std::span<const double> x) {
      return mixture_eval_grad(mix, x).grad_log;
    };
  } else {
    // u = 2 + x_1, the equality case
    grad_log = [n](std::span<const double> x) {
      std::vector<double> v(n, 0.0);
      v[0] = 1.0 / (2.0 + x[0]);
      return v;
    };
  }
  auto Q = [&grad_log](std::span<const double> x) {
    const auto gl = grad_log(x);
    double s = 0.0;
    for (double v : gl) s += v * v;
    return s;
  };

  VerificationReport rep;
  rep.task = to_string(task.kind);
  rep.geom = g;
  rep.sampling = task.sampling;

  SampleRng rng(task.sampling.seed);
  const double h = 5e-4 * g.R;
  double worst = -std::numeric_limits<double>::infinity();
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int i = 0; i < task.sampling.count; ++i) {
    const double r = 0.6 * g.R * rng.uniform();
    auto x = rng.direction(n);
    for (double& c : x) c *= r;

    const double q0 = Q(x);
    const auto gl = grad_log(x);
    double lapQ = 0.0;
    std::vector<double> gQ(n);
    std::vector<double> pt = x;
    for (int d = 0; d < n; ++d) {
      pt[d] = x[d] + h;
      const double qp = Q(pt);
      pt[d] = x[d] - h;
      const double qm = Q(pt);
      pt[d] = x[d];
      lapQ += (qp - 2.0 * q0 + qm) / (h * h);
      gQ[d] = (qp - qm) / (2.0 * h);
    }
    double gQ2 = 0.0, cross = 0.0;
    for (int d = 0; d < n; ++d) {
      gQ2 += gQ[d] * gQ[d];
      cross += gQ[d] * gl[d];
    }
    const double lhs = q0 * lapQ - n / (2.0 * (n - 1.0)) * gQ2;
    const double rhs = 2.0 / (n - 1.0) * q0 * q0 * q0 -
                       2.0 * (n - 2.0) / (n - 1.0) * q0 * cross;
    const double scale =
        std::max({std::abs(q0 * lapQ), n / (2.0 * (n - 1.0)) * gQ2,
                  2.0 / (n - 1.0) * q0 * q0 * q0, std::abs(2.0 * (n - 2.0) / (n - 1.0) * q0 * cross),
                  1e-300});
    const double rel = (rhs - lhs) / scale;  // positive = inequality failed
    lo = std::min(lo, rel);
    hi = std::max(hi, rel);
    if (rel > worst) {
      worst = rel;
      rep.worst_point = x;
    }
  }

  rep.curves.push_back({0.0, 0.0, hi, lo});
  rep.max_violation = worst;
  rep.pass = worst <= task.tol;
  rep.wall_ms = timer.ms();
  return rep;
}

VerificationReport run_solver_cross_check(const VerificationTask& task) {
  Timer timer;
  const auto& g = task.geom;
  if (!task.warp_name || (*task.warp_name != "flat" && *task.warp_name != "sphere"))
    throw std::invalid_argument("solve-cross needs --warp flat or sphere");
  const bool flat = *task.warp_name == "flat";
  const WarpProfile warp = WarpProfile::by_name(*task.warp_name);
  DirichletProblem problem{warp, g.R, task.boundary};
  const SolvedHarmonic sol = assemble_and_eval(problem);

  VerificationReport rep;
  rep.task = to_string(task.kind);
  rep.geom = g;
  rep.sampling = task.sampling;

  auto closed_mode = [&](int m, double r) {
    if (flat) return std::pow(r / g.R, m);
    return std::pow(std::tan(r / 2) / std::tan(g.R / 2), m);
  };
  auto closed_eval = [&](double r, double th) {
    double v = 0.0;
    bool first = true;
    for (const auto& b : task.boundary) {
      const double a = closed_mode(b.m, r);
      if (b.m == 0) {
        v += b.c.real();
      } else {
        v += 2.0 * a * (b.c * std::polar(1.0, b.m * th)).real();
      }
      (void)first;
    }
    return v;
  };

  // spectral vs closed form
  double err_cf = 0.0;
  for (int j = 0; j <= 40; ++j) {
    const double r = 0.99 * g.R * j / 40;
    double row = 0.0;
    for (int a = 0; a < 64; ++a) {
      const double th = 2.0 * pi * a / 64;
      const double ue = closed_eval(r, th);
      row = std::max(row, std::abs(sol.eval(r, th) - ue) / std::abs(ue));
    }
    rep.curves.push_back({r, 1e-8, row, row});
    if (row > err_cf) {
      err_cf = row;
      rep.worst_point = {r};
    }
  }

  // flat case: independent finite-difference oracle, compared on r <= 0.9
  double err_fd = 0.0;
  if (flat && std::abs(g.R - 1.0) < 1e-12) {
    const int nr = 128, nt = 512;
    std::vector<double> bdry(nt);
    for (int j = 0; j < nt; ++j) bdry[j] = sol.boundary_value(2.0 * pi * j / nt);
    const DiskGrid fd = fd_disk_oracle(bdry, nr);
    for (int i = 0; i <= static_cast<int>(0.9 * nr); ++i)
      for (int j = 0; j < nt; ++j) {
        const double ue = sol.eval(fd.r_at(i), fd.theta_at(j));
        err_fd = std::max(err_fd, std::abs(fd.value(i, j) - ue) / std::abs(ue));
      }
  }

  rep.max_violation = std::max(err_cf - 1e-8, err_fd - 1e-4);
  rep.pass = rep.max_violation <= task.tol;
  rep.wall_ms = timer.ms();
  return rep;
}

VerificationReport run_task(const VerificationTask& task) {
  switch (task.kind) {
    case TaskKind::Bounds: return run_bound_check(task);
    case TaskKind::Equality: return run_equality_check(task);
    case TaskKind::Monotonicity: return run_monotonicity_check(task);
    case TaskKind::Harnack: return run_harnack_check(task);
    case TaskKind::Barrier: return run_barrier_check(task);
    case TaskKind::Bochner: return run_bochner_check(task);
    case TaskKind::SolverCross: return run_solver_cross_check(task);
  }
  throw std::invalid_argument("run_task: bad kind");
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["task"] = report.task;
  j["geometry"] = {{"kind", to_string(chart_kind_for(report.geom.K))},
                   {"K", report.geom.K},
                   {"n", report.geom.n},
                   {"R", report.geom.R}};
  j["sampling"] = {{"seed", report.sampling.seed}, {"count", report.sampling.count}};
  nlohmann::ordered_json curves = nlohmann::ordered_json::array();
  for (const auto& c : report.curves)
    curves.push_back({{"r", c.r},
                      {"bound", c.bound},
                      {"observed_max", c.observed_max},
                      {"observed_min", c.observed_min}});
  j["result"] = {{"pass", report.pass},
                 {"max_violation", report.max_violation},
                 {"worst_point", report.worst_point},
                 {"curves", curves}};
  j["wall_ms"] = report.wall_ms;
  return j.dump(2);
}

std::string report_to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "r,bound,observed_max,observed_min\n";
  for (const auto& c : report.curves)
    out << c.r << ',' << c.bound << ',' << c.observed_max << ',' << c.observed_min << '\n';
  return out.str();
}

void emit_report(const VerificationReport& report, ReportFormat format,
                 const std::string& path) {
  const std::string body =
      format == ReportFormat::Json ? report_to_json(report) : report_to_csv(report);
  if (path == "-" || path.empty()) {
    std::cout << body << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_report: cannot open " + path);
  out << body;
  if (!out) throw std::runtime_error("emit_report: write failed for " + path);
}

}  // namespace cygrad
