// Acceptance gate: runs the full criteria list with pinned tolerances and
// prints one PASS/FAIL line per criterion. Exit code = number of failures.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <numbers>
#include <string>
#include <vector>

#include "cygrad/bounds.hpp"
#include "cygrad/harmonic.hpp"
#include "cygrad/revolution.hpp"
#include "cygrad/spaceform.hpp"
#include "cygrad/verify.hpp"
#include "json.hpp"

using namespace cygrad;

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("criterion %2d  %-34s %s  (%s)\n", id, title, ok ? "PASS" : "FAIL",
              detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

PoissonMixture seeded_mixture(int n, double R, int poles, std::uint64_t seed) {
  SampleRng rng(seed);
  std::vector<MixtureTerm> terms;
  for (int i = 0; i < poles; ++i)
    terms.push_back({0.2 + rng.uniform(), rng.direction(n)});
  return PoissonMixture(n, R, std::move(terms));
}

// 1. Flat-ball bound validity: 20 seeded mixtures, n in {2,3,4}, <= 8 poles, 1e4
//    samples each with r <= 0.99R, relative violation <= 1e-9, <= 30 s.
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = -1e300;
  for (int i = 0; i < 20; ++i) {
    const int n = 2 + i % 3;
    const int poles = 1 + static_cast<int>(i * 7919 % 8);
    VerificationTask task;
    task.kind = TaskKind::Bounds;
    task.bound = BoundKind::EuclidBall;
    task.geom = {0.0, n, 1.0};
    task.sampling = {static_cast<std::uint64_t>(1000 + i), 10000, 25};
    task.tol = 1e-9;
    task.mixture = seeded_mixture(n, 1.0, poles, 42 + i);
    worst = std::max(worst, run_task(task).max_violation);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(1, "flat-ball bound validity", worst <= 1e-9 && secs <= 30.0,
         "max violation " + fmt(worst) + ", " + fmt(secs) + " s");
}

// 2. Flat-ball rigidity (forward): equality on the center-to-pole segment to
//    1e-10 relative, strictly below by >= 1e-3 at 1e3 off-segment samples.
void criterion_2() {
  VerificationTask task;
  task.kind = TaskKind::Equality;
  task.bound = BoundKind::EuclidBall;
  task.geom = {0.0, 3, 1.0};
  task.sampling = {77, 1000, 20};
  task.tol = 1e-10;
  task.mixture = PoissonMixture(3, 1.0, {{1.5, {0.0, 0.0, 1.0}}});
  const auto rep = run_task(task);
  report(2, "flat-ball rigidity (forward)", rep.pass && rep.max_violation <= 1e-10,
         "max violation " + fmt(rep.max_violation));
}

// 3. Conformal space-form bound validity: pulled-back mixtures on K = +-1, n in {2,3}; weighted
//    gradient <= bound_conformal to 1e-8; conformal-Laplacian residual
//    <= 1e-5 * scale on every test function.
void criterion_3() {
  double worst = -1e300, worst_res = 0.0;
  for (double K : {1.0, -1.0}) {
    for (int n : {2, 3}) {
      VerificationTask task;
      task.kind = TaskKind::Bounds;
      task.bound = BoundKind::ConformalSpaceForm;
      task.geom = {K, n, 1.0};
      task.sampling = {static_cast<std::uint64_t>(500 + n), 10000, 25};
      task.tol = 1e-8;
      task.mixture = seeded_mixture(n, 1.0, 4, 90 + n);
      worst = std::max(worst, run_task(task).max_violation);

      const double Rt = chart_radius(K, 1.0);
      PulledBackSolution sol(seeded_mixture(n, Rt, 4, 90 + n),
                             CurvedChart::for_curvature(K, n), 1.0);
      const auto field = as_scalar_field(sol);
      SampleRng rng(7 * n);
      const double h = 3e-4 * Rt;
      for (int i = 0; i < 200; ++i) {
        auto y = rng.direction(n);
        const double r = 0.7 * Rt * rng.uniform();
        for (double& c : y) c *= r;
        const double u = pullback_eval(sol, y);
        const double gl = pullback_grad_log_norm(sol, y);
        const double res =
            conformal_laplacian_residual(CurvedChart::for_curvature(K, n), field, y, h);
        worst_res = std::max(worst_res, std::abs(res) / (u * (1.0 + gl * gl)));
      }
    }
  }
  report(3, "conformal bound validity", worst <= 1e-8 && worst_res <= 1e-5,
         "max violation " + fmt(worst) + ", residual " + fmt(worst_res));
}

// 4. Reduction identities on a 1e3-point (R, r) grid, 1e-12 relative.
void criterion_4() {
  SampleRng rng(4);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double R = 0.2 + 2.5 * rng.uniform();
    const double r = 0.99 * R * rng.uniform();
    const double K = -2.0 + 4.0 * rng.uniform();
    const double Ks = (K > 0 && R >= kPi / std::sqrt(K)) ? 0.9 * kPi * kPi / (R * R) : K;
    auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
    worst = std::max(worst, rel(bound_conformal(4, 0.0, R, r), bound_euclid(4, R, r)));
    worst = std::max(worst, rel(bound_conformal(2, Ks, R, r), bound_2d(Ks, R, r)));
    worst = std::max(worst, rel(bound_manifold(2, Ks, R, r), bound_2d(Ks, R, r)));
    worst = std::max(worst, rel(bound_2d(0.0, R, r), 2 * R / (R * R - r * r)));
  }
  report(4, "reduction identities", worst <= 1e-12, "max deviation " + fmt(worst));
}

// 5. Barrier identity: residual <= 1e-10 on 50-point grids, K in {-2..2},
//    three radii per K.
void criterion_5() {
  double worst = 0.0;
  for (double K : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
    for (double Rbase : {0.4, 1.0, 1.8}) {
      const double R = K > 0 ? Rbase * kPi / (2.0 * std::sqrt(K)) : Rbase;
      for (int i = 1; i <= 50; ++i)
        worst = std::max(worst, std::abs(barrier_residual_2d(K, R, R * i / 51.0)));
    }
  }
  report(5, "surface barrier identity", worst <= 1e-10,
         "max residual " + fmt(worst));
}

// 6. Proof-constant optimization: optimal_nu exact in rational arithmetic
//    for n = 3..10, matching a 1e-5-step grid scan; chain slack >= -1e-12.
void criterion_6() {
  bool ok = true;
  double scan_dev = 0.0;
  for (int n = 3; n <= 10; ++n) {
    // exact rational check with a = n-2, b = 2n-3:
    // C2(a/b) = (a^2 + b*(a/b)) / ((1 - a/b)(a/b)) = a(a+1) b^2 / ((b-a) a) = b^2
    const std::int64_t a = n - 2, b = 2 * n - 3;
    const std::int64_t num = a * (a + 1) * b * b, den = (b - a) * a;
    if (num % den != 0 || num / den != b * b) ok = false;
    auto [nu, fmin] = optimal_nu(n);
    if (nu != static_cast<double>(a) / static_cast<double>(b)) ok = false;
    if (fmin != static_cast<double>(b * b)) ok = false;

    double best = 1e300, bestnu = 0.0;
    for (double v = 1e-5; v < 1.0; v += 1e-5) {
      const double c2 = barrier_constants(n, v).C2;
      if (c2 < best) {
        best = c2;
        bestnu = v;
      }
    }
    scan_dev = std::max(scan_dev, std::abs(bestnu - nu));
    if (std::abs(bestnu - nu) > 1e-5 || std::abs(best - fmin) > 1e-6) ok = false;
  }
  double min_slack = 1e300;
  for (int n : {3, 4, 5}) {
    const double num = optimal_nu(n).first;
    for (double nu : {0.2, num, 0.8})
      for (double K : {-1.0, 0.0, 1.0})
        for (int i = 1; i <= 20; ++i)
          min_slack = std::min(min_slack, barrier_chain_slack(n, nu, K, 1.0, i / 21.0));
  }
  if (min_slack < -1e-12) ok = false;
  report(6, "proof-constant optimization", ok,
         "scan dev " + fmt(scan_dev) + ", min slack " + fmt(min_slack));
}

// 7. Solver cross-validation: spectral vs closed form <= 1e-8; vs the FD
//    oracle <= 1e-4 on r <= 0.9; sphere modes vs the tan^m pullback; <= 60 s.
void criterion_7() {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationTask task;
  task.kind = TaskKind::SolverCross;
  task.geom = {0.0, 2, 1.0};
  task.sampling = {1, 100, 10};
  task.tol = 0.0;
  task.warp_name = "flat";
  task.boundary = {{0, {1.0, 0.0}}, {1, {0.2, 0.1}}, {2, {0.05, 0.0}}, {3, {0.0, 0.1}}};
  const auto flat = run_task(task);

  task.geom = {1.0, 2, 1.0};
  task.warp_name = "sphere";
  const auto sphere = run_task(task);

  double mode_err = 0.0;
  auto warp = WarpProfile::sphere();
  for (int m : {1, 2, 5, 16}) {
    auto mode = solve_mode(warp, 1.0, m);
    for (int i = 0; i <= 100; ++i) {
      const double r = i / 100.0;
      mode_err = std::max(
          mode_err, std::abs(mode.eval(r) - std::pow(std::tan(r / 2) / std::tan(0.5), m)));
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(7, "solver cross-validation",
         flat.pass && sphere.pass && mode_err <= 1e-8 && secs <= 60.0,
         "mode err " + fmt(mode_err) + ", " + fmt(secs) + " s");
}

// 8. Surface bound beyond space forms: two non-constant-curvature warps with
//    verified curvature >= K (K = 0 and K = -0.5), bound_2d * (1 + 1e-4).
void criterion_8() {
  bool ok = true;
  double worst = -1e300;
  struct Case {
    std::vector<std::pair<int, double>> coeffs;
    double K;
  };
  for (const Case& c : {Case{{{3, -0.05}}, 0.0}, Case{{{3, 0.05}}, -0.5}}) {
    auto warp = WarpProfile::polynomial(c.coeffs);
    if (!check_curvature_lower_bound(warp, 1.0, c.K).ok) ok = false;
    VerificationTask task;
    task.kind = TaskKind::Bounds;
    task.bound = BoundKind::Surface2D;
    task.geom = {c.K, 2, 1.0};
    task.sampling = {8, 10000, 25};
    task.tol = 1e-4;
    task.warp_coeffs = c.coeffs;
    task.boundary = {{0, {1.0, 0.0}}, {1, {0.2, 0.0}}, {2, {0.0, 0.15}}};
    const auto rep = run_task(task);
    if (!rep.pass) ok = false;
    worst = std::max(worst, rep.max_violation);
  }
  report(8, "surface bound beyond space forms", ok, "max violation " + fmt(worst));
}

// 9. Scaled extrema monotone on 50-radius grids for 10 functions
//    across K in {-1,0,1}; Harnack envelope at 1e4 samples; the n = 2, K = 0
//    envelope reproduces the ratio (R+r)/(R-r).
void criterion_9() {
  bool ok = true;
  for (int i = 0; i < 10; ++i) {
    const double K = static_cast<double>(i % 3 - 1);
    const int n = 2 + i % 2;
    VerificationTask task;
    task.geom = {K, n, 1.0};
    task.sampling = {static_cast<std::uint64_t>(300 + i), 10000, 50};
    task.mixture = seeded_mixture(n, 1.0, 2 + i % 4, 60 + i);

    task.kind = TaskKind::Monotonicity;
    task.tol = 1e-8;
    if (!run_task(task).pass) ok = false;

    task.kind = TaskKind::Harnack;
    task.tol = 1e-9;
    if (!run_task(task).pass) ok = false;
  }
  double env_dev = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double R = 1.0, r = 0.99 * R * i / 49.0;
    env_dev = std::max(env_dev, std::abs(harnack_envelope(2, 0.0, R, r).second -
                                         (R + r) / (R - r)));
  }
  if (env_dev > 1e-12) ok = false;
  report(9, "monotonicity and Harnack", ok, "envelope dev " + fmt(env_dev));
}

// 10. Bochner numeric check: u = 2 + x1 equality case <= 1e-6 * scale;
//     Poisson kernels >= -1e-5 * scale at 1e3 samples.
void criterion_10() {
  VerificationTask task;
  task.kind = TaskKind::Bochner;
  task.geom = {0.0, 3, 1.0};
  task.sampling = {17, 1000, 10};
  task.tol = 1e-6;
  const auto linear = run_task(task);
  const bool lin_ok = linear.pass && std::abs(linear.curves[0].observed_min) <= 1e-6;

  task.tol = 1e-5;
  task.mixture = PoissonMixture(3, 1.0, {{1.0, {1.0, 0.0, 0.0}}});
  const auto kernel = run_task(task);
  report(10, "Bochner numeric check", lin_ok && kernel.pass,
         "linear " + fmt(linear.max_violation) + ", kernel " + fmt(kernel.max_violation));
}

// 11. Determinism: fixed seed => identical JSON reports (wall time excluded).
void criterion_11() {
  bool ok = true;
  for (auto kind : {TaskKind::Bounds, TaskKind::Harnack, TaskKind::Monotonicity}) {
    VerificationTask task;
    task.kind = kind;
    task.bound = BoundKind::ManifoldND;
    task.geom = {-1.0, 3, 1.0};
    task.sampling = {123, 3000, 20};
    task.mixture = seeded_mixture(3, 1.0, 3, 123);
    auto strip = [](const VerificationReport& rep) {
      auto j = nlohmann::json::parse(report_to_json(rep));
      j.erase("wall_ms");
      return j.dump();
    };
    if (strip(run_task(task)) != strip(run_task(task))) ok = false;
  }
  report(11, "determinism", ok, ok ? "byte-identical" : "reports differ");
}

}  // namespace

int main() {
  using Fn = void (*)();
  const Fn criteria[] = {criterion_1, criterion_2, criterion_3, criterion_4,
                         criterion_5, criterion_6, criterion_7, criterion_8,
                         criterion_9, criterion_10, criterion_11};
  int id = 1;
  for (Fn fn : criteria) {
    try {
      fn();
    } catch (const std::exception& e) {
      report(id, "exception", false, e.what());
    }
    ++id;
  }
  if (failures == 0)
    std::printf("all 11 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
