#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cygrad/bounds.hpp"
#include "cygrad/harmonic.hpp"
#include "cygrad/revolution.hpp"
#include "cygrad/spaceform.hpp"

// Batch verification harness: samples geometries and test functions, runs
// the inequality / equality / monotonicity / identity checks, and produces
// machine-readable reports.

namespace cygrad {

enum class TaskKind { Bounds, Equality, Monotonicity, Harnack, Barrier, Bochner, SolverCross };

std::string to_string(TaskKind kind);

struct GeometrySpec {
  double K = 0.0;
  int n = 2;
  double R = 1.0;
};

struct SamplingSpec {
  std::uint64_t seed = 0;
  int count = 10000;
  int radii = 50;  // radii-grid size for curves and monotonicity
};

// A positive function on a geodesic ball presented in geodesic polar form.
struct TestFunction {
  std::string name;
  GeometrySpec geom;
  // u and its (appropriately weighted) log-gradient norm at geodesic radius
  // r in the unit direction dir.
  std::function<double(double r, std::span<const double> dir)> value;
  std::function<double(double r, std::span<const double> dir)> grad_log;
};

// Wrap a flat mixture or its space-form transport as a TestFunction. For
// curved geometry the log-gradient is the weighted one the bounds control.
TestFunction make_test_function(const PoissonMixture& mix, const GeometrySpec& geom);
TestFunction make_test_function(const SolvedHarmonic& sol, const GeometrySpec& geom);

struct CurvePoint {
  double r;
  double bound;
  double observed_max;
  double observed_min;
};

struct VerificationReport {
  std::string task;
  GeometrySpec geom;
  SamplingSpec sampling;
  bool pass = false;
  double max_violation = 0.0;  // positive = the checked inequality failed
  std::vector<double> worst_point;
  std::vector<CurvePoint> curves;
  double wall_ms = 0.0;
};

struct VerificationTask {
  TaskKind kind = TaskKind::Bounds;
  BoundKind bound = BoundKind::EuclidBall;
  GeometrySpec geom;
  SamplingSpec sampling;
  double tol = 1e-9;
  std::optional<PoissonMixture> mixture;
  std::optional<std::string> warp_name;
  std::vector<std::pair<int, double>> warp_coeffs;  // polynomial warp
  std::vector<BoundaryCoeff> boundary;
};

// Deterministic sampling utilities (fixed seed => identical streams on any
// platform).
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed);
  double uniform();                    // [0,1)
  std::vector<double> direction(int n);  // uniform on the unit sphere

 private:
  std::uint64_t s_[4];
  std::uint64_t next();
};

// Max relative deviation of the mixture from the single Poisson kernel
// fitted at the center (zero for a kernel, large for genuine mixtures).
double kernel_fit_deviation(const PoissonMixture& mix, int samples, std::uint64_t seed);

VerificationReport run_bound_check(const VerificationTask& task);
VerificationReport run_equality_check(const VerificationTask& task);
VerificationReport run_monotonicity_check(const VerificationTask& task);
VerificationReport run_harnack_check(const VerificationTask& task);
VerificationReport run_barrier_check(const VerificationTask& task);
VerificationReport run_bochner_check(const VerificationTask& task);
VerificationReport run_solver_cross_check(const VerificationTask& task);
VerificationReport run_task(const VerificationTask& task);

enum class ReportFormat { Json, Csv };

std::string report_to_json(const VerificationReport& report);
std::string report_to_csv(const VerificationReport& report);
void emit_report(const VerificationReport& report, ReportFormat format,
                 const std::string& path);

}  // namespace cygrad
