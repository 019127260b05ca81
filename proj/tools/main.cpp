#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "cygrad/verify.hpp"

namespace {

using namespace cygrad;

struct CommonOpts {
  int n = 2;
  double K = 0.0;
  double R = 1.0;
  std::string bound = "euclid";
  std::uint64_t seed = 0;
  int samples = 10000;
  double tol = -1.0;  // per-task default when negative
  std::string out = "-";
  std::string format = "json";
  std::string mixture_file;
  std::string warp;
  std::string boundary_file;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--n", o.n, "dimension");
  cmd->add_option("--K", o.K, "curvature lower bound / space-form curvature");
  cmd->add_option("--R", o.R, "geodesic ball radius");
  cmd->add_option("--bound", o.bound, "euclid|conformal|surface2d|manifold");
  cmd->add_option("--seed", o.seed, "sampling seed");
  cmd->add_option("--samples", o.samples, "sample count");
  cmd->add_option("--tol", o.tol, "tolerance override");
  cmd->add_option("--out", o.out, "output path ('-' = stdout)");
  cmd->add_option("--format", o.format, "json|csv");
  cmd->add_option("--mixture", o.mixture_file, "Poisson mixture JSON file");
  cmd->add_option("--warp", o.warp, "flat|sphere|hyperbolic or a warp JSON file");
  cmd->add_option("--boundary", o.boundary_file, "boundary Fourier data JSON file");
}

std::vector<BoundaryCoeff> load_boundary(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open boundary file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto j = nlohmann::json::parse(ss.str());
  std::vector<BoundaryCoeff> out;
  for (const auto& row : j)  // rows are [m, Re c_m, Im c_m]
    out.push_back({row.at(0).get<int>(),
                   {row.at(1).get<double>(), row.at(2).get<double>()}});
  return out;
}

VerificationTask build_task(TaskKind kind, const CommonOpts& o, double default_tol) {
  VerificationTask task;
  task.kind = kind;
  task.bound = bound_kind_from_string(o.bound);
  task.geom = {o.K, o.n, o.R};
  task.sampling.seed = o.seed;
  task.sampling.count = o.samples;
  task.tol = o.tol >= 0 ? o.tol : default_tol;
  if (!o.mixture_file.empty())
    task.mixture = PoissonMixture::from_json_file(o.mixture_file);
  if (!o.warp.empty()) {
    if (o.warp == "flat" || o.warp == "sphere" || o.warp == "hyperbolic") {
      task.warp_name = o.warp;
    } else {
      std::ifstream in(o.warp);
      if (!in) throw std::runtime_error("cannot open warp file: " + o.warp);
      std::stringstream ss;
      ss << in.rdbuf();
      const auto j = nlohmann::json::parse(ss.str());
      for (const auto& row : j.at("coeffs"))
        task.warp_coeffs.push_back({row.at(0).get<int>(), row.at(1).get<double>()});
    }
  }
  if (!o.boundary_file.empty()) task.boundary = load_boundary(o.boundary_file);
  return task;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification harness for sharp gradient bounds on geodesic balls"};
  app.require_subcommand(1);

  struct Sub {
    TaskKind kind;
    double default_tol;
    CommonOpts opts;
  };
  std::vector<std::pair<std::string, Sub>> subs = {
      {"bounds", {TaskKind::Bounds, 1e-9, {}}},
      {"equality", {TaskKind::Equality, 1e-10, {}}},
      {"monotonicity", {TaskKind::Monotonicity, 1e-8, {}}},
      {"harnack", {TaskKind::Harnack, 1e-9, {}}},
      {"barrier", {TaskKind::Barrier, 1e-10, {}}},
      {"bochner", {TaskKind::Bochner, 1e-5, {}}},
      {"solve-cross", {TaskKind::SolverCross, 0.0, {}}},
  };
  for (auto& [name, sub] : subs) add_common(app.add_subcommand(name), sub.opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (auto& [name, sub] : subs) {
      if (!app.get_subcommand(name)->parsed()) continue;
      const auto task = build_task(sub.kind, sub.opts, sub.default_tol);
      const auto report = run_task(task);
      emit_report(report,
                  sub.opts.format == "csv" ? ReportFormat::Csv : ReportFormat::Json,
                  sub.opts.out);
      return report.pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
