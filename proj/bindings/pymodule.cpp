#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cygrad/bounds.hpp"
#include "cygrad/harmonic.hpp"
#include "cygrad/revolution.hpp"
#include "cygrad/spaceform.hpp"
#include "cygrad/verify.hpp"

namespace py = pybind11;
using namespace cygrad;

namespace {

// std::span is awkward through pybind; accept vectors at the boundary
double py_poisson_eval(const PoissonKernelSpec& s, const std::vector<double>& x) {
  return poisson_eval(s, x);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "sharp gradient bounds for positive harmonic functions on geodesic balls";

  m.def("sn", &sn, py::arg("K"), py::arg("r"));
  m.def("cs", &cs, py::arg("K"), py::arg("r"));
  m.def("chart_radius", &chart_radius, py::arg("K"), py::arg("r"));
  m.def("geodesic_radius", &geodesic_radius, py::arg("K"), py::arg("rho"));
  m.def("laplacian_comparison", &laplacian_comparison, py::arg("n"), py::arg("K"),
        py::arg("r"));

  m.def("omega_n", &omega_n, py::arg("n"));
  m.def("bound_euclid", &bound_euclid, py::arg("n"), py::arg("R"), py::arg("s"));
  m.def("bound_conformal", &bound_conformal, py::arg("n"), py::arg("K"), py::arg("R"),
        py::arg("r"));
  m.def("bound_2d", &bound_2d, py::arg("K"), py::arg("R"), py::arg("r"));
  m.def("bound_manifold", &bound_manifold, py::arg("n"), py::arg("K"), py::arg("R"),
        py::arg("r"));
  m.def("harnack_envelope", &harnack_envelope, py::arg("n"), py::arg("K"), py::arg("R"),
        py::arg("r"));
  m.def("optimal_nu", &optimal_nu, py::arg("n"));
  m.def("barrier_residual_2d", &barrier_residual_2d, py::arg("K"), py::arg("R"),
        py::arg("r"));
  m.def("barrier_chain_slack", &barrier_chain_slack, py::arg("n"), py::arg("nu"),
        py::arg("K"), py::arg("R"), py::arg("r"));

  py::class_<BarrierParams>(m, "BarrierParams")
      .def_readonly("n", &BarrierParams::n)
      .def_readonly("nu", &BarrierParams::nu)
      .def_readonly("q_nu", &BarrierParams::q_nu)
      .def_readonly("C2", &BarrierParams::C2);
  m.def("barrier_constants", &barrier_constants, py::arg("n"), py::arg("nu"));

  py::class_<PoissonKernelSpec>(m, "PoissonKernelSpec")
      .def(py::init<int, double, std::vector<double>>(), py::arg("n"), py::arg("R"),
           py::arg("pole"));
  m.def("poisson_eval", &py_poisson_eval, py::arg("spec"), py::arg("x"));

  py::class_<MixtureTerm>(m, "MixtureTerm")
      .def(py::init([](double lam, std::vector<double> pole) {
             return MixtureTerm{lam, std::move(pole)};
           }),
           py::arg("lam"), py::arg("pole"));
  py::class_<PoissonMixture>(m, "PoissonMixture")
      .def(py::init<int, double, std::vector<MixtureTerm>>(), py::arg("n"), py::arg("R"),
           py::arg("terms"))
      .def_static("from_json", &PoissonMixture::from_json_text)
      .def("eval_grad", [](const PoissonMixture& mix, const std::vector<double>& x) {
        const auto eg = mixture_eval_grad(mix, x);
        return py::make_tuple(eg.value, eg.grad_log);
      });

  py::class_<WarpProfile>(m, "WarpProfile")
      .def_static("by_name", &WarpProfile::by_name)
      .def_static("polynomial", &WarpProfile::polynomial)
      .def_readonly("name", &WarpProfile::name);
  m.def("warp_curvature", &warp_curvature, py::arg("warp"), py::arg("r"));
  m.def(
      "check_curvature_lower_bound",
      [](const WarpProfile& w, double R, double K, int grid) {
        const auto c = check_curvature_lower_bound(w, R, K, grid);
        return py::make_tuple(c.ok, c.min_curvature);
      },
      py::arg("warp"), py::arg("R"), py::arg("K"), py::arg("grid_size") = 1000);

  py::class_<SolvedHarmonic>(m, "SolvedHarmonic")
      .def("eval", &SolvedHarmonic::eval)
      .def("grad_log_norm", &SolvedHarmonic::grad_log_norm)
      .def("boundary_value", &SolvedHarmonic::boundary_value);
  m.def(
      "solve_dirichlet",
      [](const WarpProfile& warp, double R,
         const std::vector<std::tuple<int, double, double>>& boundary) {
        DirichletProblem p{warp, R, {}};
        for (const auto& [mm, re, im] : boundary)
          p.boundary.push_back({mm, {re, im}});
        return assemble_and_eval(p);
      },
      py::arg("warp"), py::arg("R"), py::arg("boundary"));

  py::class_<GeometrySpec>(m, "GeometrySpec")
      .def(py::init([](double K, int n, double R) {
             return GeometrySpec{K, n, R};
           }),
           py::arg("K"), py::arg("n"), py::arg("R"))
      .def_readwrite("K", &GeometrySpec::K)
      .def_readwrite("n", &GeometrySpec::n)
      .def_readwrite("R", &GeometrySpec::R);

  py::enum_<TaskKind>(m, "TaskKind")
      .value("Bounds", TaskKind::Bounds)
      .value("Equality", TaskKind::Equality)
      .value("Monotonicity", TaskKind::Monotonicity)
      .value("Harnack", TaskKind::Harnack)
      .value("Barrier", TaskKind::Barrier)
      .value("Bochner", TaskKind::Bochner)
      .value("SolverCross", TaskKind::SolverCross);
  py::enum_<BoundKind>(m, "BoundKind")
      .value("EuclidBall", BoundKind::EuclidBall)
      .value("ConformalSpaceForm", BoundKind::ConformalSpaceForm)
      .value("Surface2D", BoundKind::Surface2D)
      .value("ManifoldND", BoundKind::ManifoldND);

  py::class_<VerificationTask>(m, "VerificationTask")
      .def(py::init<>())
      .def_readwrite("kind", &VerificationTask::kind)
      .def_readwrite("bound", &VerificationTask::bound)
      .def_readwrite("geom", &VerificationTask::geom)
      .def_readwrite("tol", &VerificationTask::tol)
      .def_readwrite("mixture", &VerificationTask::mixture)
      .def_property(
          "seed", [](const VerificationTask& t) { return t.sampling.seed; },
          [](VerificationTask& t, std::uint64_t s) { t.sampling.seed = s; })
      .def_property(
          "samples", [](const VerificationTask& t) { return t.sampling.count; },
          [](VerificationTask& t, int c) { t.sampling.count = c; });

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("pass_", &VerificationReport::pass)
      .def_readonly("max_violation", &VerificationReport::max_violation)
      .def_readonly("worst_point", &VerificationReport::worst_point)
      .def("to_json", [](const VerificationReport& r) { return report_to_json(r); });

  m.def("run_task", &run_task);
}
