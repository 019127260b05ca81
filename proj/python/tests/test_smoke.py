import json
import math

import pytest

import cygrad


def test_special_functions():
    assert cygrad.sn(1.0, math.pi / 2) == pytest.approx(1.0, abs=1e-14)
    assert cygrad.cs(-1.0, 1.0) == pytest.approx(math.cosh(1.0), rel=1e-14)
    assert cygrad.chart_radius(-1.0, 2.0) == pytest.approx(math.tanh(1.0), rel=1e-14)
    r = cygrad.geodesic_radius(1.0, 1.0)
    assert r == pytest.approx(math.pi / 2, rel=1e-12)
    assert cygrad.laplacian_comparison(3, 0.0, 2.0) == pytest.approx(1.0, rel=1e-14)


def test_bounds():
    assert cygrad.bound_euclid(2, 1.0, 0.5) == pytest.approx(8.0 / 3.0, rel=1e-14)
    assert cygrad.bound_conformal(2, 0.0, 1.0, 0.5) == pytest.approx(
        cygrad.bound_2d(0.0, 1.0, 0.5), rel=1e-12
    )
    assert cygrad.bound_manifold(3, 0.0, 1.0, 0.0) == pytest.approx(6.0, rel=1e-14)
    lo, hi = cygrad.harnack_envelope(2, 0.0, 1.0, 0.5)
    assert lo == pytest.approx(1.0 / 3.0, rel=1e-14)
    assert hi == pytest.approx(3.0, rel=1e-14)
    with pytest.raises(ValueError):
        cygrad.bound_euclid(2, 1.0, 1.5)


def test_barrier_constants():
    nu, fmin = cygrad.optimal_nu(3)
    assert nu == pytest.approx(1.0 / 3.0)
    assert fmin == 9.0
    assert abs(cygrad.barrier_residual_2d(1.0, 1.0, 0.5)) <= 1e-11
    assert cygrad.barrier_chain_slack(4, 0.4, 0.0, 1.0, 0.5) >= 0.0
    params = cygrad.barrier_constants(4, 0.4)
    assert params.C2 == pytest.approx(25.0, rel=1e-13)


def test_poisson_mixture():
    mix = cygrad.PoissonMixture(
        2, 1.0, [cygrad.MixtureTerm(1.0, [1.0, 0.0]), cygrad.MixtureTerm(0.5, [0.0, 1.0])]
    )
    value, grad_log = mix.eval_grad([0.1, 0.2])
    assert value > 0.0
    assert len(grad_log) == 2
    spec = cygrad.PoissonKernelSpec(2, 1.0, [1.0, 0.0])
    assert cygrad.poisson_eval(spec, [0.0, 0.0]) == pytest.approx(
        1.0 / (2.0 * math.pi), rel=1e-14
    )


def test_solver():
    warp = cygrad.WarpProfile.by_name("sphere")
    assert cygrad.warp_curvature(warp, 0.5) == pytest.approx(1.0, rel=1e-12)
    ok, min_curv = cygrad.check_curvature_lower_bound(warp, 1.0, 1.0)
    assert ok
    sol = cygrad.solve_dirichlet(warp, 1.0, [(0, 1.0, 0.0), (1, 0.2, 0.0)])
    assert sol.eval(0.0, 0.0) > 0.0
    assert sol.grad_log_norm(0.5, 1.0) <= cygrad.bound_2d(1.0, 1.0, 0.5) * (1 + 1e-4)


def test_run_task_report():
    task = cygrad.VerificationTask()
    task.kind = cygrad.TaskKind.Bounds
    task.bound = cygrad.BoundKind.EuclidBall
    task.geom = cygrad.GeometrySpec(K=0.0, n=2, R=1.0)
    task.seed = 42
    task.samples = 2000
    task.tol = 1e-9
    task.mixture = cygrad.PoissonMixture(
        2, 1.0, [cygrad.MixtureTerm(1.0, [1.0, 0.0]), cygrad.MixtureTerm(0.3, [-1.0, 0.2])]
    )
    report = cygrad.run_task(task)
    assert report.pass_
    assert report.max_violation <= 1e-9
    parsed = json.loads(report.to_json())
    assert parsed["task"] == "bounds"
    assert parsed["result"]["pass"] is True


def test_determinism():
    task = cygrad.VerificationTask()
    task.kind = cygrad.TaskKind.Harnack
    task.geom = cygrad.GeometrySpec(K=-1.0, n=3, R=1.0)
    task.seed = 7
    task.samples = 1000
    task.mixture = cygrad.PoissonMixture(3, 1.0, [cygrad.MixtureTerm(1.0, [0.0, 0.0, 1.0])])

    def strip(rep):
        d = json.loads(rep.to_json())
        d.pop("wall_ms")
        return json.dumps(d)

    assert strip(cygrad.run_task(task)) == strip(cygrad.run_task(task))
