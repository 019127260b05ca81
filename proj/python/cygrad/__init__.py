"""Sharp gradient estimates for positive harmonic functions on curved balls.

Thin Python layer over the C++ core: curvature special functions, the four
sharp bounds, Poisson kernels and mixtures, surface-of-revolution solver,
and the batch verification harness.
"""

from ._core import (
    BarrierParams,
    BoundKind,
    GeometrySpec,
    MixtureTerm,
    PoissonKernelSpec,
    PoissonMixture,
    SolvedHarmonic,
    TaskKind,
    VerificationReport,
    VerificationTask,
    WarpProfile,
    barrier_chain_slack,
    barrier_constants,
    barrier_residual_2d,
    bound_2d,
    bound_conformal,
    bound_euclid,
    bound_manifold,
    chart_radius,
    check_curvature_lower_bound,
    cs,
    geodesic_radius,
    harnack_envelope,
    laplacian_comparison,
    omega_n,
    optimal_nu,
    poisson_eval,
    run_task,
    sn,
    solve_dirichlet,
    warp_curvature,
)

__all__ = [
    "BarrierParams",
    "BoundKind",
    "GeometrySpec",
    "MixtureTerm",
    "PoissonKernelSpec",
    "PoissonMixture",
    "SolvedHarmonic",
    "TaskKind",
    "VerificationReport",
    "VerificationTask",
    "WarpProfile",
    "barrier_chain_slack",
    "barrier_constants",
    "barrier_residual_2d",
    "bound_2d",
    "bound_conformal",
    "bound_euclid",
    "bound_manifold",
    "chart_radius",
    "check_curvature_lower_bound",
    "cs",
    "geodesic_radius",
    "harnack_envelope",
    "laplacian_comparison",
    "omega_n",
    "optimal_nu",
    "poisson_eval",
    "run_task",
    "sn",
    "solve_dirichlet",
    "warp_curvature",
]
