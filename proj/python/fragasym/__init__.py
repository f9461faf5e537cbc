"""Critical fragmentation equation: solvers, Mellin inversion, asymptotics."""

from ._core import (
    AsymptoticValue,
    ConditionHResult,
    F_exponent,
    FragmentationKernel,
    G_exponent,
    InitialDatum,
    KernelAtom,
    LogGridSolution,
    RegionReport,
    SaddleData,
    condition_h,
    inverse_mellin_u,
    is_admissible,
    leading_term,
    picard_solve,
    poisson_approx,
    region_report,
    saddle_point,
    simulate_log_grid,
    theorem3b_series,
)

__all__ = [
    "AsymptoticValue",
    "ConditionHResult",
    "F_exponent",
    "FragmentationKernel",
    "G_exponent",
    "InitialDatum",
    "KernelAtom",
    "LogGridSolution",
    "RegionReport",
    "SaddleData",
    "condition_h",
    "inverse_mellin_u",
    "is_admissible",
    "leading_term",
    "picard_solve",
    "poisson_approx",
    "region_report",
    "saddle_point",
    "simulate_log_grid",
    "theorem3b_series",
]
