# SPDX-License-Identifier: Apache-2.0
"""Non-uniform linear antenna array design and analysis for mmWave LoS MIMO."""

from ._core import (
    ArrayLayout,
    ConvergenceError,
    FeketeConfig,
    FeketeSolution,
    GroupwiseDeployment,
    LinkGeometry,
    NotAchievableError,
    Spectrum,
    TauMinResult,
    TauSearchConfig,
    ThetaFit,
    ThetaOptimum,
    WaterfillAllocation,
    __version__,
    capacity_equal_power,
    capacity_waterfilling,
    compute_tau,
    default_theta_grid,
    distance_to_tau,
    emg,
    f_MK,
    fekete_certificate,
    fekete_points,
    fit_theta,
    groupwise_deploy,
    groupwise_fekete_deploy,
    lagrange_basis,
    layout_spectrum,
    max_achievable_emg,
    normalize_spectrum,
    optimize_theta_for_taumin,
    pat_points,
    rayleigh_distance,
    tau_min_search,
    tau_to_distance,
    tau_to_distance_oriented,
    ula_layout,
    waterfill_powers,
)

__all__ = [
    "ArrayLayout",
    "ConvergenceError",
    "FeketeConfig",
    "FeketeSolution",
    "GroupwiseDeployment",
    "LinkGeometry",
    "NotAchievableError",
    "Spectrum",
    "TauMinResult",
    "TauSearchConfig",
    "ThetaFit",
    "ThetaOptimum",
    "WaterfillAllocation",
    "__version__",
    "capacity_equal_power",
    "capacity_waterfilling",
    "compute_tau",
    "default_theta_grid",
    "distance_to_tau",
    "emg",
    "f_MK",
    "fekete_certificate",
    "fekete_points",
    "fit_theta",
    "groupwise_deploy",
    "groupwise_fekete_deploy",
    "lagrange_basis",
    "layout_spectrum",
    "max_achievable_emg",
    "normalize_spectrum",
    "optimize_theta_for_taumin",
    "pat_points",
    "rayleigh_distance",
    "tau_min_search",
    "tau_to_distance",
    "tau_to_distance_oriented",
    "ula_layout",
    "waterfill_powers",
]
