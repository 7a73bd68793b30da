"""Feshbach-Villars spin-1/2 scattering off a tanh barrier and its step limit."""

from ._core import *  # noqa: F401,F403
from ._core import (
    DomainError,
    EnergyRegime,
    Error,
    PhysicalParams,
    ThresholdError,
)

__all__ = [
    "DomainError",
    "EnergyRegime",
    "Error",
    "PhysicalParams",
    "ThresholdError",
    "SmoothSolution",
    "StepSolution",
    "check_boundary",
    "classify",
    "coefficients",
    "derive",
    "gamma",
    "hyp2f1",
    "limit_convergence",
    "oracle_suite",
]

__version__ = "0.1.0"
