"""Resummation of divergent series by the generalized binomial transform."""

from ._resum import (
    ConvergenceError,
    DegenerateError,
    DomainError,
    NoCandidate,
    NoStationaryPoint,
    RangeError,
    c_max,
    estimate_alpha,
    estimate_energy,
    estimate_energy_coupling,
    estimate_theta1,
    fbar_poly,
    laplace_pade_limit,
    laplace_pms,
    perturbation_coefficients,
    polynomial_roots,
    reference_energy,
    theta_ladder,
)

__all__ = [name for name in dir() if not name.startswith("_")]
