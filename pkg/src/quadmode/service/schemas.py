"""Request/response models of the HTTP service."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel


class ServiceInfo(BaseModel):
    name: str
    version: str
    endpoints: list[str]


class PresetInfo(BaseModel):
    id: str
    description: str
    curves: list[str]
    axis_target: str
    grid_count: int


class EvalReport(BaseModel):
    """Single-point evaluation.

    Rates are in omega_m units; amplitudes and occupations dimensionless.
    e_n maps every mode pair to its logarithmic negativity, or null for an
    unstable point.  lyapunov_residual is the Frobenius norm of the
    steady-state defect (null when unstable).
    """

    stable: bool
    max_real_eig_over_omega_m: float
    g_c_over_omega_m: float
    g_w_over_omega_m: tuple[float, float]
    alpha_s: float
    beta_s: tuple[float, float]
    q_s: float
    n_mech: float
    n_w: tuple[float, float]
    bare_delta_c_over_omega_m: float
    bare_delta_w_over_omega_m: tuple[float, float]
    e_n: dict[str, Optional[float]]
    lyapunov_residual: Optional[float]


class CheckOutcome(BaseModel):
    name: str
    passed: bool
    detail: str


class CheckReport(BaseModel):
    passed: bool
    results: list[CheckOutcome]
