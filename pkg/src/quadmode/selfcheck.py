"""Built-in oracle and invariant suite.

Runs the closed-form and cross-check cases that guard the numerical core:
analytic spectra and fixed points of decoupled blocks, the two-mode
squeezed-vacuum family, agreement between the production steady-state
solver, the independent time-integration oracle and the alternative
Schur backend, and physicality of a representative operating point.
Used by the `check` CLI subcommand and the /check service endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dynamics import (
    DiffusionMatrix,
    DriftMatrix,
    diffusion_matrix,
    drift_matrix,
    stability,
)
from .gaussian import (
    BipartiteCM,
    Subsystem,
    integrate_covariance_oracle,
    log_negativity,
    reduce_bipartite,
    solve_lyapunov,
)
from .model import steady_state, thermal_occupation
from .presets import BASE_OMEGA_M, BASE_PARAMS


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _tmsv(r: float) -> BipartiteCM:
    # extended precision: float64 cosh/sinh entries at r = 5 would already
    # cost ~1e-8 of the recovered eta
    two_r = np.longdouble(2.0) * np.longdouble(r)
    c, s = 0.5 * np.cosh(two_r), 0.5 * np.sinh(two_r)
    v = np.zeros((4, 4), dtype=np.longdouble)
    v[:2, :2] = c * np.eye(2)
    v[2:, 2:] = c * np.eye(2)
    v[:2, 2:] = s * np.diag([1.0, -1.0])
    v[2:, :2] = s * np.diag([1.0, -1.0])
    return BipartiteCM(v=v.astype(float), v_ext=v)


def _reference_point():
    """9 GHz twin circuits at delta_w = 0.1 omega_m, matrices in omega_m units."""
    p = BASE_PARAMS
    om = p.omega_m
    point = steady_state(p, om, (0.1 * om, -0.1 * om))
    a = drift_matrix(p, point).scaled(1.0 / om)
    d = diffusion_matrix(p, point).scaled(1.0 / om)
    return a, d


def run_checks() -> list[CheckResult]:
    results: list[CheckResult] = []

    def record(name: str, passed: bool, detail: str) -> None:
        results.append(CheckResult(name, bool(passed), detail))

    # zero-temperature limit and a frozen cold-membrane occupation
    n0 = thermal_occupation(BASE_OMEGA_M, 0.0)
    record("thermal_zero_T", n0 == 0.0, f"n(T=0) = {n0}")
    n_m = thermal_occupation(BASE_OMEGA_M, 15e-3)
    record(
        "thermal_membrane_15mK",
        abs(n_m - 30.757594904803614) < 1e-9,
        f"n = {n_m!r}",
    )

    # decoupled cavity block: analytic spectrum and vacuum fixed point
    kappa, delta = 0.37, 1.21
    block = np.array([[-kappa, delta], [-delta, -kappa]])
    a8 = np.zeros((8, 8))
    a8[0, 1] = 1.0
    a8[1, 0] = -1.0
    a8[1, 1] = -2e-5
    for k in (2, 4, 6):
        a8[k:k + 2, k:k + 2] = block
    a = DriftMatrix(a8)
    eigs = np.sort_complex(stability(a).eigenvalues)
    expected = []
    for k in range(3):
        expected += [-kappa + 1j * delta, -kappa - 1j * delta]
    km = 2e-5
    disc = km * km - 4.0
    root = np.sqrt(complex(disc))
    expected += [(-km + root) / 2, (-km - root) / 2]
    err = np.abs(eigs - np.sort_complex(np.array(expected))).max()
    record("decoupled_spectrum", err < 1e-10, f"max eig error {err:.2e}")

    d = DiffusionMatrix(
        np.diag([0.0, km, kappa, kappa, kappa, kappa, kappa, kappa])
    )
    v = solve_lyapunov(a, d)
    dev = np.abs(v.v[2:, 2:] - 0.5 * np.eye(6)).max()
    record("vacuum_fixed_point", dev < 1e-12, f"max |V - I/2| = {dev:.2e}")

    # two-mode squeezed vacuum: E_N = 2r exactly
    worst = 0.0
    for r in (0.0, 0.1, 0.5, 1.0, 2.0, 5.0):
        worst = max(worst, abs(log_negativity(_tmsv(r)) - 2.0 * r))
    record("tmsv_closed_form", worst < 1e-10, f"max |E_N - 2r| = {worst:.2e}")

    # production solver vs time-integration oracle vs Schur backend
    a, d = _reference_point()
    v = solve_lyapunov(a, d)
    v_oracle = integrate_covariance_oracle(a, d)
    dev = np.abs(v.v - v_oracle.v).max()
    record("solver_vs_oracle", dev < 1e-6, f"max entry diff {dev:.2e}")
    v_schur = solve_lyapunov(a, d, method="schur")
    dev = np.abs(v.v - v_schur.v).max()
    record("kron_vs_schur", dev < 1e-10, f"max entry diff {dev:.2e}")

    # physicality and a positive microwave-microwave entanglement
    worst_eig = v.min_uncertainty_eig()
    record("uncertainty_relation", worst_eig > -1e-9, f"min eig {worst_eig:.2e}")
    en = log_negativity(reduce_bipartite(v, Subsystem.MICRO1, Subsystem.MICRO2))
    record("reference_entanglement", en > 0.5, f"E_N(Micro1,Micro2) = {en:.4f}")

    return results
