"""Linearized fluctuation dynamics: drift and diffusion matrices, stability.

Quadrature ordering is fixed throughout the package as

    (dq, dp, dX_c, dY_c, dX_w1, dY_w1, dX_w2, dY_w2)

i.e. mechanical position/momentum, then optical and the two microwave
field quadratures X = (a + a^dag)/sqrt(2), Y = (a - a^dag)/(i sqrt(2)).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import OperatingPoint, SystemParams

#: Mode order backing the quadrature layout above.
MODE_NAMES = ("Mecha", "Opto", "Micro1", "Micro2")

#: Relative stability margin; a system counts as stable only when every
#: eigenvalue real part is below -STABILITY_MARGIN * omega_m, so that a
#: marginal drift matrix is never fed into the steady-state solver.
STABILITY_MARGIN = 1e-9


class EigenSolverError(RuntimeError):
    """The eigenvalue routine failed; distinct from an unstable verdict."""


@dataclass(frozen=True)
class DriftMatrix:
    """8x8 generator of the linear fluctuation dynamics, entries in rad/s."""

    a: np.ndarray

    def scaled(self, factor: float) -> "DriftMatrix":
        """Same dynamics with all rates multiplied by `factor`.

        Used to work in units of omega_m (factor = 1/omega_m), which keeps
        the matrix entries O(1); the layout contract is unchanged.
        """
        return DriftMatrix(self.a * factor)

    @property
    def rate_unit(self) -> float:
        """The mechanical frequency in this matrix's own units (entry [0,1])."""
        return float(self.a[0, 1])


@dataclass(frozen=True)
class DiffusionMatrix:
    """8x8 diagonal noise-strength matrix, entries in rad/s."""

    d: np.ndarray

    def scaled(self, factor: float) -> "DiffusionMatrix":
        return DiffusionMatrix(self.d * factor)


@dataclass(frozen=True)
class StabilityReport:
    """Spectral stability verdict for a drift matrix."""

    stable: bool
    max_real_eig: float
    eigenvalues: np.ndarray


def drift_matrix(p: SystemParams, op: OperatingPoint) -> DriftMatrix:
    """Assemble the drift matrix at the given operating point.

    The mechanical momentum row collects all three couplings on the X
    quadratures; each field block is a damped rotation [[-kappa, delta],
    [-delta, -kappa]] whose Y row is driven by g * dq.
    """
    kc, km = p.kappa_c, p.kappa_m
    kw1, kw2 = p.kappa_w
    dc = op.delta_c
    dw1, dw2 = op.delta_w
    gc = op.g_c
    gw1, gw2 = op.g_w
    a = np.zeros((8, 8))
    a[0, 1] = p.omega_m
    a[1, 0] = -p.omega_m
    a[1, 1] = -km
    a[1, 2] = gc
    a[1, 4] = gw1
    a[1, 6] = gw2
    a[2, 2] = -kc
    a[2, 3] = dc
    a[3, 0] = gc
    a[3, 2] = -dc
    a[3, 3] = -kc
    a[4, 4] = -kw1
    a[4, 5] = dw1
    a[5, 0] = gw1
    a[5, 4] = -dw1
    a[5, 5] = -kw1
    a[6, 6] = -kw2
    a[6, 7] = dw2
    a[7, 0] = gw2
    a[7, 6] = -dw2
    a[7, 7] = -kw2
    return DriftMatrix(a)


def diffusion_matrix(p: SystemParams, op: OperatingPoint) -> DiffusionMatrix:
    """Diagonal noise matrix for delta-correlated baths.

    Position carries no direct noise; the momentum entry is the Markovian
    Brownian strength kappa_m (2 n_mech + 1); each field quadrature gets
    kappa (2 N + 1) with the optical occupation taken as zero (an optical
    photon is far above kB*T at any cryogenic temperature).
    """
    dm = p.kappa_m * (2.0 * op.n_mech + 1.0)
    dw1 = p.kappa_w[0] * (2.0 * op.n_w[0] + 1.0)
    dw2 = p.kappa_w[1] * (2.0 * op.n_w[1] + 1.0)
    return DiffusionMatrix(
        np.diag([0.0, dm, p.kappa_c, p.kappa_c, dw1, dw1, dw2, dw2])
    )


def stability(a: DriftMatrix) -> StabilityReport:
    """Decide stability from the spectrum of the drift matrix.

    Stable means every eigenvalue real part is < -margin, with the margin
    tied to the matrix's own rate unit so the verdict is invariant under
    a uniform rescaling of time.
    """
    try:
        eigs = np.linalg.eigvals(a.a)
    except np.linalg.LinAlgError as exc:
        raise EigenSolverError(f"eigenvalue computation failed: {exc}") from exc
    max_real = float(eigs.real.max())
    eps = STABILITY_MARGIN * abs(a.rate_unit)
    return StabilityReport(
        stable=max_real < -eps, max_real_eig=max_real, eigenvalues=eigs
    )
