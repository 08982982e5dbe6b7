"""Steady-state covariance matrix and logarithmic negativity.

Conventions: quadratures X = (a + a^dag)/sqrt(2), Y = (a - a^dag)/(i sqrt(2)),
so the vacuum variance is 1/2 per quadrature, [X, Y] = i, the symplectic
form is the block-diagonal stack of [[0, 1], [-1, 0]], physicality reads
V + (i/2) Omega >= 0, and a bipartition is separable iff its smallest
partially transposed symplectic eigenvalue is >= 1/2.  Every threshold in
this module is tied to this one convention.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .dynamics import DiffusionMatrix, DriftMatrix, stability

#: Extended-precision float used to refine and carry the solved covariance.
#: On x86 this is the 80-bit type (eps ~ 1e-19); on platforms where long
#: double is plain double everything still runs, with reduced margins.
LONG = np.longdouble

#: Tolerances of the solver/measure contracts (all in the 1/2-vacuum units).
RESIDUAL_RTOL = 1e-10          # Lyapunov residual vs max(||D||_F, rate unit)
SYMMETRY_ATOL = 1e-12          # allowed asymmetry of a covariance matrix
UNCERTAINTY_TOL = 1e-9         # min eig(V + i/2 Omega) must exceed -this
NUMERICAL_DUST = 1e-12         # clamping floor for radicand / eta^2


class UnstableSystemError(RuntimeError):
    """A steady state was requested for a drift matrix that is not stable."""


class LyapunovSolveError(RuntimeError):
    """The steady-state solve failed or did not meet its residual contract."""


class NonConvergenceError(RuntimeError):
    """Time integration did not reach the stationary state within horizon."""


class UnphysicalCovarianceError(ValueError):
    """A covariance matrix violates physicality beyond numerical dust."""


class Subsystem(enum.Enum):
    """The four modes, named as in the sweep outputs."""

    MECHA = "Mecha"
    OPTO = "Opto"
    MICRO1 = "Micro1"
    MICRO2 = "Micro2"

    @property
    def mode_index(self) -> int:
        return _MODE_INDEX[self]

    @property
    def quadrature_pair(self) -> tuple[int, int]:
        i = self.mode_index
        return (2 * i, 2 * i + 1)


_MODE_INDEX = {
    Subsystem.MECHA: 0,
    Subsystem.OPTO: 1,
    Subsystem.MICRO1: 2,
    Subsystem.MICRO2: 3,
}


def symplectic_form(n_modes: int = 4) -> np.ndarray:
    """Block-diagonal stack of [[0, 1], [-1, 0]], shape (2n, 2n)."""
    om = np.zeros((2 * n_modes, 2 * n_modes))
    for k in range(n_modes):
        om[2 * k, 2 * k + 1] = 1.0
        om[2 * k + 1, 2 * k] = -1.0
    return om


@dataclass(frozen=True)
class CovarianceMatrix:
    """8x8 symmetric steady-state covariance matrix, dimensionless.

    `v` is the public float64 matrix.  `v_ext` is an extended-precision
    copy kept by the refined solver; downstream reductions use it when
    present so that strongly amplified states (entries up to ~1e7) do not
    lose the digits the entanglement measure lives in.
    """

    v: np.ndarray
    v_ext: np.ndarray | None = None

    def __post_init__(self) -> None:
        defect = float(np.abs(self.v - self.v.T).max())
        if defect > SYMMETRY_ATOL:
            raise ValueError(
                f"covariance matrix asymmetric by {defect:.3e}; symmetrize first"
            )

    def min_uncertainty_eig(self) -> float:
        """Smallest eigenvalue of V + (i/2) Omega (negative = unphysical)."""
        om = symplectic_form(self.v.shape[0] // 2)
        return float(np.linalg.eigvalsh(self.v + 0.5j * om).min())

    def require_physical(self, tol: float = UNCERTAINTY_TOL) -> None:
        worst = self.min_uncertainty_eig()
        if worst < -tol:
            raise UnphysicalCovarianceError(
                f"uncertainty relation violated: min eig(V + i/2 Omega) = {worst:.3e}"
            )


@dataclass(frozen=True)
class BipartiteCM:
    """4x4 covariance matrix of a bipartition, first party in rows 0..1."""

    v: np.ndarray
    v_ext: np.ndarray | None = None

    @property
    def v1(self) -> np.ndarray:
        return self.v[:2, :2]

    @property
    def v2(self) -> np.ndarray:
        return self.v[2:, 2:]

    @property
    def v3(self) -> np.ndarray:
        return self.v[:2, 2:]


def _kron_solve(a: np.ndarray, d: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Direct solve of the vectorized Lyapunov system (64 unknowns)."""
    n = a.shape[0]
    eye = np.eye(n)
    k = np.kron(eye, a) + np.kron(a, eye)
    v = np.linalg.solve(k, -d.flatten(order="F")).reshape((n, n), order="F")
    return 0.5 * (v + v.T), k


def _solve_refined(
    a: np.ndarray, d: np.ndarray, rate_unit: float, max_iter: int = 12
) -> np.ndarray:
    """Balanced Kron solve polished by extended-precision refinement.

    A first solve fixes the per-quadrature scale of V; the system is then
    rescaled so the unknown has O(1) entries (a diagonal congruence, which
    keeps small blocks accurate next to strongly amplified ones), and the
    solution is iteratively refined with residuals accumulated in extended
    precision until the true residual stops improving.  Returns V in
    extended precision.
    """
    v0, _ = _kron_solve(a, d)
    s = 1.0 / np.sqrt(np.maximum(np.abs(np.diag(v0)), 0.5))
    si = 1.0 / s
    ab = (s[:, None] * a) * si[None, :]
    _, k_b = _kron_solve(ab, (s[:, None] * d) * s[None, :])
    a_l = a.astype(LONG)
    d_l = d.astype(LONG)
    v_l = v0.astype(LONG)
    d_fro = float(np.sqrt((d * d).sum()))
    target = 0.01 * RESIDUAL_RTOL * max(d_fro, abs(rate_unit))
    best_res = math.inf
    best_v = v_l
    for _ in range(max_iter):
        r_l = a_l @ v_l + v_l @ a_l.T + d_l
        res = float(np.sqrt(float((r_l * r_l).sum())))
        if res < best_res:
            best_res = res
            best_v = v_l
        if res <= target:
            break
        rb = (s[:, None] * r_l.astype(float)) * s[None, :]
        try:
            dvb = np.linalg.solve(k_b, -rb.flatten(order="F"))
        except np.linalg.LinAlgError as exc:
            raise LyapunovSolveError(f"refinement solve failed: {exc}") from exc
        dv = (si[:, None] * dvb.reshape(a.shape, order="F")) * si[None, :]
        v_l = v_l + (0.5 * (dv + dv.T)).astype(LONG)
    v_l = best_v
    return 0.5 * (v_l + v_l.T)


def _residual_fro(a: np.ndarray, d: np.ndarray, v: np.ndarray) -> float:
    """Frobenius norm of A V + V A^T + D, accumulated in extended precision."""
    r = a.astype(LONG) @ v.astype(LONG) + v.astype(LONG) @ a.astype(LONG).T
    r = r + d.astype(LONG)
    return float(np.sqrt(float((r * r).sum())))


def solve_lyapunov(
    a: DriftMatrix, d: DiffusionMatrix, method: str = "kron"
) -> CovarianceMatrix:
    """Stationary covariance matrix V with A V + V A^T = -D.

    Refuses unstable drift matrices (the stationary state does not exist).
    `method="kron"` is the production path: a direct solve of the
    vectorized 64x64 system plus extended-precision refinement.
    `method="schur"` delegates to SciPy's Bartels-Stewart solver as an
    independent backend; both must satisfy the same residual contract.

    The residual ||A V + V A^T + D||_F must come out below
    RESIDUAL_RTOL * max(||D||_F, rate unit); otherwise the solve is
    reported as LyapunovSolveError rather than returned silently.
    """
    report = stability(a)
    if not report.stable:
        raise UnstableSystemError(
            "no stationary covariance: max Re eig = "
            f"{report.max_real_eig:.6e} (rate unit {a.rate_unit:.3e})"
        )
    if method == "kron":
        v_ext = _solve_refined(a.a, d.d, a.rate_unit)
        v = v_ext.astype(float)
    elif method == "schur":
        try:
            v = scipy.linalg.solve_continuous_lyapunov(a.a, -d.d)
        except (np.linalg.LinAlgError, ValueError) as exc:
            raise LyapunovSolveError(f"schur backend failed: {exc}") from exc
        v = 0.5 * (v + v.T)
        v_ext = v.astype(LONG)
    else:
        raise ValueError(f"unknown method {method!r}; use 'kron' or 'schur'")

    d_fro = float(np.linalg.norm(d.d))
    bound = RESIDUAL_RTOL * max(d_fro, abs(a.rate_unit))
    res = _residual_fro(a.a, d.d, v_ext)
    if not res <= bound:
        raise LyapunovSolveError(
            f"residual {res:.3e} exceeds contract {bound:.3e} "
            f"(method={method!r}); the system is too ill-conditioned"
        )
    return CovarianceMatrix(v=v, v_ext=v_ext)


def integrate_covariance_oracle(
    a: DriftMatrix,
    d: DiffusionMatrix,
    horizon: float | None = None,
    step: float | None = None,
) -> CovarianceMatrix:
    """Stationary covariance by integrating dV/dt = A V + V A^T + D from 0.

    Fixed-step classical Runge-Kutta, independent of the linear-algebra
    path, used as a cross-check oracle.  Defaults: horizon 16 decay times
    of the slowest mode, step 0.08 / (spectral radius).  Raises
    NonConvergenceError when dV/dt at the horizon is not yet negligible.
    """
    report = stability(a)
    if not report.stable:
        raise UnstableSystemError(
            f"integration diverges: max Re eig = {report.max_real_eig:.6e}"
        )
    rho = float(np.abs(report.eigenvalues).max())
    if horizon is None:
        horizon = 16.0 / abs(report.max_real_eig)
    if step is None:
        step = 0.08 / rho
    n_steps = int(math.ceil(horizon / step))
    h = horizon / n_steps
    am = a.a
    v = np.zeros_like(d.d)

    def rhs(m: np.ndarray) -> np.ndarray:
        return am @ m + m @ am.T + d.d

    for _ in range(n_steps):
        k1 = rhs(v)
        k2 = rhs(v + 0.5 * h * k1)
        k3 = rhs(v + 0.5 * h * k2)
        k4 = rhs(v + h * k3)
        v = v + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

    drift_norm = float(np.linalg.norm(rhs(v)))
    scale = max(float(np.linalg.norm(d.d)), abs(a.rate_unit))
    if drift_norm > 1e-8 * scale:
        raise NonConvergenceError(
            f"dV/dt norm {drift_norm:.3e} at horizon {horizon:.3e} "
            f"(scale {scale:.3e}); increase the horizon"
        )
    return CovarianceMatrix(v=0.5 * (v + v.T))


def residual_norm(
    a: DriftMatrix, d: DiffusionMatrix, v: CovarianceMatrix
) -> float:
    """Frobenius norm of the steady-state defect A V + V A^T + D."""
    m = v.v if v.v_ext is None else v.v_ext
    return _residual_fro(a.a, d.d, m)


def reduce_bipartite(
    v: CovarianceMatrix, s1: Subsystem, s2: Subsystem
) -> BipartiteCM:
    """Keep the rows/columns of two modes, first party first."""
    if s1 == s2:
        raise ValueError(f"bipartition needs two distinct subsystems, got {s1}")
    idx = [*s1.quadrature_pair, *s2.quadrature_pair]
    sub = np.ix_(idx, idx)
    return BipartiteCM(
        v=v.v[sub],
        v_ext=None if v.v_ext is None else v.v_ext[sub],
    )


def _det2(m: np.ndarray):
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def log_negativity(b: BipartiteCM) -> float:
    """Logarithmic negativity E_N = max(0, -ln 2 eta) of a bipartition.

    eta is the smaller symplectic eigenvalue of the partially transposed
    state, eta^2 = (Sigma - sqrt(Sigma^2 - 4 det V)) / 2 with
    Sigma = det V1 + det V2 - 2 det V3.  Evaluated in the cancellation-free
    quotient form, with det V through a Schur complement, so the measure
    stays accurate when the covariance entries are strongly amplified.

    Radicand or eta^2 values below -NUMERICAL_DUST signal a genuinely
    unphysical matrix and raise; mere numerical dust is clamped to zero.
    """
    m = b.v if b.v_ext is None else b.v_ext
    v1, v2, v3 = m[:2, :2], m[2:, 2:], m[:2, 2:]
    d1 = _det2(v1)
    d2 = _det2(v2)
    d3 = _det2(v3)
    if not (d1 > 0.0 and d2 > 0.0):
        raise UnphysicalCovarianceError(
            f"single-party determinants must be positive, got det V1 = "
            f"{float(d1):.3e}, det V2 = {float(d2):.3e}"
        )
    sigma = d1 + d2 - 2.0 * d3
    # det of the full 4x4 via the Schur complement of V1: the complement
    # subtracts the correlated part directly instead of cancelling two
    # near-equal 4th-order products.
    inv1 = np.array([[v1[1, 1], -v1[0, 1]], [-v1[1, 0], v1[0, 0]]]) / d1
    det4 = d1 * _det2(v2 - v3.T @ inv1 @ v3)
    radicand = sigma * sigma - 4.0 * det4
    if float(radicand) < -NUMERICAL_DUST:
        raise UnphysicalCovarianceError(
            f"discriminant {float(radicand):.3e} below the clamping floor; "
            "the bipartite covariance matrix is not physical"
        )
    if float(sigma) <= 0.0:
        raise UnphysicalCovarianceError(
            f"Sigma = {float(sigma):.3e} <= 0; the bipartite covariance "
            "matrix is not physical"
        )
    root = np.sqrt(radicand) if radicand > 0.0 else 0.0
    eta_sq = float(2.0 * det4 / (sigma + root))
    if eta_sq < -NUMERICAL_DUST:
        raise UnphysicalCovarianceError(
            f"eta^2 = {eta_sq:.3e} below the clamping floor; "
            "the bipartite covariance matrix is not physical"
        )
    eta = math.sqrt(max(eta_sq, 0.0))
    if eta < NUMERICAL_DUST:
        raise UnphysicalCovarianceError(
            f"eta = {eta:.3e} below the 1e-12 floor; the bipartition is "
            "singular rather than merely strongly entangled"
        )
    return max(0.0, -math.log(2.0 * eta))
