"""Declarative parameter sweeps over the full pipeline.

A sweep fixes a base parameter set and an operating point, varies exactly
one quantity over a linear grid, and reports stability plus logarithmic
negativity of the requested bipartitions at every grid point.  Unstable
points are kept as rows (flagged, with the entanglement fields absent) so
downstream plots show the forbidden window instead of silently skipping it.

Detuning-type axes and the detuning settings are expressed in units of
omega_m, matching the bundled presets; every other axis is SI.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import gaussian
from .dynamics import EigenSolverError, diffusion_matrix, drift_matrix, stability
from .gaussian import Subsystem, reduce_bipartite, solve_lyapunov
from .model import SystemParams, steady_state, validate_params

#: Default grid resolution; fine enough to pin the instability window edges
#: of the mixed-frequency presets to a few thousandths of omega_m.
DEFAULT_GRID_COUNT = 401

#: Axis names accepted by SweepAxis.target.  Detunings are in omega_m
#: units; gaps in m, powers in W, frequencies in rad/s, temperature in K.
AXIS_TARGETS = (
    "delta_w",
    "delta_w1",
    "delta_w2",
    "delta_c",
    "temperature",
    "gap_d",
    "gap_d1",
    "gap_d2",
    "power_c",
    "power_w",
    "power_w1",
    "power_w2",
    "omega_w",
    "omega_w1",
    "omega_w2",
)

ALL_BIPARTITIONS: tuple[tuple[Subsystem, Subsystem], ...] = (
    (Subsystem.MECHA, Subsystem.OPTO),
    (Subsystem.MECHA, Subsystem.MICRO1),
    (Subsystem.MECHA, Subsystem.MICRO2),
    (Subsystem.OPTO, Subsystem.MICRO1),
    (Subsystem.OPTO, Subsystem.MICRO2),
    (Subsystem.MICRO1, Subsystem.MICRO2),
)


class SweepSpecError(ValueError):
    """A sweep specification violates its invariants."""


@dataclass(frozen=True)
class OperatingSettings:
    """Effective detunings in omega_m units, plus the microwave tie.

    With tie "opposite" a delta_w axis drives (x, -x): detuning one circuit
    to the red automatically detunes the other to the blue, the twin-circuit
    arrangement of the bundled presets.  "independent" leaves delta_w2 at
    its fixed value so asymmetric detunings remain reachable.
    """

    delta_c: float
    delta_w: tuple[float, float]
    delta_w_tie: str = "opposite"  # "opposite" | "common" | "independent"


@dataclass(frozen=True)
class SweepAxis:
    """One swept quantity on a linear grid."""

    target: str
    start: float
    stop: float
    count: int = DEFAULT_GRID_COUNT


@dataclass(frozen=True)
class SweepSpec:
    base: SystemParams
    operating: OperatingSettings
    axis: SweepAxis
    bipartitions: tuple[tuple[Subsystem, Subsystem], ...] = (
        (Subsystem.MICRO1, Subsystem.MICRO2),
    )


@dataclass(frozen=True)
class SweepRow:
    """Pipeline output at one grid point.

    max_real_eig, g_c, g_w are in omega_m units.  e_n maps a pair label
    like "Micro1_Micro2" to the logarithmic negativity; it is None exactly
    when the point is unstable or errored.
    """

    index: int
    axis_name: str
    axis_value: float
    stable: bool
    max_real_eig: float
    e_n: dict[str, float] | None
    g_c: float
    g_w: tuple[float, float]
    error: str | None = None


def pair_label(s1: Subsystem, s2: Subsystem) -> str:
    return f"{s1.value}_{s2.value}"


def validate_spec(spec: SweepSpec) -> SweepSpec:
    ax = spec.axis
    if ax.target not in AXIS_TARGETS:
        raise SweepSpecError(
            f"unknown axis target {ax.target!r}; expected one of {AXIS_TARGETS}"
        )
    if ax.count < 2:
        raise SweepSpecError(f"axis count must be >= 2, got {ax.count}")
    if not ax.start < ax.stop:
        raise SweepSpecError(
            f"axis start must be < stop, got [{ax.start}, {ax.stop}]"
        )
    if ax.target.startswith(("gap_d", "omega_w")) and not ax.start > 0:
        raise SweepSpecError(
            f"{ax.target} axis must stay strictly positive, starts at {ax.start}"
        )
    if ax.target.startswith(("power_", "temperature")) and ax.start < 0:
        raise SweepSpecError(
            f"{ax.target} axis must be nonnegative, starts at {ax.start}"
        )
    if spec.operating.delta_w_tie not in ("opposite", "common", "independent"):
        raise SweepSpecError(
            f"unknown delta_w tie {spec.operating.delta_w_tie!r}"
        )
    if not spec.bipartitions:
        raise SweepSpecError("at least one bipartition must be requested")
    for s1, s2 in spec.bipartitions:
        if s1 == s2:
            raise SweepSpecError(f"bipartition ({s1}, {s2}) is not a pair")
    validate_params(spec.base)
    return spec


def axis_grid(ax: SweepAxis) -> np.ndarray:
    """Linear grid including both endpoints.

    A range symmetric about zero is assembled from one half and its exact
    negation, so that x and -x are floating-point negatives of each other
    and even-function outputs can be compared bitwise across the axis.
    """
    n = ax.count
    step = (ax.stop - ax.start) / (n - 1)
    g = ax.start + step * np.arange(n)
    g[-1] = ax.stop
    if ax.start == -ax.stop:
        upper = g[(n + 1) // 2:]
        mid = [0.0] if n % 2 else []
        g = np.concatenate([-upper[::-1], mid, upper])
    return g


def _apply_axis(
    spec: SweepSpec, value: float
) -> tuple[SystemParams, OperatingSettings]:
    """Materialize one grid point: returns (params, operating settings)."""
    p = spec.base
    op = spec.operating
    t = spec.axis.target
    if t == "delta_w":
        if op.delta_w_tie == "opposite":
            op = replace(op, delta_w=(value, -value))
        elif op.delta_w_tie == "common":
            op = replace(op, delta_w=(value, value))
        else:
            op = replace(op, delta_w=(value, op.delta_w[1]))
    elif t == "delta_w1":
        op = replace(op, delta_w=(value, op.delta_w[1]))
    elif t == "delta_w2":
        op = replace(op, delta_w=(op.delta_w[0], value))
    elif t == "delta_c":
        op = replace(op, delta_c=value)
    elif t == "temperature":
        p = replace(p, temperature=value)
    elif t == "gap_d":
        p = replace(p, gap_d=(value, value))
    elif t == "gap_d1":
        p = replace(p, gap_d=(value, p.gap_d[1]))
    elif t == "gap_d2":
        p = replace(p, gap_d=(p.gap_d[0], value))
    elif t == "power_c":
        p = replace(p, power_c=value)
    elif t == "power_w":
        p = replace(p, power_w=(value, value))
    elif t == "power_w1":
        p = replace(p, power_w=(value, p.power_w[1]))
    elif t == "power_w2":
        p = replace(p, power_w=(p.power_w[0], value))
    elif t == "omega_w":
        p = replace(p, omega_w=(value, value))
    elif t == "omega_w1":
        p = replace(p, omega_w=(value, p.omega_w[1]))
    elif t == "omega_w2":
        p = replace(p, omega_w=(p.omega_w[0], value))
    else:  # pragma: no cover - guarded by validate_spec
        raise SweepSpecError(f"unknown axis target {t!r}")
    return p, op


def evaluate_point(
    p: SystemParams,
    operating: OperatingSettings,
    bipartitions: tuple[tuple[Subsystem, Subsystem], ...],
    index: int = 0,
    axis_name: str = "delta_w",
    axis_value: float = 0.0,
) -> SweepRow:
    """Run the model -> dynamics -> gaussian pipeline at one working point.

    The matrices are built in omega_m units to keep the linear algebra well
    conditioned; the measure is unit-free.  A solver failure downstream of
    the stability test lands in the row's error field, keeping the
    stability verdict itself.
    """
    om = p.omega_m
    point = steady_state(
        p, operating.delta_c * om,
        (operating.delta_w[0] * om, operating.delta_w[1] * om),
    )
    a = drift_matrix(p, point).scaled(1.0 / om)
    d = diffusion_matrix(p, point).scaled(1.0 / om)
    e_n = None
    error = None
    stable = False
    max_real = float("nan")
    try:
        report = stability(a)
        stable = report.stable
        max_real = report.max_real_eig
        if stable:
            v = solve_lyapunov(a, d)
            v.require_physical()
            e_n = {
                pair_label(s1, s2): gaussian.log_negativity(
                    reduce_bipartite(v, s1, s2)
                )
                for s1, s2 in bipartitions
            }
    except (
        EigenSolverError,
        gaussian.LyapunovSolveError,
        gaussian.UnphysicalCovarianceError,
    ) as exc:
        # solver failures are findings about this point, not about the
        # sweep; the error text tells them apart from a plain instability
        e_n = None
        error = f"{type(exc).__name__}: {exc}"
    return SweepRow(
        index=index,
        axis_name=axis_name,
        axis_value=axis_value,
        stable=stable,
        max_real_eig=max_real,
        e_n=e_n,
        g_c=point.g_c / om,
        g_w=(point.g_w[0] / om, point.g_w[1] / om),
        error=error,
    )


def run_sweep(spec: SweepSpec) -> list[SweepRow]:
    """Evaluate the pipeline on every grid point, in axis order.

    Each point is independent; a per-point failure is recorded in that
    row's error field and the sweep carries on.  Output is deterministic
    for a fixed spec.
    """
    validate_spec(spec)
    rows = []
    for i, value in enumerate(axis_grid(spec.axis)):
        x = float(value)
        p, operating = _apply_axis(spec, x)
        rows.append(
            evaluate_point(
                p,
                operating,
                spec.bipartitions,
                index=i,
                axis_name=spec.axis.target,
                axis_value=x,
            )
        )
    return rows
