"""Physical parameters and semiclassical working point.

The device is a four-mode hybrid system: a mechanical membrane that is
capacitively coupled to two driven superconducting microwave circuits and
forms one mirror of a driven Fabry-Perot cavity.  This module holds the
laboratory inputs (SI units throughout), derives thermal occupations, drive
amplitudes and single-quantum couplings, and computes the strong-drive
steady state around which the dynamics is linearized.

All rates are angular (rad/s).  Detunings passed around here are the
*effective* ones, i.e. already including the static displacement shift;
they are what the sweep axes of the bundled presets refer to.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .constants import C_LIGHT, HBAR, K_B


class ParameterError(ValueError):
    """A physical parameter is outside its allowed range."""


@dataclass(frozen=True)
class SystemParams:
    """Laboratory inputs, SI units.

    omega_m        mechanical angular frequency, rad/s
    q_factor       mechanical quality factor (kappa_m = omega_m / q_factor)
    mass           effective mechanical mass, kg
    lambda_drive   optical drive wavelength, m
    cavity_length  optical cavity length, m
    kappa_c        optical amplitude damping rate, rad/s
    power_c        optical drive power, W
    omega_w        microwave angular resonance frequencies, rad/s
    kappa_w        microwave amplitude damping rates, rad/s
    power_w        microwave drive powers, W
    gap_d          equilibrium capacitor gaps, m
    mu             capacitance participation ratios, in (0, 1)
    temperature    environment temperature, K
    """

    omega_m: float
    q_factor: float
    mass: float
    lambda_drive: float
    cavity_length: float
    kappa_c: float
    power_c: float
    omega_w: tuple[float, float]
    kappa_w: tuple[float, float]
    power_w: tuple[float, float]
    gap_d: tuple[float, float]
    mu: tuple[float, float]
    temperature: float

    @property
    def kappa_m(self) -> float:
        """Mechanical amplitude damping rate, rad/s."""
        return self.omega_m / self.q_factor

    @property
    def omega_c(self) -> float:
        """Optical angular frequency 2*pi*c / lambda, rad/s."""
        return 2.0 * math.pi * C_LIGHT / self.lambda_drive


@dataclass(frozen=True)
class OperatingPoint:
    """Semiclassical steady state at one pair of effective detunings.

    Amplitudes are kept as magnitudes (drive phases are chosen so the
    steady fields are real and positive).  Couplings g_c, g_w are the
    field-enhanced ones entering the linearized dynamics, rad/s.
    """

    delta_c: float
    delta_w: tuple[float, float]
    alpha_s: float
    beta_s: tuple[float, float]
    q_s: float
    g_c: float
    g_w: tuple[float, float]
    n_mech: float
    n_w: tuple[float, float]


def validate_params(p: SystemParams) -> SystemParams:
    """Check all invariants; return the input unchanged if they hold.

    Raises ParameterError listing every violated constraint.  Emits a
    warning when the frequency hierarchy omega_m << omega_w is not well
    separated, since the model drops terms rotating at the carrier.
    """
    problems = []
    positive = {
        "omega_m": p.omega_m,
        "q_factor": p.q_factor,
        "mass": p.mass,
        "lambda_drive": p.lambda_drive,
        "cavity_length": p.cavity_length,
        "kappa_c": p.kappa_c,
    }
    for j in range(2):
        positive[f"omega_w[{j}]"] = p.omega_w[j]
        positive[f"kappa_w[{j}]"] = p.kappa_w[j]
        positive[f"gap_d[{j}]"] = p.gap_d[j]
    for name, value in positive.items():
        if not value > 0:
            problems.append(f"{name} must be > 0, got {value!r}")
    # zero drive power is a meaningful (undriven) configuration
    nonnegative = {
        "power_c": p.power_c,
        "power_w[0]": p.power_w[0],
        "power_w[1]": p.power_w[1],
        "temperature": p.temperature,
    }
    for name, value in nonnegative.items():
        if not value >= 0:
            problems.append(f"{name} must be >= 0, got {value!r}")
    for j in range(2):
        if not 0.0 < p.mu[j] < 1.0:
            problems.append(f"mu[{j}] must lie in (0, 1), got {p.mu[j]!r}")
    if problems:
        raise ParameterError("; ".join(problems))
    if p.omega_m > 0.01 * min(p.omega_w):
        warnings.warn(
            "omega_m is not well separated from the microwave frequencies "
            f"(omega_m = {p.omega_m:.3g}, min omega_w = {min(p.omega_w):.3g}); "
            "the rotating-wave model assumes omega_m << omega_w",
            stacklevel=2,
        )
    return p


def thermal_occupation(omega: float, temperature: float) -> float:
    """Bose-Einstein mean occupation 1 / (exp(hbar*omega/kB*T) - 1).

    Returns exactly 0 at zero temperature.  expm1 keeps the hot limit
    (hbar*omega << kB*T) accurate; when the exponent overflows the
    occupation is below ~1e-308 and maps to 0.
    """
    if omega <= 0:
        raise ValueError(f"omega must be > 0, got {omega!r}")
    if temperature < 0:
        raise ValueError(f"temperature must be >= 0, got {temperature!r}")
    if temperature == 0.0:
        return 0.0
    x = HBAR * omega / (K_B * temperature)
    try:
        return 1.0 / math.expm1(x)
    except OverflowError:
        return 0.0


def drive_amplitudes(p: SystemParams) -> tuple[float, float, float]:
    """Drive rates (E_c, E_w1, E_w2) in rad/s.

    E = sqrt(2 * P * kappa / (hbar * omega_carrier)); the carrier is taken
    at the cavity resonance, the detuning correction being ~1e-7 relative.
    """
    e_c = math.sqrt(2.0 * p.power_c * p.kappa_c / (HBAR * p.omega_c))
    e_w = tuple(
        math.sqrt(2.0 * p.power_w[j] * p.kappa_w[j] / (HBAR * p.omega_w[j]))
        for j in range(2)
    )
    return e_c, e_w[0], e_w[1]


def bare_couplings(p: SystemParams) -> tuple[float, float, float]:
    """Single-quantum couplings (G_0c, G_0w1, G_0w2) in rad/s.

    Optical: (omega_c / cavity_length) * x_zpf-scale; microwave circuit j:
    mu_j * omega_wj / (2 d_j) times the same mechanical zero-point length
    sqrt(hbar / (m * omega_m)).
    """
    x_scale = math.sqrt(HBAR / (p.mass * p.omega_m))
    g0c = (p.omega_c / p.cavity_length) * x_scale
    g0w = tuple(
        (p.mu[j] * p.omega_w[j] / (2.0 * p.gap_d[j])) * x_scale for j in range(2)
    )
    return g0c, g0w[0], g0w[1]


def steady_state(
    p: SystemParams, delta_c: float, delta_w: tuple[float, float]
) -> OperatingPoint:
    """Fixed point of the classical field equations at effective detunings.

    Steady amplitudes |alpha_s| = E_c / sqrt(kappa_c^2 + delta_c^2) and
    likewise per circuit; the static membrane displacement balances the
    radiation-pressure and electrostatic pushes; the mechanical momentum
    fixed point is zero.  Effective couplings are sqrt(2) * G_0 * amplitude.
    """
    e_c, e_w1, e_w2 = drive_amplitudes(p)
    g0c, g0w1, g0w2 = bare_couplings(p)
    alpha_s = e_c / math.hypot(p.kappa_c, delta_c)
    beta_s = (
        e_w1 / math.hypot(p.kappa_w[0], delta_w[0]),
        e_w2 / math.hypot(p.kappa_w[1], delta_w[1]),
    )
    q_s = (
        g0c * alpha_s**2 + g0w1 * beta_s[0] ** 2 + g0w2 * beta_s[1] ** 2
    ) / p.omega_m
    sqrt2 = math.sqrt(2.0)
    return OperatingPoint(
        delta_c=delta_c,
        delta_w=(delta_w[0], delta_w[1]),
        alpha_s=alpha_s,
        beta_s=beta_s,
        q_s=q_s,
        g_c=sqrt2 * g0c * alpha_s,
        g_w=(sqrt2 * g0w1 * beta_s[0], sqrt2 * g0w2 * beta_s[1]),
        n_mech=thermal_occupation(p.omega_m, p.temperature),
        n_w=(
            thermal_occupation(p.omega_w[0], p.temperature),
            thermal_occupation(p.omega_w[1], p.temperature),
        ),
    )


def bare_detunings(
    op: OperatingPoint, p: SystemParams
) -> tuple[float, float, float]:
    """Undisplaced cavity detunings (diagnostic only).

    The effective detuning is the bare one minus the static shift
    G_0 * q_s, so the bare values are recovered by adding it back.
    """
    g0c, g0w1, g0w2 = bare_couplings(p)
    return (
        op.delta_c + g0c * op.q_s,
        op.delta_w[0] + g0w1 * op.q_s,
        op.delta_w[1] + g0w2 * op.q_s,
    )
