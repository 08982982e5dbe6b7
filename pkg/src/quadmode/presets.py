"""Bundled sweep presets: the standard detuning, gap and temperature
scans of the shared base device.

All presets share one base device: a 10 MHz, 10 ng membrane with quality
factor 5e4 read out by a 1550 nm cavity of length 1 mm (kappa_c = 0.08
omega_m, 30 mW drive) and two microwave circuits (kappa_w = 0.02 omega_m,
30 mW, 100 nm gaps, participation 0.008) in a 15 mK environment.  The
optical detuning sits on the red mechanical sideband (delta_c = omega_m)
and the two microwave detunings are tied opposite, delta_w1 = -delta_w2.

Each preset expands to one labeled curve per parameter variant (e.g. one
curve per microwave frequency pair), all sharing one axis and table.
"""

from __future__ import annotations

import math
from dataclasses import replace

from .gaussian import Subsystem
from .model import SystemParams
from .sweep import DEFAULT_GRID_COUNT, OperatingSettings, SweepAxis, SweepSpec

TWO_PI = 2.0 * math.pi

#: Shared base device; individual presets override microwave frequencies,
#: gaps, optical linewidth or temperature.
BASE_OMEGA_M = TWO_PI * 10e6

BASE_PARAMS = SystemParams(
    omega_m=BASE_OMEGA_M,
    q_factor=5e4,
    mass=1e-11,  # 10 ng
    lambda_drive=1550e-9,
    cavity_length=1e-3,
    kappa_c=0.08 * BASE_OMEGA_M,
    power_c=30e-3,
    omega_w=(TWO_PI * 9e9, TWO_PI * 9e9),
    kappa_w=(0.02 * BASE_OMEGA_M, 0.02 * BASE_OMEGA_M),
    power_w=(30e-3, 30e-3),
    gap_d=(100e-9, 100e-9),
    mu=(0.008, 0.008),
    temperature=15e-3,
)

BASE_OPERATING = OperatingSettings(
    delta_c=1.0, delta_w=(0.0, 0.0), delta_w_tie="opposite"
)

MICRO_PAIR = ((Subsystem.MICRO1, Subsystem.MICRO2),)

#: The five bipartitions drawn in the subsystem-comparison preset.
FIVE_BIPARTITIONS = (
    (Subsystem.OPTO, Subsystem.MICRO1),
    (Subsystem.OPTO, Subsystem.MICRO2),
    (Subsystem.MECHA, Subsystem.MICRO1),
    (Subsystem.MECHA, Subsystem.MICRO2),
    (Subsystem.MICRO1, Subsystem.MICRO2),
)


class UnknownPresetError(LookupError):
    """Requested preset id does not exist."""


def _ghz_label(f1_ghz: float, f2_ghz: float | None = None) -> str:
    def fmt(f: float) -> str:
        return f"{f:g}GHz"

    return fmt(f1_ghz) if f2_ghz is None else f"{fmt(f1_ghz)}-{fmt(f2_ghz)}"


def _mixed_frequency_curves(start: float, stop: float, count: int):
    curves = []
    for f1, f2 in ((9e9, 3e9), (30e9, 3e9), (30e9, 9e9)):
        params = replace(BASE_PARAMS, omega_w=(TWO_PI * f1, TWO_PI * f2))
        spec = SweepSpec(
            base=params,
            operating=BASE_OPERATING,
            axis=SweepAxis("delta_w", start, stop, count),
            bipartitions=MICRO_PAIR,
        )
        curves.append((_ghz_label(f1 / 1e9, f2 / 1e9), spec))
    return curves


def _fig2a(count: int):
    return _mixed_frequency_curves(-0.8, 0.0, count)


def _fig2b(count: int):
    return _mixed_frequency_curves(0.1, 0.8, count)


def _fig3(count: int):
    curves = []
    for f in (3e9, 9e9, 30e9, 300e9):
        ow = TWO_PI * f
        spec = SweepSpec(
            base=replace(BASE_PARAMS, omega_w=(ow, ow)),
            operating=BASE_OPERATING,
            axis=SweepAxis("delta_w", -0.8, 0.8, count),
            bipartitions=MICRO_PAIR,
        )
        curves.append((_ghz_label(f / 1e9), spec))
    return curves


def _fig4(count: int):
    curves = []
    for label, d in (("20nm", 20e-9), ("100nm", 100e-9), ("500nm", 500e-9)):
        spec = SweepSpec(
            base=replace(BASE_PARAMS, gap_d=(d, d)),
            operating=BASE_OPERATING,
            axis=SweepAxis("delta_w", -0.8, 0.8, count),
            bipartitions=MICRO_PAIR,
        )
        curves.append((label, spec))
    return curves


def _fig5(count: int):
    # Detunings chosen where each frequency pair is close to its maximum
    # entanglement; the temperature range reaches past every crossover.
    curves = []
    for f, delta_w in ((3e9, -0.05), (30e9, -0.12), (300e9, -0.13)):
        ow = TWO_PI * f
        spec = SweepSpec(
            base=replace(BASE_PARAMS, omega_w=(ow, ow)),
            operating=replace(
                BASE_OPERATING, delta_w=(delta_w, -delta_w)
            ),
            axis=SweepAxis("temperature", 0.0, 20.0, count),
            bipartitions=MICRO_PAIR,
        )
        curves.append((_ghz_label(f / 1e9), spec))
    return curves


def _fig6(count: int):
    spec = SweepSpec(
        base=replace(BASE_PARAMS, kappa_c=0.01 * BASE_OMEGA_M),
        operating=BASE_OPERATING,
        axis=SweepAxis("delta_w", -2.0, 2.0, count),
        bipartitions=FIVE_BIPARTITIONS,
    )
    return [("all-pairs", spec)]


_PRESETS = {
    "fig2a": (
        _fig2a,
        "Micro1-Micro2 entanglement vs delta_w in [-0.8, 0], three "
        "mixed-frequency pairs (9-3, 30-3, 30-9 GHz)",
    ),
    "fig2b": (
        _fig2b,
        "Micro1-Micro2 entanglement vs delta_w in [0.1, 0.8], three "
        "mixed-frequency pairs (9-3, 30-3, 30-9 GHz)",
    ),
    "fig3": (
        _fig3,
        "Micro1-Micro2 entanglement vs delta_w in [-0.8, 0.8], equal "
        "frequencies 3 / 9 / 30 / 300 GHz",
    ),
    "fig4": (
        _fig4,
        "Micro1-Micro2 entanglement vs delta_w at 9 GHz for capacitor "
        "gaps 20 / 100 / 500 nm",
    ),
    "fig5": (
        _fig5,
        "Micro1-Micro2 entanglement vs temperature (0 to 20 K) at "
        "3 GHz (delta_w=-0.05), 30 GHz (-0.12), 300 GHz (-0.13)",
    ),
    "fig6": (
        _fig6,
        "All five mode pairs vs delta_w in [-2, 2] at 9 GHz with "
        "kappa_c = 0.01 omega_m",
    ),
}

PRESET_IDS = tuple(_PRESETS)


def preset(
    figure: str, count: int = DEFAULT_GRID_COUNT
) -> list[tuple[str, SweepSpec]]:
    """Labeled sweep specs for one preset id (fig2a..fig6).

    Multi-curve presets return one spec per curve; `count` overrides the
    grid resolution of every curve.
    """
    try:
        build, _ = _PRESETS[figure]
    except KeyError:
        raise UnknownPresetError(
            f"unknown preset {figure!r}; available: {', '.join(PRESET_IDS)}"
        ) from None
    return build(count)


def preset_description(figure: str) -> str:
    try:
        return _PRESETS[figure][1]
    except KeyError:
        raise UnknownPresetError(
            f"unknown preset {figure!r}; available: {', '.join(PRESET_IDS)}"
        ) from None
