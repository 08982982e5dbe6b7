import math

import pytest

from quadmode.model import SystemParams

TWO_PI = 2.0 * math.pi
OMEGA_M = TWO_PI * 10e6


@pytest.fixture
def base_params() -> SystemParams:
    """The shared device of all bundled presets (9 GHz twin circuits)."""
    return SystemParams(
        omega_m=OMEGA_M,
        q_factor=5e4,
        mass=1e-11,
        lambda_drive=1550e-9,
        cavity_length=1e-3,
        kappa_c=0.08 * OMEGA_M,
        power_c=30e-3,
        omega_w=(TWO_PI * 9e9, TWO_PI * 9e9),
        kappa_w=(0.02 * OMEGA_M, 0.02 * OMEGA_M),
        power_w=(30e-3, 30e-3),
        gap_d=(100e-9, 100e-9),
        mu=(0.008, 0.008),
        temperature=15e-3,
    )
