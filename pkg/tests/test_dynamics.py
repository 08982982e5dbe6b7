import math
from dataclasses import replace

import numpy as np
import pytest

from quadmode.dynamics import (
    DriftMatrix,
    EigenSolverError,
    diffusion_matrix,
    drift_matrix,
    stability,
)
from quadmode.model import steady_state, thermal_occupation

TWO_PI = 2.0 * math.pi


def reference_matrices(p, delta_w=0.1):
    om = p.omega_m
    op = steady_state(p, om, (delta_w * om, -delta_w * om))
    return drift_matrix(p, op), diffusion_matrix(p, op), op


class TestDriftStructure:
    def test_mechanical_rows_forced(self, base_params):
        a, _, _ = reference_matrices(base_params)
        m = a.a
        assert m[0, 1] == base_params.omega_m
        assert m[1, 0] == -base_params.omega_m
        assert np.all(m[0, [0, 2, 3, 4, 5, 6, 7]] == 0.0)

    def test_full_layout(self, base_params):
        p = base_params
        a, _, op = reference_matrices(p)
        om = p.omega_m
        dw1, dw2 = 0.1 * om, -0.1 * om
        expected = np.zeros((8, 8))
        expected[0, 1] = om
        expected[1] = [-om, -p.kappa_m, op.g_c, 0, op.g_w[0], 0, op.g_w[1], 0]
        expected[2, 2:4] = [-p.kappa_c, om]
        expected[3] = [op.g_c, 0, -om, -p.kappa_c, 0, 0, 0, 0]
        expected[4, 4:6] = [-p.kappa_w[0], dw1]
        expected[5] = [op.g_w[0], 0, 0, 0, -dw1, -p.kappa_w[0], 0, 0]
        expected[6, 6:8] = [-p.kappa_w[1], dw2]
        expected[7] = [op.g_w[1], 0, 0, 0, 0, 0, -dw2, -p.kappa_w[1]]
        np.testing.assert_array_equal(a.a, expected)

    def test_couplings_at_reference_point(self, base_params):
        a, _, _ = reference_matrices(base_params)
        om = base_params.omega_m
        assert a.a[1, 2] / om == pytest.approx(0.27272503258245515, rel=1e-12)
        assert a.a[1, 4] / om == pytest.approx(0.36601627321880443, rel=1e-12)
        assert a.a[1, 4] == a.a[1, 6]

    def test_decoupled_limit_is_block_diagonal(self, base_params):
        p = replace(base_params, power_c=0.0, power_w=(0.0, 0.0))
        a, _, _ = reference_matrices(p)
        coupling_slots = [(1, 2), (1, 4), (1, 6), (3, 0), (5, 0), (7, 0)]
        assert all(a.a[i, j] == 0.0 for i, j in coupling_slots)

    def test_trace_identity(self, base_params):
        p = base_params
        a, _, _ = reference_matrices(p)
        expected = -(
            p.kappa_m + 2 * p.kappa_c + 2 * p.kappa_w[0] + 2 * p.kappa_w[1]
        )
        assert np.trace(a.a) == pytest.approx(expected, rel=1e-15)

    def test_scaled_keeps_layout(self, base_params):
        a, _, _ = reference_matrices(base_params)
        s = a.scaled(1.0 / base_params.omega_m)
        assert s.a[0, 1] == 1.0
        assert s.rate_unit == 1.0


class TestDiffusion:
    def test_zero_temperature_diagonal(self, base_params):
        p = replace(base_params, temperature=0.0)
        _, d, _ = reference_matrices(p)
        expected = np.diag(
            [0.0, p.kappa_m, p.kappa_c, p.kappa_c,
             p.kappa_w[0], p.kappa_w[0], p.kappa_w[1], p.kappa_w[1]]
        )
        np.testing.assert_array_equal(d.d, expected)

    def test_mechanical_entry_at_15mk(self, base_params):
        _, d, _ = reference_matrices(base_params)
        n = 30.75759490480361521  # frozen high-precision evaluation
        assert d.d[1, 1] == pytest.approx(
            base_params.kappa_m * (2 * n + 1), rel=1e-13
        )

    def test_hot_limit_doubles_with_temperature(self, base_params):
        hot = replace(base_params, temperature=2.0)
        hotter = replace(base_params, temperature=4.0)
        _, d1, _ = reference_matrices(hot)
        _, d2, _ = reference_matrices(hotter)
        # Rayleigh-Jeans: occupation ~ kB T / (hbar omega)
        assert d2.d[1, 1] / d1.d[1, 1] == pytest.approx(2.0, abs=1e-3)

    def test_optical_entries_ignore_occupation(self, base_params):
        hot = replace(base_params, temperature=300.0)
        _, d, _ = reference_matrices(hot)
        assert d.d[2, 2] == base_params.kappa_c
        assert d.d[3, 3] == base_params.kappa_c
        assert d.d[4, 4] == base_params.kappa_w[0] * (
            2 * thermal_occupation(base_params.omega_w[0], 300.0) + 1
        )


class TestStability:
    def test_decoupled_damped_system_is_stable(self, base_params):
        p = replace(base_params, power_c=0.0, power_w=(0.0, 0.0))
        a, _, _ = reference_matrices(p)
        assert stability(a).stable

    def test_decoupled_spectrum_analytic(self, base_params):
        p = replace(base_params, power_c=0.0, power_w=(0.0, 0.0))
        om = p.omega_m
        a, _, _ = reference_matrices(p)
        eigs = np.sort_complex(stability(a).eigenvalues)
        km = p.kappa_m
        mech = np.roots([1.0, km, om**2])
        expected = np.concatenate(
            [
                [-p.kappa_c + 1j * om, -p.kappa_c - 1j * om],
                [-p.kappa_w[0] + 0.1j * om, -p.kappa_w[0] - 0.1j * om],
                [-p.kappa_w[1] + 0.1j * om, -p.kappa_w[1] - 0.1j * om],
                mech,
            ]
        )
        expected = np.sort_complex(expected)
        assert np.abs(eigs - expected).max() / om < 1e-10

    def test_decision_invariant_under_time_rescaling(self, base_params):
        a, _, _ = reference_matrices(base_params)
        verdict = stability(a).stable
        for s in (1e-7, 1e-3, 1.0, 1e3, 1e7):
            assert stability(a.scaled(s)).stable == verdict

    def test_mixed_frequency_window_is_unstable(self, base_params):
        p = replace(
            base_params, omega_w=(TWO_PI * 9e9, TWO_PI * 3e9)
        )
        a, _, _ = reference_matrices(p, delta_w=0.05)
        report = stability(a)
        assert not report.stable
        assert report.max_real_eig > 0

    def test_solver_failure_is_distinct(self):
        bad = np.full((8, 8), np.nan)
        bad[0, 1] = 1.0
        with pytest.raises(EigenSolverError):
            stability(DriftMatrix(bad))
