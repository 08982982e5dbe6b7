import json
import math
from importlib import resources

import pytest

from quadmode.config import (
    ConfigError,
    parse_config,
    serialize_config,
    to_sweep_spec,
    to_system_params,
)

TWO_PI = 2.0 * math.pi


def bundled(name: str) -> str:
    return (
        resources.files("quadmode") / "configs" / f"{name}.json"
    ).read_text(encoding="utf-8")


def minimal_config(**over) -> str:
    cfg = {
        "params": {
            "omega_m": TWO_PI * 10e6,
            "q_factor": 5e4,
            "mass": 1e-11,
            "lambda_drive": 1550e-9,
            "cavity_length": 1e-3,
            "kappa_c": 0.08 * TWO_PI * 10e6,
            "power_c": 30e-3,
            "omega_w": [TWO_PI * 9e9, TWO_PI * 9e9],
            "kappa_w": [0.02 * TWO_PI * 10e6, 0.02 * TWO_PI * 10e6],
            "power_w": [30e-3, 30e-3],
            "gap_d": [100e-9, 100e-9],
            "mu": [0.008, 0.008],
            "temperature": 15e-3,
        },
        "operating": {"delta_c": 1.0, "delta_w": [0.1, -0.1]},
    }
    cfg.update(over)
    return json.dumps(cfg)


class TestBundledConfigs:
    def test_fig2_matches_reference_device(self):
        cfg = parse_config(bundled("fig2"))
        p = to_system_params(cfg)
        assert p.omega_m == TWO_PI * 10e6
        assert p.omega_w == (TWO_PI * 9e9, TWO_PI * 3e9)
        assert p.kappa_c == 0.08 * p.omega_m
        assert p.kappa_w == (0.02 * p.omega_m, 0.02 * p.omega_m)
        assert p.power_c == 30e-3 and p.power_w == (30e-3, 30e-3)
        assert p.mass == 1e-11
        assert p.lambda_drive == 1550e-9
        assert p.cavity_length == 1e-3
        assert p.gap_d == (100e-9, 100e-9)
        assert p.mu == (0.008, 0.008)
        assert p.temperature == 15e-3
        assert cfg.operating.delta_c == 1.0

    @pytest.mark.parametrize(
        "name", ["fig2", "fig3", "fig4", "fig5", "fig6", "fig3_sweep"]
    )
    def test_all_bundled_parse(self, name):
        parse_config(bundled(name))

    def test_fig3_sweep_block(self):
        cfg = parse_config(bundled("fig3_sweep"))
        spec = to_sweep_spec(cfg)
        assert spec.axis.target == "delta_w"
        assert (spec.axis.start, spec.axis.stop, spec.axis.count) == (
            -0.8, 0.8, 401,
        )


class TestParseErrors:
    def test_empty_file_lists_required_keys(self):
        with pytest.raises(ConfigError) as err:
            parse_config("{}")
        msg = str(err.value)
        assert "params" in msg and "operating" in msg

    def test_not_json(self):
        with pytest.raises(ConfigError):
            parse_config("kappa = 3")

    def test_unknown_key_reports_path(self):
        cfg = json.loads(minimal_config())
        cfg["params"]["kappa"] = 1.0
        with pytest.raises(ConfigError, match="params.kappa"):
            parse_config(json.dumps(cfg))

    def test_mu_ratio_bound(self):
        cfg = json.loads(minimal_config())
        cfg["params"]["mu"] = [2.0, 0.008]
        with pytest.raises(ConfigError, match="mu"):
            parse_config(json.dumps(cfg))

    def test_wrong_type_reports_path(self):
        cfg = json.loads(minimal_config())
        cfg["operating"]["delta_c"] = "resonant"
        with pytest.raises(ConfigError, match="operating.delta_c"):
            parse_config(json.dumps(cfg))

    def test_bad_axis_target(self):
        cfg = json.loads(minimal_config())
        cfg["sweep"] = {
            "axis": {"target": "laser_color", "start": 0, "stop": 1}
        }
        with pytest.raises(ConfigError, match="target"):
            parse_config(json.dumps(cfg))

    def test_bad_output_format(self):
        cfg = json.loads(minimal_config())
        cfg["output"] = {"format": "xml"}
        with pytest.raises(ConfigError, match="output.format"):
            parse_config(json.dumps(cfg))


class TestRoundTrip:
    @pytest.mark.parametrize("name", ["fig3", "fig3_sweep"])
    def test_parse_serialize_parse(self, name):
        cfg = parse_config(bundled(name))
        again = parse_config(serialize_config(cfg))
        assert again == cfg

    def test_defaults_applied(self):
        cfg = json.loads(minimal_config())
        cfg["sweep"] = {
            "axis": {"target": "delta_w", "start": -0.5, "stop": 0.5}
        }
        parsed = parse_config(json.dumps(cfg))
        assert parsed.sweep.axis.count == 401
        assert parsed.sweep.delta_w_tie == "opposite"
        assert parsed.output.format == "csv"

    def test_eval_config_has_no_sweep_spec(self):
        cfg = parse_config(minimal_config())
        with pytest.raises(ConfigError, match="sweep"):
            to_sweep_spec(cfg)
