"""Run configuration: JSON parsing, validation and conversion to core types.

A configuration file is a single JSON object with blocks

    params     laboratory inputs, SI units (see docs/config.md for keys)
    operating  effective detunings in omega_m units
    sweep      optional: axis, microwave-detuning tie, bipartitions
    output     optional: path and format ("csv" or "json")

Unknown keys are rejected; every error message carries the offending key
path.  Detunings are the only non-SI quantities, expressed in omega_m
units to match the sweep presets.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator

from .gaussian import Subsystem
from .model import ParameterError, SystemParams, validate_params
from .sweep import (
    AXIS_TARGETS,
    DEFAULT_GRID_COUNT,
    OperatingSettings,
    SweepAxis,
    SweepSpec,
    SweepSpecError,
    validate_spec,
)

SubsystemName = Literal["Mecha", "Opto", "Micro1", "Micro2"]


class ConfigError(ValueError):
    """Configuration text failed to parse or validate."""


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class ParamsBlock(_Strict):
    """SystemParams mirror; SI units, pairs as two-element arrays."""

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


class OperatingBlock(_Strict):
    """Effective detunings in omega_m units."""

    delta_c: float
    delta_w: tuple[float, float]


class AxisBlock(_Strict):
    target: str
    start: float
    stop: float
    count: int = DEFAULT_GRID_COUNT

    @field_validator("target")
    @classmethod
    def _known_target(cls, v: str) -> str:
        if v not in AXIS_TARGETS:
            raise ValueError(
                f"unknown axis target {v!r}; expected one of {AXIS_TARGETS}"
            )
        return v


class SweepBlock(_Strict):
    axis: AxisBlock
    delta_w_tie: Literal["opposite", "common", "independent"] = "opposite"
    bipartitions: list[tuple[SubsystemName, SubsystemName]] = [
        ("Micro1", "Micro2")
    ]


class OutputBlock(_Strict):
    path: Optional[str] = None
    format: Literal["csv", "json"] = "csv"


class RunConfig(_Strict):
    params: ParamsBlock
    operating: OperatingBlock
    sweep: Optional[SweepBlock] = None
    output: OutputBlock = OutputBlock()


def _format_validation_error(exc: ValidationError) -> str:
    parts = []
    for err in exc.errors():
        path = ".".join(str(loc) for loc in err["loc"]) or "<root>"
        parts.append(f"{path}: {err['msg']}")
    return "; ".join(parts)


def parse_config(text: str) -> RunConfig:
    """Parse and fully validate a configuration from JSON text."""
    try:
        cfg = RunConfig.model_validate_json(text)
    except ValidationError as exc:
        raise ConfigError(_format_validation_error(exc)) from None
    try:
        validate_params(to_system_params(cfg))
        if cfg.sweep is not None:
            validate_spec(to_sweep_spec(cfg))
    except (ParameterError, SweepSpecError) as exc:
        raise ConfigError(str(exc)) from None
    return cfg


def serialize_config(cfg: RunConfig) -> str:
    """Inverse of parse_config: parse_config(serialize_config(c)) == c."""
    return cfg.model_dump_json(indent=2)


def to_system_params(cfg: RunConfig) -> SystemParams:
    return SystemParams(**cfg.params.model_dump())


def to_operating_settings(cfg: RunConfig) -> OperatingSettings:
    tie = cfg.sweep.delta_w_tie if cfg.sweep is not None else "opposite"
    return OperatingSettings(
        delta_c=cfg.operating.delta_c,
        delta_w=cfg.operating.delta_w,
        delta_w_tie=tie,
    )


def to_sweep_spec(cfg: RunConfig) -> SweepSpec:
    if cfg.sweep is None:
        raise ConfigError("configuration has no sweep block")
    pairs = tuple(
        (Subsystem(s1), Subsystem(s2)) for s1, s2 in cfg.sweep.bipartitions
    )
    return SweepSpec(
        base=to_system_params(cfg),
        operating=to_operating_settings(cfg),
        axis=SweepAxis(**cfg.sweep.axis.model_dump()),
        bipartitions=pairs,
    )
