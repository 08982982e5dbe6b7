"""HTTP endpoints: single-point evaluation, sweeps, presets, self-check.

Error mapping: configuration problems are 400 (or FastAPI's native 422
for malformed bodies); numerical failures are 500 with a structured
detail so clients can distinguish them from transport errors.  An
unstable operating point is a finding, not an error: /eval returns it as
a normal report with the entanglement fields null.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query, Response
from fastapi.responses import JSONResponse

from .. import __version__, gaussian
from ..config import (
    ConfigError,
    RunConfig,
    to_operating_settings,
    to_sweep_spec,
    to_system_params,
)
from ..dynamics import (
    EigenSolverError,
    diffusion_matrix,
    drift_matrix,
    stability,
)
from ..gaussian import reduce_bipartite, residual_norm, solve_lyapunov
from ..model import ParameterError, bare_detunings, steady_state, validate_params
from ..presets import PRESET_IDS, UnknownPresetError, preset, preset_description
from ..selfcheck import run_checks
from ..sweep import (
    ALL_BIPARTITIONS,
    SweepSpecError,
    pair_label,
    run_sweep,
    validate_spec,
)
from ..tables import rows_to_csv, rows_to_json
from .schemas import CheckOutcome, CheckReport, EvalReport, PresetInfo, ServiceInfo

_MEDIA = {"csv": "text/csv", "json": "application/json"}


def _numerical_failure(exc: Exception) -> HTTPException:
    return HTTPException(
        status_code=500,
        detail={"code": "numerical_failure", "message": str(exc)},
    )


def evaluate_config(cfg: RunConfig) -> EvalReport:
    """Full single-point pipeline for /eval (and the CLI eval command)."""
    p = validate_params(to_system_params(cfg))
    om = p.omega_m
    operating = to_operating_settings(cfg)
    point = steady_state(
        p, operating.delta_c * om,
        (operating.delta_w[0] * om, operating.delta_w[1] * om),
    )
    a = drift_matrix(p, point).scaled(1.0 / om)
    d = diffusion_matrix(p, point).scaled(1.0 / om)
    report = stability(a)
    e_n: dict[str, float | None] = {
        pair_label(s1, s2): None for s1, s2 in ALL_BIPARTITIONS
    }
    residual = None
    if report.stable:
        v = solve_lyapunov(a, d)
        v.require_physical()
        residual = residual_norm(a, d, v)
        for s1, s2 in ALL_BIPARTITIONS:
            e_n[pair_label(s1, s2)] = gaussian.log_negativity(
                reduce_bipartite(v, s1, s2)
            )
    d0c, d0w1, d0w2 = bare_detunings(point, p)
    return EvalReport(
        stable=report.stable,
        max_real_eig_over_omega_m=report.max_real_eig,
        g_c_over_omega_m=point.g_c / om,
        g_w_over_omega_m=(point.g_w[0] / om, point.g_w[1] / om),
        alpha_s=point.alpha_s,
        beta_s=point.beta_s,
        q_s=point.q_s,
        n_mech=point.n_mech,
        n_w=point.n_w,
        bare_delta_c_over_omega_m=d0c / om,
        bare_delta_w_over_omega_m=(d0w1 / om, d0w2 / om),
        e_n=e_n,
        lyapunov_residual=residual,
    )


def sweep_config_body(cfg: RunConfig, fmt: str) -> tuple[str, str]:
    """Render a config-driven sweep; returns (body, media type)."""
    spec = validate_spec(to_sweep_spec(cfg))
    rows = run_sweep(spec)
    labels = [pair_label(s1, s2) for s1, s2 in spec.bipartitions]
    render = rows_to_csv if fmt == "csv" else rows_to_json
    return render([("sweep", rows)], labels), _MEDIA[fmt]


def sweep_preset_body(preset_id: str, grid: int | None, fmt: str) -> tuple[str, str]:
    """Render a preset sweep (all its curves in one table)."""
    curves = preset(preset_id) if grid is None else preset(preset_id, grid)
    results = [(label, run_sweep(spec)) for label, spec in curves]
    labels = [pair_label(s1, s2) for s1, s2 in curves[0][1].bipartitions]
    render = rows_to_csv if fmt == "csv" else rows_to_json
    return render(results, labels), _MEDIA[fmt]


def create_app() -> FastAPI:
    app = FastAPI(
        title="quadmode",
        version=__version__,
        description=(
            "Stationary Gaussian entanglement of a four-mode "
            "optoelectromechanical system"
        ),
    )

    @app.exception_handler(ConfigError)
    async def _config_error(_, exc: ConfigError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/", response_model=ServiceInfo)
    def info() -> ServiceInfo:
        return ServiceInfo(
            name="quadmode",
            version=__version__,
            endpoints=["/presets", "/eval", "/sweep", "/sweep/preset/{id}", "/check"],
        )

    @app.get("/presets", response_model=list[PresetInfo])
    def presets() -> list[PresetInfo]:
        out = []
        for pid in PRESET_IDS:
            curves = preset(pid)
            out.append(
                PresetInfo(
                    id=pid,
                    description=preset_description(pid),
                    curves=[label for label, _ in curves],
                    axis_target=curves[0][1].axis.target,
                    grid_count=curves[0][1].axis.count,
                )
            )
        return out

    @app.post("/eval", response_model=EvalReport)
    def eval_point(cfg: RunConfig) -> EvalReport:
        if cfg.sweep is not None:
            raise HTTPException(
                status_code=400,
                detail="eval needs a config without a sweep block; use /sweep",
            )
        try:
            return evaluate_config(cfg)
        except (ParameterError, ConfigError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        except (
            gaussian.LyapunovSolveError,
            gaussian.UnphysicalCovarianceError,
            EigenSolverError,
        ) as exc:
            raise _numerical_failure(exc) from exc

    @app.post("/sweep")
    def sweep_endpoint(
        cfg: RunConfig,
        format: str | None = Query(default=None, pattern="^(csv|json)$"),
    ) -> Response:
        if cfg.sweep is None:
            raise HTTPException(
                status_code=400, detail="config has no sweep block"
            )
        fmt = format or cfg.output.format
        try:
            body, media = sweep_config_body(cfg, fmt)
        except (ParameterError, ConfigError, SweepSpecError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        except EigenSolverError as exc:
            raise _numerical_failure(exc) from exc
        return Response(content=body, media_type=media)

    @app.get("/sweep/preset/{preset_id}")
    def sweep_preset(
        preset_id: str,
        grid: int | None = Query(default=None, ge=2),
        format: str = Query(default="csv", pattern="^(csv|json)$"),
    ) -> Response:
        try:
            body, media = sweep_preset_body(preset_id, grid, format)
        except UnknownPresetError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        except EigenSolverError as exc:
            raise _numerical_failure(exc) from exc
        return Response(content=body, media_type=media)

    @app.post("/check", response_model=CheckReport)
    def check() -> CheckReport:
        results = run_checks()
        return CheckReport(
            passed=all(r.passed for r in results),
            results=[
                CheckOutcome(name=r.name, passed=r.passed, detail=r.detail)
                for r in results
            ],
        )

    return app
