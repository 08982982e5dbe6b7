"""Command-line client for the simulation service.

The CLI only speaks the service's HTTP interface.  By default it mounts
the application in-process (no socket, no separate server needed); with
--server it talks to a remote instance instead, so scripted workflows and
a shared deployment see exactly the same behavior.

Exit codes: 0 success (an unstable operating point is a finding, not a
failure), 1 usage or configuration error, 2 numerical failure.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import httpx

from . import __version__

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    # mount the ASGI app in-process; the portal-backed client keeps the
    # CLI a pure HTTP client without needing a separate server process
    import warnings

    with warnings.catch_warnings():
        # some starlette/httpx pairings warn about their own test client
        warnings.simplefilter("ignore")
        from starlette.testclient import TestClient

    from .service import create_app

    return TestClient(create_app(), raise_server_exceptions=False)


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _check_response(resp: httpx.Response) -> None:
    if resp.status_code < 400:
        return
    try:
        detail = resp.json().get("detail", resp.text)
    except ValueError:
        detail = resp.text
    if isinstance(detail, dict) and detail.get("code") == "numerical_failure":
        _fail(detail.get("message", "numerical failure"), EXIT_NUMERICAL)
    if resp.status_code >= 500:
        _fail(str(detail), EXIT_NUMERICAL)
    _fail(str(detail), EXIT_USAGE)


def _read_config(path: str) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        _fail(f"cannot read config {path}: {exc}", EXIT_USAGE)
    try:
        return json.loads(text)
    except ValueError as exc:
        _fail(f"config {path} is not valid JSON: {exc}", EXIT_USAGE)


def _write_output(path: str, body: str) -> None:
    try:
        Path(path).write_text(body, encoding="utf-8")
    except OSError as exc:
        _fail(f"cannot write {path}: {exc}", EXIT_USAGE)


@click.group()
@click.version_option(version=__version__, prog_name="quadmode")
@click.option(
    "--server",
    default=None,
    metavar="URL",
    help="Base URL of a running service; default runs the service in-process.",
)
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Stationary entanglement of the four-mode optoelectromechanical system."""
    ctx.obj = server


@main.command("eval")
@click.option("--config", "config_path", required=True, metavar="PATH")
@click.option("--out", "out_path", default=None, metavar="PATH",
              help="Also write the full JSON report to this file.")
@click.pass_obj
def cmd_eval(server: str | None, config_path: str, out_path: str | None) -> None:
    """Evaluate one operating point (config must have no sweep block)."""
    cfg = _read_config(config_path)
    with _client(server) as client:
        resp = client.post("/eval", json=cfg)
        _check_response(resp)
    report = resp.json()
    click.echo(f"stable: {report['stable']}")
    click.echo(f"max Re eig / omega_m: {report['max_real_eig_over_omega_m']:.6e}")
    click.echo(f"G_c / omega_m: {report['g_c_over_omega_m']:.6f}")
    gw = report["g_w_over_omega_m"]
    click.echo(f"G_w / omega_m: {gw[0]:.6f}, {gw[1]:.6f}")
    click.echo("logarithmic negativity:")
    for pair, value in report["e_n"].items():
        shown = "-" if value is None else f"{value:.9f}"
        click.echo(f"  {pair}: {shown}")
    res = report["lyapunov_residual"]
    click.echo(f"lyapunov residual: {'-' if res is None else f'{res:.3e}'}")
    if out_path:
        _write_output(out_path, json.dumps(report, indent=1) + "\n")


@main.command("sweep")
@click.option("--config", "config_path", default=None, metavar="PATH")
@click.option("--preset", "preset_id", default=None, metavar="NAME")
@click.option("--grid", default=None, type=int, metavar="N",
              help="Override the grid resolution.")
@click.option("--out", "out_path", default=None, metavar="PATH")
@click.option("--format", "fmt", default=None,
              type=click.Choice(["csv", "json"]))
@click.pass_obj
def cmd_sweep(
    server: str | None,
    config_path: str | None,
    preset_id: str | None,
    grid: int | None,
    out_path: str | None,
    fmt: str | None,
) -> None:
    """Run a parameter sweep from a config file or a bundled preset."""
    if (config_path is None) == (preset_id is None):
        _fail("give exactly one of --config or --preset", EXIT_USAGE)
    with _client(server) as client:
        if preset_id is not None:
            params: dict = {"format": fmt or "csv"}
            if grid is not None:
                params["grid"] = grid
            resp = client.get(f"/sweep/preset/{preset_id}", params=params)
        else:
            cfg = _read_config(config_path)
            if grid is not None:
                try:
                    cfg["sweep"]["axis"]["count"] = grid
                except (KeyError, TypeError):
                    _fail("config has no sweep.axis block", EXIT_USAGE)
            if fmt is None:
                fmt = cfg.get("output", {}).get("format", "csv")
            resp = client.post("/sweep", params={"format": fmt}, json=cfg)
            if out_path is None:
                out_path = cfg.get("output", {}).get("path")
        _check_response(resp)
    body = resp.text
    if out_path:
        _write_output(out_path, body)
        click.echo(f"wrote {out_path}")
    else:
        click.echo(body, nl=False)


@main.command("presets")
@click.pass_obj
def cmd_presets(server: str | None) -> None:
    """List the bundled sweep presets."""
    with _client(server) as client:
        resp = client.get("/presets")
        _check_response(resp)
    for info in resp.json():
        curves = ", ".join(info["curves"])
        click.echo(f"{info['id']}: {info['description']}")
        click.echo(
            f"    axis={info['axis_target']}  grid={info['grid_count']}  "
            f"curves: {curves}"
        )


@main.command("check")
@click.pass_obj
def cmd_check(server: str | None) -> None:
    """Run the built-in oracle and invariant suite."""
    with _client(server) as client:
        resp = client.post("/check")
        _check_response(resp)
    report = resp.json()
    for r in report["results"]:
        status = "PASS" if r["passed"] else "FAIL"
        click.echo(f"{status}  {r['name']}: {r['detail']}")
    if not report["passed"]:
        sys.exit(EXIT_NUMERICAL)
    click.echo("all checks passed")


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def cmd_serve(host: str, port: int) -> None:
    """Run the HTTP service with uvicorn."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
