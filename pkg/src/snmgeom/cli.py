"""Command-line interface.

Usage:
    snmgeom curvature --surface sphere --C 0,0,1 --grid 10x10 --out K.csv
    snmgeom generate cylindrical --K 1 --grid 40x10 --out band
    snmgeom verify all --seed 42 --out report.json

Every option may also be given in a TOML file passed with ``--config``;
options on the command line take precedence.
"""

from __future__ import annotations

import sys
from pathlib import Path
from typing import Any

import click

from .axis_orthogonal import BRANCH_LIMIT, axis_orthogonal_profile
from .connection import CanonicalConnection
from .cylindrical import CylinderSpec
from .errors import GeometryError
from .mesh import CURVATURE_HEADER, CURVE_HEADER, curvature_rows, curve_rows, grid_mesh, \
    json_dumps, rows_to_csv, write_obj
from .rotational import RotationalSurface
from .surfaces import REGISTRY, SurfaceSpec, build_surface, generating_curve_profile, load_toml
from .verification import run_all, run_suite, suite_names

__all__ = ["cli", "parse_vector", "parse_grid", "parse_params"]


def parse_vector(text: str) -> CanonicalConnection:
    try:
        parts = [float(p) for p in str(text).split(",")]
    except ValueError:
        raise click.BadParameter(f"expected a,b,c, got {text!r}") from None
    if len(parts) != 3:
        raise click.BadParameter(f"expected three components, got {text!r}")
    try:
        return CanonicalConnection.from_vector(parts)
    except GeometryError as e:
        raise click.BadParameter(str(e)) from None


def parse_grid(text: str) -> tuple[int, int]:
    try:
        n_s, n_t = (int(p) for p in str(text).lower().split("x"))
    except ValueError:
        raise click.BadParameter(f"expected NxM, got {text!r}") from None
    if n_s < 2 or n_t < 2:
        raise click.BadParameter("grid needs at least 2 points per direction")
    return n_s, n_t


def parse_params(items) -> dict[str, float]:
    out = {}
    for item in items:
        key, sep, value = str(item).partition("=")
        if not sep:
            raise click.BadParameter(f"expected key=value, got {item!r}")
        try:
            out[key.strip()] = float(value)
        except ValueError:
            raise click.BadParameter(f"parameter {key!r} is not a number") from None
    return out


def _load_config(path: str | None) -> dict[str, Any]:
    if not path:
        return {}
    return load_toml(path)


def _resolve(ctx: click.Context, name: str, value, config: dict, key: str | None = None):
    """Command-line value unless it was left at its default and the config sets it."""
    key = key or name
    source = ctx.get_parameter_source(name)
    if source == click.core.ParameterSource.DEFAULT:
        for k in (key, key.replace("_", "-")):
            if k in config:
                return config[k]
    return value


def _emit(text: str, out: str) -> None:
    if out == "-":
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text, encoding="utf-8")


@click.group()
@click.version_option(package_name="artifact")
def cli():
    """Curvature of surfaces under the canonical semi-symmetric non-metric connection."""


@cli.command()
@click.option("--surface", default="plane", show_default=True,
              help=f"One of: {', '.join(sorted(REGISTRY))}.")
@click.option("--param", "params", multiple=True, metavar="KEY=VALUE",
              help="Surface parameter override; repeatable.")
@click.option("--C", "C", default="0,0,1", show_default=True, help="Field C (normalized).")
@click.option("--grid", default="10x10", show_default=True, help="Samples NxM in (s, t).")
@click.option("--method", type=click.Choice(["auto", "analytic", "fd"]), default="auto",
              show_default=True, help="Derivative source for the pipeline.")
@click.option("--out", default="-", show_default=True, help="Output path; '-' is stdout.")
@click.option("--format", "fmt_", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True)
@click.option("--config", type=click.Path(exists=True, dir_okay=False), default=None)
@click.pass_context
def curvature(ctx, surface, params, C, grid, method, out, fmt_, config):
    """Sample K~, G, H, <C,N> and K on a parameter grid of a named surface."""
    cfg = _load_config(config)
    surface = _resolve(ctx, "surface", surface, cfg)
    C = _resolve(ctx, "C", C, cfg)
    grid = _resolve(ctx, "grid", grid, cfg)
    method = _resolve(ctx, "method", method, cfg)
    out = _resolve(ctx, "out", out, cfg)
    fmt_ = _resolve(ctx, "fmt_", fmt_, cfg, key="format")
    merged = {k: float(v) for k, v in cfg.get("params", {}).items()}
    merged.update(parse_params(params))
    if isinstance(C, (list, tuple)):
        C = ",".join(str(c) for c in C)
    conn = parse_vector(C)
    n_s, n_t = parse_grid(grid)
    if surface not in REGISTRY:
        raise click.BadParameter(f"unknown surface {surface!r}; known: {sorted(REGISTRY)}",
                                 param_hint="--surface")
    try:
        patch = SurfaceSpec(surface, merged).build()
    except (KeyError, GeometryError) as e:
        raise click.UsageError(str(e)) from None
    rows = curvature_rows(patch, conn, n_s, n_t, method=method)
    if fmt_ == "csv":
        text = rows_to_csv(CURVATURE_HEADER, rows)
    else:
        records = []
        for r in rows:
            rec = {h: float(v) for h, v in zip(CURVATURE_HEADER[:-1], r[:-1])}
            rec["status"] = r[-1]
            records.append(rec)
        text = json_dumps(records)
    _emit(text, out)


@cli.command()
@click.argument("family", type=click.Choice(["cylindrical", "rotational", "graph"]))
@click.option("--K", "K", type=float, default=None, help="Target K (cylindrical).")
@click.option("--c", "c", type=float, default=None, help="Family parameter (graph).")
@click.option("--branch", type=click.Choice(["plus", "minus"]), default="minus",
              show_default=True, help="Axis slope branch (rotational).")
@click.option("--x-max", "x_max", type=float, default=1.5, show_default=True,
              help="Profile extent from the axis (rotational).")
@click.option("--grid", default="40x20", show_default=True, help="Mesh samples NxM.")
@click.option("--curve-samples", type=int, default=201, show_default=True)
@click.option("--out", required=True, help="Output prefix; writes PREFIX.obj and PREFIX.csv.")
@click.option("--format", "fmt_", type=click.Choice(["obj"]), default="obj",
              show_default=True)
@click.option("--config", type=click.Path(exists=True, dir_okay=False), default=None)
@click.pass_context
def generate(ctx, family, K, c, branch, x_max, grid, curve_samples, out, fmt_, config):
    """Build a classified surface, write its OBJ mesh and generating-curve CSV."""
    cfg = _load_config(config)
    K = _resolve(ctx, "K", K, cfg)
    c = _resolve(ctx, "c", c, cfg)
    branch = _resolve(ctx, "branch", branch, cfg)
    x_max = float(_resolve(ctx, "x_max", x_max, cfg))
    grid = _resolve(ctx, "grid", grid, cfg)
    curve_samples = int(_resolve(ctx, "curve_samples", curve_samples, cfg))
    n_s, n_t = parse_grid(grid)
    profile = None
    try:
        if family == "cylindrical":
            if K is None:
                raise click.UsageError("cylindrical family needs --K")
            profile = generating_curve_profile(float(K))
            patch = CylinderSpec(profile).patch((-1.0, 1.0))
        elif family == "rotational":
            if not 0 < x_max < BRANCH_LIMIT[branch]:
                raise click.UsageError(f"--x-max must lie in (0, {BRANCH_LIMIT[branch]:.6g}) "
                                       f"for the {branch} branch")
            profile = axis_orthogonal_profile(branch, x_max).profile()
            patch = RotationalSurface(profile).patch()
        else:
            if c is None:
                raise click.UsageError("graph family needs --c")
            patch = build_surface("graph", c=float(c), fraction=0.9)
    except GeometryError as e:
        raise click.UsageError(str(e)) from None
    mesh = grid_mesh(patch, n_s, n_t)
    Path(f"{out}.obj").write_text(write_obj(mesh), encoding="utf-8")
    written = [f"{out}.obj"]
    if profile is not None:
        Path(f"{out}.csv").write_text(rows_to_csv(CURVE_HEADER,
                                                  curve_rows(profile, curve_samples)),
                                      encoding="utf-8")
        written.append(f"{out}.csv")
    click.echo(f"wrote {', '.join(written)} ({len(mesh.vertices)} vertices, "
               f"{len(mesh.faces)} faces)", err=True)


@cli.command()
@click.argument("suite", default="all")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", default="-", show_default=True, help="Output path; '-' is stdout.")
@click.option("--format", "fmt_", type=click.Choice(["json"]), default="json",
              show_default=True)
@click.option("--timing", is_flag=True, help="Include wall-clock runtimes (not reproducible).")
@click.option("--config", type=click.Path(exists=True, dir_okay=False), default=None)
@click.pass_context
def verify(ctx, suite, seed, out, fmt_, timing, config):
    """Run verification suites; exit status 1 if any check fails.

    SUITE is 'all' or one of the suite names listed by --help.
    """
    cfg = _load_config(config)
    suite = _resolve(ctx, "suite", suite, cfg)
    seed = int(_resolve(ctx, "seed", seed, cfg))
    out = _resolve(ctx, "out", out, cfg)
    if suite != "all" and suite not in suite_names():
        raise click.BadParameter(f"unknown suite {suite!r}; known: all, "
                                 f"{', '.join(suite_names())}", param_hint="SUITE")
    checks = run_all(seed) if suite == "all" else run_suite(suite, seed)
    _emit(json_dumps([c.to_dict(timing) for c in checks]), out)
    failed = [c for c in checks if not c.passed]
    for c in failed:
        click.echo(f"FAIL [{c.anchor}] {c.name}", err=True)
    if failed:
        sys.exit(1)


verify.help = (verify.help or "") + f"\n\nSuites: {', '.join(suite_names())}."


def main():  # pragma: no cover
    cli()


if __name__ == "__main__":  # pragma: no cover
    main()
