"""CLI entry point for the triangle inscriber."""

import logging
import math
import re
import sys
from dataclasses import replace
from pathlib import Path
from typing import NoReturn

import click
from rich.console import Console
from rich.table import Table

from triangle_inscriber import __version__
from triangle_inscriber.config import AppConfig, load_config
from triangle_inscriber.curves.base import Curve
from triangle_inscriber.curves.parametric import make_circle, make_ellipse, make_half_lemniscate, make_star
from triangle_inscriber.curves.spline import make_spline, read_point_file
from triangle_inscriber.errors import (
    ConfigError,
    DegenerateTriangleError,
    EmbeddingError,
    InscriberError,
    InvalidParameterError,
    NonC1CurveError,
    SpecParseError,
)
from triangle_inscriber.geometry.shape_space import Triangle, orientation, shape_of

# stdout carries JSON only; tables and messages go to stderr
console = Console(stderr=True)

EXIT_VALIDATION = 2
EXIT_NOT_FOUND = 3
EXIT_PARSE = 4

_TOKEN = re.compile(r"\S+")


def _setup_logging(config: AppConfig):
    """Configure logging based on config."""
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if config.logging.file:
        log_dir = Path(config.logging.file).parent
        log_dir.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(config.logging.file, encoding="utf-8"))

    logging.basicConfig(
        level=getattr(logging, config.logging.level, logging.INFO),
        format=config.logging.format,
        handlers=handlers,
        force=True,
    )


def _init_app() -> AppConfig:
    """Load config and set up logging."""
    try:
        config = load_config()
    except ConfigError as e:
        _fail(f"Invalid configuration: {e}", EXIT_VALIDATION)
    _setup_logging(config)
    return config


def _fail(message: str, code: int) -> NoReturn:
    console.print(f"[bold red]❌ {message}[/]")
    sys.exit(code)


def _float(token: str, text: str, position: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise SpecParseError(f"not a number: {token!r}", text, position) from None
    if not math.isfinite(value):
        raise SpecParseError(f"not a finite number: {token!r}", text, position)
    return value


def _numbers(body: str, text: str, offset: int, count: int) -> list[float]:
    """Parse `count` comma-separated numbers; positions are reported relative to `text`."""
    parts = body.split(",")
    if len(parts) != count:
        raise SpecParseError(f"expected {count} comma-separated numbers, got {len(parts)}", text, offset)
    values, pos = [], offset
    for part in parts:
        values.append(_float(part.strip(), text, pos))
        pos += len(part) + 1
    return values


def parse_triangle(text: str) -> Triangle:
    """'x0,y0 x1,y1 x2,y2' or one of the presets equilateral, right-isosceles, obtuse-isosceles:DEG."""
    from triangle_inscriber.solver.counterexample import leftward_isosceles

    spec = text.strip()
    if spec == "equilateral":
        return Triangle(0j, 1 + 0j, complex(0.5, math.sqrt(3) / 2))
    if spec == "right-isosceles":
        return Triangle(0j, 1 + 0j, 1j)
    if spec.startswith("obtuse-isosceles:"):
        offset = text.index(":") + 1
        (angle,) = _numbers(text[offset:], text, offset, 1)
        if not 90 < angle < 180:
            raise SpecParseError(f"obtuse apex angle must lie in (90, 180), got {angle:g}", text, offset)
        return leftward_isosceles(angle)

    tokens = list(_TOKEN.finditer(text))
    if len(tokens) != 3:
        raise SpecParseError(f"expected 3 points 'x,y', got {len(tokens)}", text, tokens[3].start() if len(tokens) > 3 else len(text))
    points = [_numbers(m.group(), text, m.start(), 2) for m in tokens]
    return Triangle.from_pairs(points)


def parse_curve(text: str) -> Curve:
    """circle | ellipse:a,b | star:eps,k | spline:PATH | lemniscate."""
    name, _, body = text.strip().partition(":")
    offset = text.find(":") + 1
    if name == "circle" and not body:
        return make_circle()
    if name == "lemniscate" and not body:
        return make_half_lemniscate()
    if name == "ellipse":
        a, b = _numbers(body, text, offset, 2)
        return make_ellipse(a, b)
    if name == "star":
        eps, k = _numbers(body, text, offset, 2)
        if k != int(k):
            raise SpecParseError(f"star lobe count must be an integer, got {k:g}", text, text.rfind(",") + 1)
        return make_star(eps, int(k))
    if name == "spline":
        if not body:
            raise SpecParseError("spline needs a point file path", text, offset)
        path = Path(body)
        if not path.is_file():
            raise SpecParseError(f"point file not found: {body}", text, offset)
        return make_spline(read_point_file(path), name=f"spline:{path.name}")
    raise SpecParseError(f"unknown curve {name!r}", text, 0)


def _load_curve(text: str) -> Curve:
    try:
        return parse_curve(text)
    except SpecParseError as e:
        _fail(f"Cannot parse curve: {e}", EXIT_PARSE)
    except (EmbeddingError, InvalidParameterError) as e:
        _fail(f"Curve rejected: {e}", EXIT_VALIDATION)


def _load_triangle(text: str) -> Triangle:
    try:
        return parse_triangle(text)
    except (SpecParseError, DegenerateTriangleError, ValueError) as e:
        _fail(f"Cannot parse triangle: {e}", EXIT_PARSE)


def _emit(data, json_path: str | None):
    from triangle_inscriber.output.serialize import dump_json

    click.echo(dump_json(data, json_path))
    if json_path:
        console.print(f"[dim]JSON written to {json_path}[/]")


@click.group()
@click.version_option(version=__version__, prog_name="triangle-inscriber")
def cli():
    """🔺 Triangle Inscriber

    Find triangles of a prescribed shape inscribed in closed plane curves.
    """
    pass


@cli.command()
@click.argument("triangle")
@click.option("--tol", type=float, default=None, help="Classification tolerance (default from config)")
@click.option("--json", "json_path", default=None, help="Also write the JSON report to this path")
def shape(triangle, tol, json_path):
    """Shape, Hopf coordinate and classes of a triangle."""
    config = _init_app()
    from triangle_inscriber.output.serialize import shape_summary

    t = _load_triangle(triangle)
    tol = tol if tol is not None else config.cli.tol
    if not tol > 0:
        _fail(f"--tol must be > 0, got {tol}", EXIT_VALIDATION)
    summary = shape_summary(shape_of(t), tol)

    table = Table(title="Triangle shape")
    table.add_column("Field", style="cyan")
    table.add_column("Value", style="green")
    table.add_row("hopf", str(summary["hopf"]))
    table.add_row("classes", ", ".join(summary["classes"]))
    table.add_row("orientation", f"{summary['orientation']:+d}")
    console.print(table)
    _emit(summary, json_path)


@cli.command()
@click.option("--curve", "-c", "curve_spec", required=True, help="circle | ellipse:a,b | star:eps,k | spline:PATH | lemniscate")
@click.option("--triangle", "-t", "triangle_spec", required=True, help="'x0,y0 x1,y1 x2,y2' or a preset")
@click.option("--tol", type=float, default=None, help="Classification tolerance for the target")
@click.option("--grid", "-g", type=int, default=None, help="Scan resolution per axis (default from config)")
@click.option("--all-labelings", is_flag=True, help="Solve for all 6 vertex orderings")
@click.option("--svg", "svg_path", default=None, help="Write an SVG figure to this path")
@click.option("--json", "json_path", default=None, help="Also write the JSON report to this path")
def solve(curve_spec, triangle_spec, tol, grid, all_labelings, svg_path, json_path):
    """Find the triangles of the given shape inscribed in a curve."""
    config = _init_app()
    from triangle_inscriber.output.serialize import report_to_dict, shape_summary
    from triangle_inscriber.output.svg import render_svg, write_svg
    from triangle_inscriber.solver.search import solve as run_solve
    from triangle_inscriber.solver.search import solve_labelings

    curve = _load_curve(curve_spec)
    triangle = _load_triangle(triangle_spec)
    target = shape_of(triangle)
    solver_cfg = replace(config.solver, grid_n=grid) if grid else config.solver

    console.print(f"\n[bold blue]🔎 Solving on {curve.name} (grid {solver_cfg.grid_n}^3)[/]")
    try:
        if all_labelings:
            runs = solve_labelings(curve, triangle, solver_cfg)
        else:
            runs = [((0, 1, 2), run_solve(curve, target, solver_cfg))]
    except (EmbeddingError, ConfigError) as e:
        _fail(f"Validation failed: {e}", EXIT_VALIDATION)

    table = Table(title="Solve results")
    table.add_column("Labeling", style="cyan")
    table.add_column("Status")
    table.add_column("Solutions", justify="right")
    table.add_column("Best residual", justify="right", style="green")
    for perm, report in runs:
        style = "green" if report.found else "red"
        table.add_row("".join(map(str, perm)), f"[{style}]{report.status}[/]", str(len(report.solutions)), f"{report.best_residual:.3e}")
    console.print(table)

    reports = [r for _, r in runs]
    solutions = [s for r in reports for s in r.solutions]
    if any(r.found for r in reports):
        status = "found"
    else:
        status = reports[0].status
    data = {
        "curve": curve.name,
        "target": shape_summary(target, tol if tol is not None else config.cli.tol),
        "status": status,
        "grid": solver_cfg.grid_n,
        "min_residual": min((r.best_residual for r in reports if math.isfinite(r.best_residual)), default=None),
        "reports": [report_to_dict(r, perm if all_labelings else None) for perm, r in runs],
    }
    _emit(data, json_path)

    if svg_path:
        write_svg(svg_path, render_svg(curve, solutions, target, samples=config.cli.svg_samples))
        console.print(f"[dim]SVG written to {svg_path}[/]")

    if curve.is_c1 and orientation(target) != 0 and not all(r.found for r in reports):
        _fail("No inscribed triangle found on a C1 curve; increase --grid", EXIT_NOT_FOUND)


@cli.command()
@click.option("--curve", "-c", "curve_spec", required=True, help="circle | ellipse:a,b | star:eps,k | spline:PATH")
@click.option("--grid", "-g", type=int, default=None, help="Scan resolution per axis (default from config)")
@click.option("--json", "json_path", default=None, help="Also write the JSON report to this path")
def degree(curve_spec, grid, json_path):
    """Bidegree (preimage counts mod 2 at both equilateral probes)."""
    config = _init_app()
    from triangle_inscriber.output.serialize import bidegree_to_dict
    from triangle_inscriber.solver.degree import bidegree

    curve = _load_curve(curve_spec)
    solver_cfg = replace(config.solver, grid_n=grid) if grid else config.solver

    console.print(f"\n[bold blue]🧮 Bidegree of {curve.name} (grid {solver_cfg.grid_n}^3)[/]")
    try:
        report = bidegree(curve, solver_cfg, config.degree)
    except (NonC1CurveError, EmbeddingError, ConfigError) as e:
        _fail(f"Validation failed: {e}", EXIT_VALIDATION)
    except InscriberError as e:
        _fail(str(e), 1)

    table = Table(title="Bidegree")
    table.add_column("Side", style="cyan")
    table.add_column("Preimages", justify="right")
    table.add_column("Degree", justify="right", style="green")
    table.add_row("minus", str(report.preimage_counts[0]), str(report.d_minus))
    table.add_row("plus", str(report.preimage_counts[1]), str(report.d_plus))
    console.print(table)
    _emit(bidegree_to_dict(report), json_path)


@cli.command()
@click.option("--grid", "-g", type=int, default=None, help="Scan resolution per axis (default from config)")
@click.option("--angles", default=None, help="Comma-separated apex angles in degrees (default 95..175 step 10)")
@click.option("--json", "json_path", default=None, help="Also write the JSON report to this path")
def counterexample(grid, angles, json_path):
    """Obtuse isosceles shapes on the half-lemniscate versus the circle."""
    config = _init_app()
    from triangle_inscriber.output.serialize import sweep_to_records
    from triangle_inscriber.solver.counterexample import DEFAULT_APEX_ANGLES, counterexample_sweep

    if angles:
        try:
            apexes = _numbers(angles, angles, 0, angles.count(",") + 1)
        except SpecParseError as e:
            _fail(f"Cannot parse angles: {e}", EXIT_PARSE)
        if not all(0 < a < 180 for a in apexes):
            _fail("apex angles must lie in (0, 180)", EXIT_PARSE)
    else:
        apexes = list(DEFAULT_APEX_ANGLES)
    grid_n = grid or config.cli.counterexample_grid

    console.print(f"\n[bold blue]📐 Counterexample sweep over {len(apexes)} apex angles (grid {grid_n}^3)[/]")
    df = counterexample_sweep(apexes, grid_n, config.solver)

    table = Table(title="Half-lemniscate vs circle")
    table.add_column("Apex", justify="right", style="cyan")
    table.add_column("Lemniscate min residual", justify="right")
    table.add_column("Circle residual", justify="right", style="green")
    for row in df.itertuples():
        table.add_row(f"{row.apex_deg:g}°", f"{row.lemniscate_min_residual:.4e}", f"{row.circle_residual:.2e}")
    console.print(table)

    _emit({"grid": grid_n, "rows": sweep_to_records(df)}, json_path)


if __name__ == "__main__":
    cli()
