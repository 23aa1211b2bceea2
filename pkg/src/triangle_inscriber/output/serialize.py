"""Schema-stable JSON views of shapes, solve reports and bidegree reports."""

import json
import math
from pathlib import Path
from typing import Any

import pandas as pd

from triangle_inscriber.geometry.shape_space import HopfCoord, Shape, classify, hopf, orientation
from triangle_inscriber.solver.degree import BidegreeReport
from triangle_inscriber.solver.search import Solution, SolveReport


def _num(x: float) -> float | None:
    """JSON has no infinity: non-finite numbers become null."""
    return float(x) if math.isfinite(x) else None


def shape_to_list(s: Shape) -> list[float]:
    return [float(v) for v in s.as_vector()]


def hopf_to_json(h: HopfCoord) -> list[float] | str:
    if h.value is None:
        return "inf"
    return [h.value.real, h.value.imag]


def shape_summary(s: Shape, tol: float) -> dict[str, Any]:
    cls = classify(s, tol)
    return {
        "shape": shape_to_list(s),
        "hopf": hopf_to_json(hopf(s)),
        "classes": cls.sorted_tags(),
        "primary": cls.tag.value,
        "orientation": orientation(s),
    }


def solution_to_dict(sol: Solution) -> dict[str, Any]:
    return {
        "t": [sol.p.t0, sol.p.t1, sol.p.t2],
        "residual": sol.residual,
        "vertices": [[z.real, z.imag] for z in sol.vertices],
        "regular": sol.regular,
        "newton_iters": sol.newton_iters,
    }


def report_to_dict(report: SolveReport, labeling: tuple[int, int, int] | None = None) -> dict[str, Any]:
    data: dict[str, Any] = {
        "curve": report.curve_name,
        "target": shape_to_list(report.target),
        "status": report.status,
        "grid": report.grid_n,
        "scan_minima_examined": report.scan_minima_examined,
        "best_residual": _num(report.best_residual),
        "min_scan_residual": _num(report.min_scan_residual),
        "solutions": [solution_to_dict(s) for s in report.solutions],
    }
    if labeling is not None:
        data["labeling"] = list(labeling)
    return data


def bidegree_to_dict(report: BidegreeReport) -> dict[str, Any]:
    return {
        "minus": report.d_minus,
        "plus": report.d_plus,
        "probes": [shape_to_list(p) for p in report.probes],
        "counts": list(report.preimage_counts),
        "all_regular": report.all_regular,
        "grid": report.grid_n,
    }


def dump_json(data: Any, path: str | Path | None = None) -> str:
    """Serialise with sorted keys; also write to `path` when given."""
    text = json.dumps(data, indent=2, sort_keys=True, allow_nan=False)
    if path is not None:
        Path(path).write_text(text + "\n", encoding="utf-8")
    return text


def sweep_to_records(df: pd.DataFrame) -> list[dict[str, Any]]:
    """Counterexample sweep rows with plain Python scalars."""
    records = []
    for row in df.itertuples(index=False):
        records.append(
            {
                "apex_deg": float(row.apex_deg),
                "obtuse": bool(row.obtuse),
                "lemniscate_min_residual": _num(row.lemniscate_min_residual),
                "lemniscate_min_scan_residual": _num(row.lemniscate_min_scan_residual),
                "lemniscate_solutions": int(row.lemniscate_solutions),
                "best_labeling": str(row.best_labeling),
                "circle_residual": _num(row.circle_residual),
                "circle_solutions": int(row.circle_solutions),
            }
        )
    return records
