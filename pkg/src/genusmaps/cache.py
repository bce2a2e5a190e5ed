"""Persistent JSON cache of per-genus solutions.

The cache is an optimization, never a source of truth: every record is
re-validated against the structural invariants on load, and anything that
fails validation is silently recomputed.  All integers are stored as
decimal strings so downstream consumers never truncate them.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Optional

from .algebra import FactoredRat, Poly
from .engine import (
    EngineError,
    GenusSolution,
    GenusTable,
    ModelSpec,
    _extract_poly,
    base_case,
    solve_genus,
)

FORMAT_VERSION = 1

ENV_CACHE_DIR = "GENUSMAPS_CACHE_DIR"


class CacheInvalid(Exception):
    pass


def cache_path(cache_dir: str | Path, model: ModelSpec) -> Path:
    return Path(cache_dir) / f"genusmaps-v{FORMAT_VERSION}-{model.kind}.json"


def solution_record(sol: GenusSolution) -> dict:
    f = sol.c_of_t
    return {
        "genus": sol.genus,
        "offset": f.t_power,
        "coefficients": [str(int(c)) for c in f.num.coeffs],
        "denom": [{"k": k, "exp": e} for k, e in f.den],
    }


def record_to_solution(model: ModelSpec, rec: dict) -> GenusSolution:
    try:
        g = int(rec["genus"])
        offset = int(rec["offset"])
        coeffs = [int(c) for c in rec["coefficients"]]
        den = tuple((int(d["k"]), int(d["exp"])) for d in rec["denom"])
    except (KeyError, TypeError, ValueError) as exc:
        raise CacheInvalid(str(exc)) from exc
    f = FactoredRat.make(offset, Poly.from_list(coeffs), den)
    if g == 0:
        if f != model.base0:
            raise CacheInvalid("genus-0 record disagrees with closed form")
        return GenusSolution(0, f, None)
    try:
        poly = _extract_poly(model, g, f)
    except EngineError as exc:
        raise CacheInvalid(str(exc)) from exc
    if g == 1 and f != model.base1:
        raise CacheInvalid("genus-1 record disagrees with closed form")
    return GenusSolution(g, f, poly)


def save_table(cache_dir: str | Path, table: GenusTable) -> Path:
    path = cache_path(cache_dir, table.model)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {
        "format_version": FORMAT_VERSION,
        "model": table.model.kind,
        "solutions": [solution_record(s) for s in table.solutions],
    }
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh, indent=1)
        os.replace(tmp, path)
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)
    return path


def load_solutions(cache_dir: str | Path, model: ModelSpec) -> list[GenusSolution]:
    """Validated cached solutions, as a contiguous prefix 0..k."""
    path = cache_path(cache_dir, model)
    if not path.exists():
        return []
    try:
        with open(path) as fh:
            payload = json.load(fh)
        if payload.get("format_version") != FORMAT_VERSION:
            return []
        if payload.get("model") != model.kind:
            return []
        records = payload["solutions"]
    except (OSError, ValueError, KeyError):
        return []
    out: list[GenusSolution] = []
    for rec in records:
        try:
            sol = record_to_solution(model, rec)
        except CacheInvalid:
            break
        if sol.genus != len(out):
            break
        out.append(sol)
    return out


def load_or_solve(model: ModelSpec, g_max: int,
                  cache_dir: Optional[str | Path]) -> tuple[GenusTable, set[int]]:
    """Build a table to g_max, reusing validated cache entries.

    Returns the table and the set of genera that came from the cache.
    """
    table = GenusTable(model)
    hits: set[int] = set()
    if cache_dir is not None:
        for sol in load_solutions(cache_dir, model):
            if sol.genus > g_max:
                break
            table.append(sol)
            hits.add(sol.genus)
    table.extend_to(g_max)
    if cache_dir is not None and len(hits) <= g_max:
        save_table(cache_dir, table)
    return table, hits


def default_cache_dir() -> Optional[str]:
    return os.environ.get(ENV_CACHE_DIR)
