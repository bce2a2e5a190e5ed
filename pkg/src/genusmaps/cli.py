"""Command-line front end: poly, counts, verify, bench."""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import cache as cache_mod
from . import counts as counts_mod
from . import engine, verify
from .algebra import FactoredRat, Poly
from .engine import EngineError, ModelSpec


def poly_str(p: Poly, latex: bool = False) -> str:
    """Low-to-high rendering like 8t^5-92t^6+...; exponents >= 10 get
    braces in LaTeX mode to match the usual typesetting."""
    if p.is_zero:
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            coeff = "" if mag == 1 else str(mag)
            if i == 1:
                body = f"{coeff}t"
            elif latex and i >= 10:
                body = f"{coeff}t^{{{i}}}"
            else:
                body = f"{coeff}t^{i}"
        sign = "-" if c < 0 else ("+" if parts else "")
        parts.append(sign + body)
    return "".join(parts)


def _den_factor_str(k: int, e: int, latex: bool = False) -> str:
    base = "(1-t)" if k == 1 else f"(1-{k}t)"
    if e == 1:
        return base
    return f"{base}^{{{e}}}" if (latex and e >= 10) else f"{base}^{e}"


def frat_str(f: FactoredRat) -> str:
    """Plain text like t(1-3t)/(1-2t)^2 or t^3/((1-t)(1-4t)^2)."""
    if f.is_zero:
        return "0"
    m, num = f.t_power, f.num
    if m == 0:
        num_s = poly_str(num)
        if sum(1 for x in num.coeffs if x) > 1:
            num_s = f"({num_s})"
    else:
        t_s = "t" if m == 1 else f"t^{m}"
        if num.degree == 0 and num.coeff(0) == 1:
            num_s = t_s
        else:
            num_s = f"{t_s}({poly_str(num)})"
    if not f.den:
        return num_s
    den_s = "".join(_den_factor_str(k, e) for k, e in f.den)
    if len(f.den) > 1:
        den_s = f"({den_s})"
    return f"{num_s}/{den_s}"


def frat_latex(f: FactoredRat) -> str:
    num_s = poly_str(f.num.shift(f.t_power), latex=True)
    den_s = "".join(_den_factor_str(k, e, latex=True) for k, e in f.den)
    if not f.den:
        return num_s
    return rf"\frac{{{num_s}}}{{{den_s}}}"


def solution_json(model: ModelSpec, sol: engine.GenusSolution) -> dict:
    f = sol.c_of_t
    return {
        "model": model.kind,
        "genus": sol.genus,
        "offset": f.t_power,
        "coefficients": [str(int(c)) for c in f.num.coeffs],
        "denom": [{"k": k, "exp": e} for k, e in f.den],
    }


def _model(name: str) -> ModelSpec:
    return engine.MODELS[name]


def _table(model: ModelSpec, g_max: int, cache_dir):
    table, hits = cache_mod.load_or_solve(model, g_max, cache_dir)
    return table, hits


def cmd_poly(args) -> int:
    model = _model(args.model)
    table, _ = _table(model, args.genus, args.cache_dir)
    sol = table.get(args.genus)
    if args.format == "plain":
        print(frat_str(sol.c_of_t))
    elif args.format == "json":
        print(json.dumps(solution_json(model, sol)))
    elif args.format == "latex":
        name = ("P" if model.kind == "hypermap" else r"\tilde P")
        subst = f"t(1-{model.subst_coeff}t)"
        cname = ("C" if model.kind == "hypermap" else r"\tilde C")
        if sol.genus >= 2:
            print(f"{name}_{args.genus}(t)={poly_str(sol.polynomial, latex=True)}")
            den = "".join(_den_factor_str(k, e, latex=True) for k, e in sol.c_of_t.den)
            print(rf"{cname}_{args.genus}({subst})=\frac{{{name}_{args.genus}(t)}}{{{den}}}")
        else:
            print(f"{cname}_{args.genus}({subst})={frat_latex(sol.c_of_t)}")
    else:
        print(f"unsupported format for poly: {args.format}", file=sys.stderr)
        return 2
    return 0


def cmd_counts(args) -> int:
    model = _model(args.model)
    table, _ = _table(model, args.genus, args.cache_dir)
    rev = counts_mod.revert(model.subst_coeff, max(args.max_n, 1))
    tab = counts_mod.counts_from_solution(model, table.get(args.genus), rev, args.max_n)
    if args.format == "plain":
        print(", ".join(str(c) for c in tab.counts))
    elif args.format == "csv":
        print("n,count")
        for n, c in enumerate(tab.counts):
            print(f"{n},{c}")
    elif args.format == "json":
        print(json.dumps({
            "model": model.kind,
            "genus": args.genus,
            "max_n": args.max_n,
            "counts": [str(c) for c in tab.counts],
        }))
    else:
        print(f"unsupported format for counts: {args.format}", file=sys.stderr)
        return 2
    return 0


def cmd_verify(args) -> int:
    tables = {}
    for model in (engine.HYPERMAP, engine.MAP):
        tables[model.kind], _ = _table(model, args.max_genus, args.cache_dir)
    report = verify.run_verification(
        max_genus=args.max_genus,
        max_n=args.max_n,
        oracle_hypermap_n=args.oracle_hypermap_n,
        oracle_map_n=args.oracle_map_n,
        jobs=args.jobs,
        tables=tables,
    )
    for line in report.lines():
        print(line)
    fails = [c for c in report.checks if c.hard and not c.ok]
    if fails:
        print(f"FAILED: {fails[0].name}", file=sys.stderr)
        return 1
    print(f"OK: {len(report.checks)} checks")
    return 0


def cmd_bench(args) -> int:
    rows = []
    for model in (engine.HYPERMAP, engine.MAP):
        cached = set()
        if args.cache_dir is not None:
            cached = {s.genus for s in cache_mod.load_solutions(args.cache_dir, model)
                      if s.genus <= args.max_genus}
        table = engine.GenusTable(model)
        for g in range(args.max_genus + 1):
            t0 = time.perf_counter()
            if g in cached:
                table.append(cache_mod.load_solutions(args.cache_dir, model)[g])
            elif g == 0:
                table.append(engine.base_case(model, 0))
            else:
                table.append(engine.solve_genus(model, table, g))
            dt = time.perf_counter() - t0
            sol = table.get(g)
            bits = max((abs(int(c)).bit_length() for c in sol.c_of_t.num.coeffs),
                       default=0)
            rows.append({
                "model": model.kind,
                "genus": g,
                "seconds": round(dt, 6),
                "max_coeff_bits": bits,
                "cache_hit": g in cached,
            })
        if args.cache_dir is not None:
            cache_mod.save_table(args.cache_dir, table)
    if args.format == "json":
        print(json.dumps(rows, indent=1))
    else:
        print(f"{'model':<9}{'genus':>6}{'seconds':>12}{'bits':>7}  cache")
        for r in rows:
            print(f"{r['model']:<9}{r['genus']:>6}{r['seconds']:>12.4f}"
                  f"{r['max_coeff_bits']:>7}  {'hit' if r['cache_hit'] else '-'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genusmaps",
        description="Exact genus-by-genus enumeration of rooted maps and hypermaps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, model=True):
        if model:
            p.add_argument("--model", choices=("hypermap", "map"), required=True)
        p.add_argument("--cache-dir", default=cache_mod.default_cache_dir(),
                       help="result cache directory (env GENUSMAPS_CACHE_DIR)")
        p.add_argument("--jobs", type=int, default=1,
                       help="parallelism cap for the oracle")

    p = sub.add_parser("poly", help="print a genus solution")
    common(p)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--format", choices=("plain", "json", "latex"), default="plain")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("counts", help="print a rooted count table")
    common(p)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("verify", help="run the full verification suite")
    common(p, model=False)
    p.add_argument("--max-genus", type=int, default=3)
    p.add_argument("--max-n", type=int, default=20)
    p.add_argument("--oracle-hypermap-n", type=int,
                   default=verify.DEFAULT_ORACLE_HYPERMAP_N)
    p.add_argument("--oracle-map-n", type=int, default=verify.DEFAULT_ORACLE_MAP_N)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="per-genus timing and coefficient sizes")
    common(p, model=False)
    p.add_argument("--max-genus", type=int, default=10)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EngineError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
