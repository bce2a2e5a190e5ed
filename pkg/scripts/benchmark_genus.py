#!/usr/bin/env python3
"""Time the genus recursion and record coefficient growth.

Usage: python scripts/benchmark_genus.py [MAX_GENUS] [--json]
"""

import json
import sys
import time

from genusmaps.engine import HYPERMAP, MAP, GenusTable, base_case, solve_genus


def bench(max_genus: int) -> list[dict]:
    rows = []
    for model in (HYPERMAP, MAP):
        table = GenusTable(model)
        table.append(base_case(model, 0))
        for g in range(1, max_genus + 1):
            t0 = time.perf_counter()
            table.append(solve_genus(model, table, g))
            dt = time.perf_counter() - t0
            bits = max(abs(int(c)).bit_length()
                       for c in table.get(g).c_of_t.num.coeffs)
            rows.append({"model": model.kind, "genus": g,
                         "seconds": round(dt, 4), "max_coeff_bits": bits})
    return rows


def main() -> None:
    args = [a for a in sys.argv[1:] if a != "--json"]
    max_genus = int(args[0]) if args else 15
    rows = bench(max_genus)
    if "--json" in sys.argv:
        print(json.dumps(rows, indent=1))
    else:
        for r in rows:
            print(f"{r['model']:<9} g={r['genus']:>3}  {r['seconds']:>9.3f}s"
                  f"  {r['max_coeff_bits']:>5} bits")


if __name__ == "__main__":
    main()
