"""Three-way verification: structural invariants, count cross-validation,
and exact ODE residuals, collected into a deterministic report."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import counts as counts_mod
from . import engine, oracle
from .engine import GenusTable, ModelSpec


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    hard: bool = True       # soft checks are reported, never fail the run
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else ("FAIL" if self.hard else "WARN")
        tail = f": {self.detail}" if (self.detail and not self.ok) else ""
        return f"{status} {self.name}{tail}"


@dataclass
class Report:
    checks: list[Check]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks if c.hard)

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]


DEFAULT_ORACLE_HYPERMAP_N = 7
DEFAULT_ORACLE_MAP_N = 4


def run_verification(max_genus: int = 3, max_n: int = 20,
                     oracle_hypermap_n: int = DEFAULT_ORACLE_HYPERMAP_N,
                     oracle_map_n: int = DEFAULT_ORACLE_MAP_N,
                     residual_max_genus: Optional[int] = None,
                     jobs: int = 1,
                     tables: Optional[dict[str, GenusTable]] = None) -> Report:
    checks: list[Check] = []
    if residual_max_genus is None:
        residual_max_genus = min(max_genus, 4)
    for model in (engine.HYPERMAP, engine.MAP):
        table = (tables or {}).get(model.kind) or engine.solve_table(model, max_genus)
        checks += _structural_checks(model, table, max_genus)
        checks += _count_checks(model, table, max_genus, max_n)
        checks += _residual_checks(model, table, residual_max_genus)
    checks += _oracle_checks(oracle_hypermap_n, oracle_map_n, max_n, jobs)
    return Report(checks)


def _structural_checks(model: ModelSpec, table: GenusTable, max_genus: int) -> list[Check]:
    out = []
    out.append(Check(f"{model.kind} genus 0 closed form",
                     table.get(0).c_of_t == model.base0))
    if max_genus >= 1:
        out.append(Check(f"{model.kind} genus 1 recursion matches closed form",
                         table.get(1).c_of_t == model.base1))
    for g in range(2, max_genus + 1):
        sol = table.get(g)
        f = sol.c_of_t
        k1, k2 = model.factors
        e1, e2 = model.denom_exponents(g)
        lo, hi = model.poly_degree_bounds(g)
        poly = sol.polynomial
        out.append(Check(f"{model.kind} g={g} denominator exponents",
                         f.den == ((k1, e1), (k2, e2)),
                         detail=f"got {f.den}"))
        out.append(Check(f"{model.kind} g={g} support in [{lo},{hi}]",
                         poly.valuation() == lo and poly.degree <= hi))
        out.append(Check(f"{model.kind} g={g} integer coefficients", poly.is_integral()))
        if model.kind == "hypermap":
            ok = poly(Fraction(1, 2)) == 0 and poly.deriv()(Fraction(1, 2)) == 0
            out.append(Check(f"hypermap g={g} double root at t=1/2", ok))
        else:
            out.append(Check(f"map g={g} root at t=1/3", poly(Fraction(1, 3)) == 0))
        for name, ok in engine.footnote_checks(model, g, poly):
            out.append(Check(f"{model.kind} g={g} footnote {name}", ok, hard=False))
    for g in range(1, max_genus + 1):
        closed = engine.leading_coefficient(model, g)
        computed = table.get(g).polynomial.coeffs[
            table.get(g).polynomial.valuation()]
        out.append(Check(f"{model.kind} g={g} leading coefficient", computed == closed,
                         detail=f"computed {computed}, closed form {closed}"))
        if g >= 2:
            rec = engine.leading_coefficient_recurrence(
                model, g, engine.leading_coefficient(model, g - 1))
            out.append(Check(f"{model.kind} g={g} leading coefficient recurrence",
                             rec == closed))
    return out


def _count_checks(model: ModelSpec, table: GenusTable, max_genus: int,
                  max_n: int) -> list[Check]:
    out = []
    rev = counts_mod.revert(model.subst_coeff, max_n)
    rec = counts_mod.recursion_tables(model, max_genus, max_n)
    for g in range(max_genus + 1):
        a = counts_mod.counts_from_solution(model, table.get(g), rev, max_n)
        out.append(Check(f"{model.kind} g={g} counts: solution == recursion, n<={max_n}",
                         a.counts == rec[g].counts))
        first = a.first_nonzero()
        out.append(Check(f"{model.kind} g={g} first nonzero count index",
                         first is None or first == model.first_count_index(g)))
        tail = a.counts[model.first_count_index(g):]
        monotone = all(x <= y for x, y in zip(tail, tail[1:]))
        out.append(Check(f"{model.kind} g={g} counts nondecreasing", monotone, hard=False))
    return out


def _residual_checks(model: ModelSpec, table: GenusTable, residual_max_genus: int) -> list[Check]:
    out = []
    for g in range(1, residual_max_genus + 1):
        out.append(Check(f"{model.kind} g={g} ODE residual identically zero",
                         engine.ode_residual(model, table, g).is_zero))
        out.append(Check(f"{model.kind} g={g} integrating-factor identity",
                         engine.integrating_factor_identity(model, table, g)))
    return out


def _oracle_checks(oracle_hypermap_n: int, oracle_map_n: int, max_n: int,
                   jobs: int) -> list[Check]:
    out = []
    for kind, bound, counter in (
        ("hypermap", oracle_hypermap_n,
         lambda n: oracle.count_rooted_hypermaps(n, jobs=jobs)),
        ("map", oracle_map_n, oracle.count_rooted_maps),
    ):
        if bound < 1:
            continue
        model = engine.MODELS[kind]
        g_needed = bound // 2 + 1
        rec = counts_mod.recursion_tables(model, g_needed, bound)
        for n in range(1, bound + 1):
            res = counter(n)
            expected = tuple(rec[g].counts[n] if n < len(rec[g].counts) else 0
                             for g in range(len(res.counts)))
            out.append(Check(f"{kind} oracle n={n} matches analytic counts",
                             res.counts == expected,
                             detail=f"oracle {res.counts}, analytic {expected}"))
            higher_ok = all(rec[g].counts[n] == 0 for g in range(len(res.counts), g_needed + 1)
                            if n < len(rec[g].counts))
            out.append(Check(f"{kind} oracle n={n} no missing genera", higher_ok))
    return out
