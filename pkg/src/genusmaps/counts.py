"""Count tables c_{g,n}: series reversion of the rational solutions, and an
independent coefficient recursion that never touches rational functions.

The two computations share nothing but the final integers, which is the
point: entrywise agreement (plus the brute-force oracle at small sizes)
validates the whole engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import series_product
from .engine import GenusSolution, ModelSpec


class CountError(Exception):
    pass


class NonIntegerCountError(CountError):
    pass


class NegativeCountError(CountError):
    pass


@dataclass(frozen=True)
class CountTable:
    kind: str
    genus: int
    counts: tuple[int, ...]  # counts[n] = number of rooted objects of size n

    def first_nonzero(self) -> int | None:
        for n, c in enumerate(self.counts):
            if c:
                return n
        return None


@dataclass(frozen=True)
class ReversionSeries:
    """t as a power series in s, inverting s = t(1 - a t); coeffs[n] of s^n."""

    subst_coeff: int
    coeffs: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1


def revert(a: int, order: int) -> ReversionSeries:
    """Compositional inverse of s = t - a t^2, exactly, to the given order.

    Fixed-point iteration t <- s + a t^2 gains at least one correct order
    per step and stays in integer arithmetic throughout.
    """
    if a < 1 or order < 1:
        raise ValueError("need a >= 1 and order >= 1")
    n = order + 1
    t = [0, 1] + [0] * (n - 2)
    for _ in range(order):
        sq = [0] * n
        for i in range(1, n):
            if t[i]:
                for j in range(1, n - i):
                    sq[i + j] += t[i] * t[j]
        nxt = [0, 1] + [a * c for c in sq[2:]]
        if nxt == t:
            break
        t = nxt
    return ReversionSeries(a, tuple(t))


def compose_series(coeffs: list[Fraction], inner: list[Fraction], order: int) -> list[Fraction]:
    """Evaluate sum coeffs[k] * inner^k as a truncated series (inner(0) = 0)."""
    assert not inner or inner[0] == 0
    out = [Fraction(0)] * (order + 1)
    for c in reversed(coeffs):
        out = series_product(out, inner, order)
        out[0] += c
    return out


def counts_from_solution(model: ModelSpec, sol: GenusSolution,
                         rev: ReversionSeries, max_n: int) -> CountTable:
    """Coefficients of C_g(s): expand in t, then compose with t(s)."""
    if rev.order < max_n:
        raise ValueError("reversion series too short")
    if rev.subst_coeff != model.subst_coeff:
        raise ValueError("reversion series for the wrong substitution")
    t_series = sol.c_of_t.series(max_n)
    inner = [Fraction(c) for c in rev.coeffs[: max_n + 1]]
    series = compose_series(t_series, inner, max_n)
    counts = []
    first = model.first_count_index(sol.genus)
    for n, c in enumerate(series):
        if c.denominator != 1:
            raise NonIntegerCountError(f"c[{sol.genus},{n}] = {c}")
        v = int(c)
        if v < 0:
            raise NegativeCountError(f"c[{sol.genus},{n}] = {v}")
        if v and n < first:
            raise CountError(f"nonzero count below n={first}: c[{sol.genus},{n}]={v}")
        counts.append(v)
    return CountTable(model.kind, sol.genus, tuple(counts))


def counts_by_recursion(model: ModelSpec, g: int, max_n: int,
                        lower: dict[int, CountTable]) -> CountTable:
    """Counts straight from the coefficient recursion, no rational functions.

    Hypermaps use the coefficient form of the differential identity for the
    generating functions (including its source term fixing c_{0,1} = 1);
    maps use the printed quadratic recursion with its delta source at n = 0.
    """
    for i in range(g):
        if i not in lower or len(lower[i].counts) <= max_n:
            raise ValueError(f"need lower-genus counts to order {max_n} for genus {i}")
    c = {i: lower[i].counts for i in range(g)}
    cur = [0] * (max_n + 1)
    c[g] = cur

    def at(i: int, n: int) -> int:
        return c[i][n] if 0 <= n <= max_n else 0

    if model.kind == "hypermap":
        for n in range(1, max_n + 1):
            # (n+1) c_{g,n} = 3(2n-1) c_{g,n-1} + 3(n-2) c_{g,n-2}
            #   + (n-1)^2 (n-2) c_{g-1,n-2}
            #   + sum_{i,j} (4+6j)(n-2-j) c_{i,j} c_{g-i,n-2-j} + 2 delta_{g,0} delta_{n,1}
            total = 3 * (2 * n - 1) * at(g, n - 1) + 3 * (n - 2) * at(g, n - 2)
            if g >= 1:
                total += (n - 1) ** 2 * (n - 2) * at(g - 1, n - 2)
            for i in range(g + 1):
                for j in range(1, n - 2):
                    total += (4 + 6 * j) * (n - 2 - j) * at(i, j) * at(g - i, n - 2 - j)
            if g == 0 and n == 1:
                total += 2
            q, r = divmod(total, n + 1)
            if r:
                raise NonIntegerCountError(f"hypermap g={g} n={n}: {total}/{n + 1}")
            cur[n] = q
    else:
        for n in range(0, max_n + 1):
            # (n+1) c_{g,n} = 4(2n-1) c_{g,n-1} + (2n-1)(2n-3)(n-1) c_{g-1,n-2}
            #   + 3 sum_{i,j} (2j+1)(2(n-2-j)+1) c_{i,j} c_{g-i,n-2-j} + delta_{g,0} delta_{n,0}
            total = 4 * (2 * n - 1) * at(g, n - 1)
            if g >= 1:
                total += (2 * n - 1) * (2 * n - 3) * (n - 1) * at(g - 1, n - 2)
            for i in range(g + 1):
                for j in range(0, n - 1):
                    total += 3 * (2 * j + 1) * (2 * (n - 2 - j) + 1) * at(i, j) * at(g - i, n - 2 - j)
            if g == 0 and n == 0:
                total += 1
            q, r = divmod(total, n + 1)
            if r:
                raise NonIntegerCountError(f"map g={g} n={n}: {total}/{n + 1}")
            if q < 0:
                raise NegativeCountError(f"map g={g} n={n}: {q}")
            cur[n] = q
    return CountTable(model.kind, g, tuple(cur))


def recursion_tables(model: ModelSpec, g_max: int, max_n: int) -> dict[int, CountTable]:
    tables: dict[int, CountTable] = {}
    for g in range(g_max + 1):
        tables[g] = counts_by_recursion(model, g, max_n, tables)
    return tables
