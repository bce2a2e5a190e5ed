import math

import pytest

from genusmaps.counts import (
    CountTable,
    counts_by_recursion,
    counts_from_solution,
    recursion_tables,
    revert,
)
from genusmaps.engine import HYPERMAP, MAP, solve_table


def test_reversion_small_orders():
    assert revert(2, 4).coeffs == (0, 1, 2, 8, 40)
    assert revert(3, 3).coeffs == (0, 1, 3, 18)
    for a in (1, 2, 3, 5):
        assert revert(a, 6).coeffs[1] == 1


def test_reversion_round_trip():
    for a in (2, 3):
        n = 12
        t = revert(a, n).coeffs
        # substitute t(s) into t - a t^2: must give back s exactly
        comp = [0] * (n + 1)
        sq = [0] * (n + 1)
        for i in range(1, n + 1):
            for j in range(1, n + 1 - i):
                sq[i + j] += t[i] * t[j]
        for i in range(n + 1):
            comp[i] = t[i] - a * sq[i]
        assert comp == [0, 1] + [0] * (n - 1)


def test_hypermap_genus0_counts():
    table = solve_table(HYPERMAP, 0)
    tab = counts_from_solution(HYPERMAP, table.get(0), revert(2, 4), 4)
    assert tab.counts == (0, 1, 3, 12, 56)


def test_map_genus0_and_1_counts():
    table = solve_table(MAP, 1)
    rev = revert(3, 3)
    assert counts_from_solution(MAP, table.get(0), rev, 3).counts == (1, 2, 9, 54)
    assert counts_from_solution(MAP, table.get(1), rev, 3).counts == (0, 0, 1, 20)


def test_map_genus0_closed_form():
    # third, classical check: 2 * 3^n (2n)! / (n! (n+2)!)
    table = solve_table(MAP, 0)
    tab = counts_from_solution(MAP, table.get(0), revert(3, 12), 12)
    for n, c in enumerate(tab.counts):
        assert c == 2 * 3**n * math.factorial(2 * n) // (
            math.factorial(n) * math.factorial(n + 2))


def test_recursion_base_values():
    h = counts_by_recursion(HYPERMAP, 0, 4, {})
    assert h.counts == (0, 1, 3, 12, 56)
    m = counts_by_recursion(MAP, 0, 3, {})
    assert m.counts == (1, 2, 9, 54)
    # the printed map recursion at g=0, n=2: 3*c = 4*3*c_{0,1} + 3*c_{0,0}^2
    assert m.counts[2] == (4 * 3 * m.counts[1] + 3 * m.counts[0] ** 2) // 3 == 9


def test_series_support():
    tables = recursion_tables(HYPERMAP, 2, 12)
    assert all(c == 0 for c in tables[1].counts[:3])
    assert tables[1].counts[3] == 1
    assert all(c == 0 for c in tables[2].counts[:5])
    assert tables[2].counts[5] == 8


def test_cross_validation_g3_n25():
    for model in (HYPERMAP, MAP):
        table = solve_table(model, 3)
        rev = revert(model.subst_coeff, 25)
        rec = recursion_tables(model, 3, 25)
        for g in range(4):
            a = counts_from_solution(model, table.get(g), rev, 25)
            assert a.counts == rec[g].counts


def test_recursion_requires_lower_tables():
    with pytest.raises(ValueError):
        counts_by_recursion(HYPERMAP, 2, 10, {})


def test_first_nonzero_index():
    t = CountTable("hypermap", 1, (0, 0, 0, 1, 15))
    assert t.first_nonzero() == 3
