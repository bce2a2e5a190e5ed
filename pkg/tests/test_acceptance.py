"""Acceptance suite: one test per criterion, each printing a pass line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Criterion 5's map n=5 oracle case is opt-in via
GENUSMAPS_ORACLE_MAP5=1 (it enumerates 10! permutations).
"""

import os
import time
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from golden import MP2, MP3, P2, P3, as_coeff_list
from genusmaps import counts as counts_mod
from genusmaps import oracle
from genusmaps.algebra import FactoredRat, PFDecomp, Poly, partial_fractions, pf_integrate
from genusmaps.engine import (
    HYPERMAP,
    MAP,
    footnote_checks,
    integrating_factor_identity,
    leading_coefficient,
    leading_coefficient_recurrence,
    ode_residual,
    solve_table,
)
from test_properties import factored_rats

MODELS = (HYPERMAP, MAP)


@pytest.fixture(scope="module")
def tables():
    t0 = time.perf_counter()
    out = {m.kind: solve_table(m, 10) for m in MODELS}
    out["solve_seconds_g10"] = time.perf_counter() - t0
    return out


def _report(num, text):
    print(f"ACCEPTANCE {num}: PASS - {text}")


def test_criterion_1_golden_polynomials():
    t0 = time.perf_counter()
    h = solve_table(HYPERMAP, 3)
    m = solve_table(MAP, 3)
    assert h.get(2).int_poly_coeffs() == as_coeff_list(P2)
    assert h.get(3).int_poly_coeffs() == as_coeff_list(P3)
    assert m.get(2).int_poly_coeffs() == as_coeff_list(MP2)
    assert m.get(3).int_poly_coeffs() == as_coeff_list(MP3)
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0
    _report(1, f"golden genus-2/3 polynomials, both models ({elapsed:.2f}s)")


def test_criterion_2_closed_forms(tables):
    for model in MODELS:
        table = tables[model.kind]
        assert table.get(0).c_of_t == model.base0
        assert table.get(1).c_of_t == model.base1  # recursed, then compared
    _report(2, "genus 0/1 closed forms, recursed g=1 included")


def test_criterion_3_leading_coefficients(tables):
    assert tables["solve_seconds_g10"] < 120.0
    for model in MODELS:
        table = tables[model.kind]
        for g in range(1, 11):
            closed = leading_coefficient(model, g)
            poly = table.get(g).polynomial
            assert poly.coeffs[poly.valuation()] == closed
            if g >= 2:
                assert leading_coefficient_recurrence(
                    model, g, leading_coefficient(model, g - 1)) == closed
    _report(3, "leading coefficients and recurrences, g=1..10 "
               f"(table solve {tables['solve_seconds_g10']:.1f}s)")


def test_criterion_4_structural_invariants(tables):
    footnote_failures = []
    for model in MODELS:
        table = tables[model.kind]
        for g in range(2, 11):
            sol = table.get(g)
            k1, k2 = model.factors
            e1, e2 = model.denom_exponents(g)
            assert sol.c_of_t.den == ((k1, e1), (k2, e2))
            lo, hi = model.poly_degree_bounds(g)
            poly = sol.polynomial
            assert poly.valuation() == lo and poly.degree <= hi
            assert poly.is_integral()
            if model.kind == "hypermap":
                assert poly(Fraction(1, 2)) == 0
                assert poly.deriv()(Fraction(1, 2)) == 0
            else:
                assert poly(Fraction(1, 3)) == 0
            footnote_failures += [
                f"{model.kind} g={g}: {name}"
                for name, ok in footnote_checks(model, g, poly) if not ok
            ]
    # reported, not gating
    for line in footnote_failures:
        print(f"  footnote check failed: {line}")
    _report(4, "structural invariants g=2..10, "
               f"{len(footnote_failures)} footnote warnings")


def test_criterion_5_three_way_counts(tables):
    for model in MODELS:
        table = tables[model.kind]
        rev = counts_mod.revert(model.subst_coeff, 40)
        rec = counts_mod.recursion_tables(model, 5, 40)
        for g in range(6):
            sol_counts = counts_mod.counts_from_solution(model, table.get(g), rev, 40)
            assert sol_counts.counts == rec[g].counts

    hrec = counts_mod.recursion_tables(HYPERMAP, 4, 7)
    for n in range(1, 8):
        res = oracle.count_rooted_hypermaps(n)
        for g in range(5):
            expected = hrec[g].counts[n]
            got = res.counts[g] if g < len(res.counts) else 0
            assert got == expected, f"hypermap oracle n={n} g={g}"

    map_n = 5 if os.environ.get("GENUSMAPS_ORACLE_MAP5") else 4
    mrec = counts_mod.recursion_tables(MAP, map_n // 2 + 1, map_n)
    for n in range(1, map_n + 1):
        res = oracle.count_rooted_maps(n)
        for g in range(map_n // 2 + 1):
            got = res.counts[g] if g < len(res.counts) else 0
            assert got == mrec[g].counts[n], f"map oracle n={n} g={g}"
    _report(5, f"three-way count agreement (hypermaps n<=7, maps n<={map_n})")


def test_criterion_6_ode_residuals(tables):
    for model in MODELS:
        table = tables[model.kind]
        for g in range(1, 5):
            assert ode_residual(model, table, g).is_zero
            assert integrating_factor_identity(model, table, g)
    _report(6, "ODE residuals identically zero, g<=4, both models")


ACCEPT = settings(max_examples=1000, deadline=None)


@ACCEPT
@given(factored_rats())
def _prop_pf_roundtrip(f):
    assert partial_fractions(f).recombine() == f


@ACCEPT
@given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 12))
def _prop_derivative_formula(alpha, beta, gamma):
    f = FactoredRat.make(alpha, Poly.of(1), ((1, beta), (4, gamma)))
    expected = FactoredRat.make(
        alpha - 1,
        Poly.of(alpha, -5 * alpha + beta + 4 * gamma, 4 * (alpha - beta - gamma)),
        ((1, beta + 1), (4, gamma + 1)),
    )
    assert f.deriv() == expected


@ACCEPT
@given(factored_rats())
def _prop_integrate_differentiate(f):
    d = partial_fractions(f)
    d = PFDecomp(d.poly_part,
                 tuple((k, e, c) for k, e, c in d.pole_terms if e != 1))
    assert pf_integrate(d).deriv() == d.recombine()


@ACCEPT
@given(factored_rats(), factored_rats(), st.integers(0, 12))
def _prop_series_product(f, g, order):
    from genusmaps.algebra import series_product
    assert (f * g).series(order) == series_product(
        f.series(order), g.series(order), order)


def test_criterion_7_property_suites():
    _prop_pf_roundtrip()
    _prop_derivative_formula()
    _prop_integrate_differentiate()
    _prop_series_product()
    _report(7, "4 property suites x 1000 randomized cases")


def test_criterion_8_benchmark_nongating(tables):
    rows = []
    for model in MODELS:
        table = tables[model.kind]
        for g in range(11, 16):
            t0 = time.perf_counter()
            table.extend_to(g)
            dt = time.perf_counter() - t0
            bits = max(abs(int(c)).bit_length()
                       for c in table.get(g).c_of_t.num.coeffs)
            rows.append((model.kind, g, dt, bits))
    for kind, g, dt, bits in rows:
        print(f"  bench {kind} g={g}: {dt:.2f}s, max coeff {bits} bits")
    _report(8, "P_g computed through g=15, timings recorded")
