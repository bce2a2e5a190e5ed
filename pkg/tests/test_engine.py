from fractions import Fraction

import pytest

from golden import MP2, MP3, P2, P3, as_coeff_list
from genusmaps.algebra import FactoredRat, Poly, lin
from genusmaps.engine import (
    HYPERMAP,
    MAP,
    DegreeBoundViolation,
    GenusTable,
    MissingGenusError,
    apply_operator,
    base_case,
    build_integrand,
    footnote_checks,
    integrating_factor_identity,
    leading_coefficient,
    leading_coefficient_recurrence,
    ode_residual,
    solve_table,
)


def test_base_cases_match_closed_forms():
    assert base_case(HYPERMAP, 0).c_of_t == FactoredRat.make(1, lin(3), ((2, 2),))
    assert base_case(HYPERMAP, 1).c_of_t == FactoredRat.make(
        3, Poly.of(1), ((1, 1), (4, 2)))
    assert base_case(MAP, 0).c_of_t == FactoredRat.make(0, lin(4), ((3, 2),))
    assert base_case(MAP, 1).c_of_t == FactoredRat.make(
        2, Poly.of(1), ((2, 1), (6, 2)))


def test_recursed_genus_one_agrees_with_closed_form():
    for model in (HYPERMAP, MAP):
        table = solve_table(model, 1)
        assert table.get(1).c_of_t == model.base1


def test_operator_linearity_and_zeroth_term():
    from genusmaps.algebra import ZERO_FRAT
    assert apply_operator(HYPERMAP, ZERO_FRAT) == ZERO_FRAT
    # map operator on a constant: only the zeroth-order term survives
    c = FactoredRat.const(5)
    assert apply_operator(MAP, c) == FactoredRat.const(15)
    assert apply_operator(HYPERMAP, c) == ZERO_FRAT


def test_hypermap_operator_on_genus_one():
    table = solve_table(HYPERMAP, 1)
    out = apply_operator(HYPERMAP, table.get(1).c_of_t)
    assert out.den == ((1, 4), (4, 8))
    # lowest numerator term 48 t^2: (2g-1)(2g)^2 p_{g-1,2g-1} at g=2
    assert out.t_power == 2
    assert out.num.coeff(0) == 48


def test_integrand_shape_and_lowest_coefficient():
    htable = solve_table(HYPERMAP, 1)
    i1 = build_integrand(HYPERMAP, htable, 1)  # empty convolution path
    assert i1 == HYPERMAP.integrand_prefix * apply_operator(
        HYPERMAP, htable.get(0).c_of_t)
    i2 = build_integrand(HYPERMAP, htable, 2)
    assert i2.t_power == 5 and i2.num.coeff(0) == 48
    assert i2.den == ((1, 4 * 2 - 5), (4, 5 * 2 - 2))

    mtable = solve_table(MAP, 1)
    j2 = build_integrand(MAP, mtable, 2)
    assert j2.t_power == 4 and j2.num.coeff(0) == 105
    assert j2.den == ((2, 3 * 2 - 2), (6, 5 * 2 - 2))


def test_build_integrand_missing_genus():
    table = GenusTable(HYPERMAP)
    with pytest.raises(MissingGenusError):
        build_integrand(HYPERMAP, table, 1)


def test_golden_polynomials():
    h = solve_table(HYPERMAP, 3)
    assert h.get(2).int_poly_coeffs() == as_coeff_list(P2)
    assert h.get(3).int_poly_coeffs() == as_coeff_list(P3)
    m = solve_table(MAP, 3)
    assert m.get(2).int_poly_coeffs() == as_coeff_list(MP2)
    assert m.get(3).int_poly_coeffs() == as_coeff_list(MP3)


def test_leading_coefficients():
    assert leading_coefficient(HYPERMAP, 2) == 8
    assert leading_coefficient(MAP, 2) == 21
    assert leading_coefficient(MAP, 3) == 1485
    for model in (HYPERMAP, MAP):
        for g in range(2, 8):
            prev = leading_coefficient(model, g - 1)
            assert leading_coefficient_recurrence(model, g, prev) == \
                leading_coefficient(model, g)


def test_structural_invariants_to_genus_6():
    for model in (HYPERMAP, MAP):
        table = solve_table(model, 6)
        for g in range(2, 7):
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
            assert all(ok for _, ok in footnote_checks(model, g, poly))


def test_ode_residuals_and_integrating_factor():
    for model in (HYPERMAP, MAP):
        table = solve_table(model, 4)
        for g in range(1, 5):
            assert ode_residual(model, table, g).is_zero
            assert integrating_factor_identity(model, table, g)


def test_wrong_solution_fails_residual():
    table = solve_table(HYPERMAP, 2)
    from genusmaps.engine import GenusSolution
    bad = GenusSolution(2, table.get(2).c_of_t.scale(2), table.get(2).polynomial)
    tampered = solve_table(HYPERMAP, 1)
    tampered.append(bad)
    assert not ode_residual(HYPERMAP, tampered, 2).is_zero
