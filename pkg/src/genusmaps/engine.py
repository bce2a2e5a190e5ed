"""Genus-by-genus recursion for rooted hypermap and map generating functions.

After the rationalizing substitution s = t(1 - a t), the genus-g generating
function is a rational function of t whose numerator is an integer
polynomial.  Each genus is obtained from the lower ones by applying a
third-order differential operator, adding a quadratic convolution term,
integrating exactly via partial fractions, and multiplying by a fixed
prefactor.  Both enumeration models (hypermaps with a = 2, maps with a = 3)
run through the same pipeline, differing only in the data below.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .algebra import (
    FactoredRat,
    Poly,
    ZERO_FRAT,
    lin,
    lin_power,
    partial_fractions,
    pf_integrate,
)


class EngineError(Exception):
    pass


class MissingGenusError(EngineError):
    pass


class NonIntegerCoefficientError(EngineError):
    pass


class DegreeBoundViolation(EngineError):
    pass


class IndivisibilityError(EngineError):
    pass


class ShapeWarning(UserWarning):
    """A numerically-expected (but unproven) non-vanishing failed."""


@dataclass(frozen=True)
class ModelSpec:
    """Everything that distinguishes the two enumeration models."""

    kind: str                       # "hypermap" | "map"
    subst_coeff: int                # a in s = t(1 - a t)
    factors: tuple[int, int]        # denominator factor slopes (k1, k2)
    op_coeffs: tuple[FactoredRat, FactoredRat, FactoredRat]  # d^3, d^2, d^1
    op_zeroth: Fraction             # zeroth-order operator term
    prefactor: FactoredRat          # multiplies the antiderivative
    integrand_prefix: FactoredRat   # multiplies the operator+convolution bracket
    ode_rhs_prefix: FactoredRat     # same bracket, prefix in the differential form
    ode_lhs_dot: FactoredRat        # coefficient of dC/dt on the ODE left side
    ode_lhs_plain: FactoredRat      # coefficient of C on the ODE left side
    int_factor_outer: FactoredRat   # w(t) with d/dt(w C) = mu * (ODE left side)
    int_factor_mu: FactoredRat
    base0: FactoredRat
    base1: FactoredRat
    convolution: Callable[["GenusTable", int], FactoredRat]

    def denom_exponents(self, g: int) -> tuple[int, int]:
        if self.kind == "hypermap":
            return (4 * g - 3, 5 * g - 3)
        return (3 * g - 2, 5 * g - 3)

    def poly_degree_bounds(self, g: int) -> tuple[int, int]:
        if self.kind == "hypermap":
            return (2 * g + 1, 9 * g - 7)
        return (2 * g, 8 * g - 6)

    def first_count_index(self, g: int) -> int:
        return 2 * g + 1 if self.kind == "hypermap" else 2 * g


@dataclass(frozen=True)
class GenusSolution:
    genus: int
    c_of_t: FactoredRat
    polynomial: Optional[Poly]  # integer numerator polynomial, g >= 1

    def int_poly_coeffs(self) -> list[int]:
        assert self.polynomial is not None
        return self.polynomial.int_coeffs()


def _hypermap_convolution(table: "GenusTable", g: int) -> FactoredRat:
    # (1-4t)^{-2} sum_{i=1}^{g-1} (4(1-4t) C_i + 6 t(1-2t) Cdot_i) Cdot_{g-i}
    four = FactoredRat.make(0, lin(4).scale(4))
    six_t = FactoredRat.make(1, lin(2).scale(6))
    total = ZERO_FRAT
    for i in range(1, g):
        ci = table.get(i).c_of_t
        term = (four * ci + six_t * table.c_dot(i)) * table.c_dot(g - i)
        total = total + term
    return total * FactoredRat.make(0, Poly.of(1), ((4, 2),))


def _map_convolution(table: "GenusTable", g: int) -> FactoredRat:
    # 3 sum_{i=1}^{g-1} (C_i + w Cdot_i)(C_{g-i} + w Cdot_{g-i}),  w = 2t(1-3t)/(1-6t)
    w = FactoredRat.make(1, lin(3).scale(2), ((6, 1),))
    total = ZERO_FRAT
    for i in range(1, g):
        left = table.get(i).c_of_t + w * table.c_dot(i)
        right = table.get(g - i).c_of_t + w * table.c_dot(g - i)
        total = total + left * right
    return total.scale(3)


def _hypermap_spec() -> ModelSpec:
    f4 = lambda e: ((4, e),)
    return ModelSpec(
        kind="hypermap",
        subst_coeff=2,
        factors=(1, 4),
        op_coeffs=(
            FactoredRat.make(2, lin(2) * lin(2), f4(3)),
            FactoredRat.make(1, lin(2) * Poly.of(5, -28, 56), f4(4)),
            FactoredRat.make(0, Poly.of(4, -44, 232, -576, 576), f4(5)),
        ),
        op_zeroth=Fraction(0),
        prefactor=FactoredRat.make(-1, lin(2) * lin(2), ((1, 3),)),
        integrand_prefix=FactoredRat.make(3, lin(1)),
        ode_rhs_prefix=FactoredRat.make(3, lin_power(2, 3)),
        ode_lhs_dot=FactoredRat.make(1, lin(1) * lin(1) * lin(2)),
        ode_lhs_plain=FactoredRat.make(0, lin(1) * Poly.of(1, -2, 4)),
        int_factor_outer=FactoredRat.make(1, lin_power(1, 3), ((2, 2),)),
        int_factor_mu=FactoredRat.make(0, lin(1), ((2, 3),)),
        base0=FactoredRat.make(1, lin(3), ((2, 2),)),
        base1=FactoredRat.make(3, Poly.of(1), ((1, 1), (4, 2))),
        convolution=_hypermap_convolution,
    )


def _map_spec() -> ModelSpec:
    f6 = lambda e: ((6, e),)
    return ModelSpec(
        kind="map",
        subst_coeff=3,
        factors=(2, 6),
        op_coeffs=(
            FactoredRat.make(3, lin_power(3, 3).scale(4), f6(3)),
            FactoredRat.make(2, (lin(3) * lin(3) * Poly.of(1, -9, 27)).scale(24), f6(4)),
            FactoredRat.make(1, (lin(3) * Poly.of(3, -56, 456, -1728, 2592)).scale(9), f6(5)),
        ),
        op_zeroth=Fraction(3),
        prefactor=FactoredRat.make(-1, lin(3), ((2, 1),)),
        integrand_prefix=FactoredRat.make(2, Poly.of(1)),
        ode_rhs_prefix=FactoredRat.make(2, lin(3) * lin(3)),
        ode_lhs_dot=FactoredRat.make(1, lin(2) * lin(3)),
        ode_lhs_plain=FactoredRat.make(0, Poly.of(1, -4, 6)),
        int_factor_outer=FactoredRat.make(1, lin(2), ((3, 1),)),
        int_factor_mu=FactoredRat.make(0, Poly.of(1), ((3, 2),)),
        base0=FactoredRat.make(0, lin(4), ((3, 2),)),
        base1=FactoredRat.make(2, Poly.of(1), ((2, 1), (6, 2))),
        convolution=_map_convolution,
    )


HYPERMAP = _hypermap_spec()
MAP = _map_spec()

MODELS = {"hypermap": HYPERMAP, "map": MAP}


def base_case(model: ModelSpec, g: int) -> GenusSolution:
    """The closed forms for genus 0 and 1."""
    if g == 0:
        return GenusSolution(0, model.base0, None)
    if g == 1:
        lo = model.first_count_index(1)
        return GenusSolution(1, model.base1, Poly.of(1).shift(lo))
    raise ValueError(f"no closed form for genus {g}")


def apply_operator(model: ModelSpec, f: FactoredRat) -> FactoredRat:
    """The third-order operator acting on a lower-genus solution."""
    c3, c2, c1 = model.op_coeffs
    out = c3 * f.nth_deriv(3) + c2 * f.nth_deriv(2) + c1 * f.deriv()
    if model.op_zeroth:
        out = out + f.scale(model.op_zeroth)
    return out


class GenusTable:
    """Solutions for genera 0..G, plus a cache of their t-derivatives."""

    def __init__(self, model: ModelSpec):
        self.model = model
        self.solutions: list[GenusSolution] = []
        self._dots: dict[int, FactoredRat] = {}

    def get(self, g: int) -> GenusSolution:
        if g >= len(self.solutions):
            raise MissingGenusError(f"genus {g} not computed yet")
        return self.solutions[g]

    def c_dot(self, g: int) -> FactoredRat:
        if g not in self._dots:
            self._dots[g] = self.get(g).c_of_t.deriv()
        return self._dots[g]

    def append(self, sol: GenusSolution) -> None:
        assert sol.genus == len(self.solutions)
        self.solutions.append(sol)

    def extend_to(self, g_max: int) -> None:
        if not self.solutions:
            self.append(base_case(self.model, 0))
        while len(self.solutions) <= g_max:
            g = len(self.solutions)
            sol = solve_genus(self.model, self, g)
            if g == 1 and sol.c_of_t != self.model.base1:
                raise EngineError("recursed genus-1 solution disagrees with closed form")
            self.append(sol)


def operator_bracket(model: ModelSpec, table: GenusTable, g: int) -> FactoredRat:
    """Operator applied to C_{g-1} plus the lower-genus convolution sum."""
    if g < 1:
        raise ValueError("bracket defined for g >= 1")
    return apply_operator(model, table.get(g - 1).c_of_t) + model.convolution(table, g)


def build_integrand(model: ModelSpec, table: GenusTable, g: int) -> FactoredRat:
    return model.integrand_prefix * operator_bracket(model, table, g)


def solve_genus(model: ModelSpec, table: GenusTable, g: int) -> GenusSolution:
    """One step of the recursion: integrate the genus-g integrand exactly."""
    if g < 1:
        raise ValueError("solve_genus requires g >= 1")
    integrand = build_integrand(model, table, g)
    antideriv = pf_integrate(partial_fractions(integrand))
    c = model.prefactor * antideriv
    return GenusSolution(g, c, _extract_poly(model, g, c))


def _extract_poly(model: ModelSpec, g: int, c: FactoredRat) -> Poly:
    k1, k2 = model.factors
    e1, e2 = model.denom_exponents(g)
    if c.den != ((k1, e1), (k2, e2)):
        raise DegreeBoundViolation(
            f"genus {g}: denominator {c.den}, expected (({k1},{e1}),({k2},{e2}))"
        )
    if c.t_power < 1:
        raise IndivisibilityError(f"genus {g}: numerator not divisible by t")
    poly = c.num.shift(c.t_power)
    if not poly.is_integral():
        raise NonIntegerCoefficientError(f"genus {g}: non-integer numerator")
    lo, hi = model.poly_degree_bounds(g)
    if g >= 2:
        if c.t_power != lo or poly.degree > hi:
            raise DegreeBoundViolation(
                f"genus {g}: support [{c.t_power},{poly.degree}] outside [{lo},{hi}]"
            )
        _check_roots(model, g, poly)
        _footnote_warnings(model, g, poly)
    return poly


def _check_roots(model: ModelSpec, g: int, poly: Poly) -> None:
    if model.kind == "hypermap":
        if poly(Fraction(1, 2)) != 0 or poly.deriv()(Fraction(1, 2)) != 0:
            raise DegreeBoundViolation(f"genus {g}: t=1/2 not a double root")
    else:
        if poly(Fraction(1, 3)) != 0:
            raise DegreeBoundViolation(f"genus {g}: t=1/3 not a root")


def footnote_checks(model: ModelSpec, g: int, poly: Poly) -> list[tuple[str, bool]]:
    """Non-vanishing checks observed numerically; reported, never fatal."""
    _, hi = model.poly_degree_bounds(g)
    if model.kind == "hypermap":
        pts = [(Fraction(1), "P(1)"), (Fraction(1, 4), "P(1/4)")]
        top = "p[9g-7]"
    else:
        pts = [(Fraction(1, 2), "P(1/2)"), (Fraction(1, 6), "P(1/6)")]
        top = "p[8g-6]"
    out = [(f"{top} != 0", poly.degree == hi)]
    out += [(f"{name} != 0", poly(x) != 0) for x, name in pts]
    return out


def _footnote_warnings(model: ModelSpec, g: int, poly: Poly) -> None:
    for name, ok in footnote_checks(model, g, poly):
        if not ok:
            warnings.warn(f"{model.kind} genus {g}: {name} failed", ShapeWarning)


def leading_coefficient(model: ModelSpec, g: int) -> int:
    """Closed form for the lowest-degree numerator coefficient, g >= 1."""
    if g < 1:
        raise ValueError("g >= 1 required")
    if model.kind == "hypermap":
        num, den = math.factorial(2 * g), g + 1
    else:
        dfac = 1
        for m in range(1, 4 * g, 2):
            dfac *= m
        num, den = dfac, 2 * g + 1
    q, r = divmod(num, den)
    assert r == 0
    return q


def leading_coefficient_recurrence(model: ModelSpec, g: int, prev: int) -> Fraction:
    """The proof's recurrence for the same coefficient, from the g-1 value."""
    if model.kind == "hypermap":
        return Fraction((2 * g - 1) * (2 * g) ** 2, 2 * g + 2) * prev
    return Fraction((2 * g - 1) * (4 * g - 1) * (4 * g - 3), 2 * g + 1) * prev


def ode_residual(model: ModelSpec, table: GenusTable, g: int) -> FactoredRat:
    """Left minus right side of the substituted differential recursion.

    Identically zero for a correct genus-g solution (g >= 1).
    """
    lhs = model.ode_lhs_dot * table.c_dot(g) + model.ode_lhs_plain * table.get(g).c_of_t
    rhs = model.ode_rhs_prefix * operator_bracket(model, table, g)
    return lhs - rhs


def integrating_factor_identity(model: ModelSpec, table: GenusTable, g: int) -> bool:
    """mu * (ODE left side) must be an exact derivative of w * C_g."""
    lhs = model.ode_lhs_dot * table.c_dot(g) + model.ode_lhs_plain * table.get(g).c_of_t
    return model.int_factor_mu * lhs == (model.int_factor_outer * table.get(g).c_of_t).deriv()


def solve_table(model: ModelSpec, g_max: int) -> GenusTable:
    table = GenusTable(model)
    table.extend_to(g_max)
    return table
