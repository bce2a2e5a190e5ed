"""Exact univariate rational-function algebra over Q.

Everything here is built from two representations:

  * Poly -- dense polynomial in t with Fraction coefficients.
  * FactoredRat -- t^m * N(t) / prod (1 - k_i t)^{e_i}, kept in a reduced
    canonical form so that equality is structural.

The only denominators that ever appear are powers of t and of linear
factors (1 - k t) with small positive integer k, which is what makes
exact partial fractions and term-by-term integration straightforward.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class AlgebraError(Exception):
    """Base class for errors raised by the exact algebra layer."""


class SimplePoleError(AlgebraError):
    """A partial-fraction term with exponent 1 had a nonzero coefficient.

    Integrating such a term would produce a logarithm, which can never
    happen for the rational functions this engine produces; seeing one
    means the caller fed us a wrong integrand.
    """


class NegativeTPowerError(AlgebraError):
    """Operation requires a function with no pole at t = 0."""


class TooManyPolesError(AlgebraError):
    """partial_fractions only supports at most two distinct linear factors."""


def _frac(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial; coeffs[i] is the coefficient of t^i.

    The coefficient tuple never has a trailing zero (the zero polynomial
    is the empty tuple), so equality of tuples is equality of polynomials.
    """

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(*coeffs: Scalar) -> "Poly":
        return Poly.from_list(coeffs)

    @staticmethod
    def from_list(coeffs: Iterable[Scalar]) -> "Poly":
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(tuple(cs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient (0 for the zero poly)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return 0

    def shift(self, m: int) -> "Poly":
        """Multiply by t^m (m may be negative if the valuation allows)."""
        if self.is_zero:
            return self
        if m >= 0:
            return Poly((Fraction(0),) * m + self.coeffs)
        if any(c != 0 for c in self.coeffs[: -m]):
            raise ValueError("shift below valuation")
        return Poly(self.coeffs[-m:])

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly.from_list(out)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return ZERO_POLY
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly.from_list(out)

    def scale(self, c: Scalar) -> "Poly":
        c = _frac(c)
        if c == 0:
            return ZERO_POLY
        return Poly(tuple(c * x for x in self.coeffs))

    def deriv(self) -> "Poly":
        return Poly.from_list(i * c for i, c in enumerate(self.coeffs) if i)

    def integrate(self) -> "Poly":
        """Antiderivative with zero constant term."""
        return Poly.from_list(
            [Fraction(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs)]
        )

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def div_linear(self, k: int) -> "Poly | None":
        """Exact quotient by (1 - k t), or None if the division is inexact."""
        if self.is_zero:
            return self
        # (1 - k t) * q = p  <=>  q_i = p_i + k q_{i-1}, with q_deg == 0 left over
        q: list[Fraction] = []
        carry = Fraction(0)
        for c in self.coeffs:
            carry = c + k * carry
            q.append(carry)
        if q.pop() != 0:
            return None
        return Poly.from_list(q)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("polynomial has non-integer coefficients")
        return [int(c) for c in self.coeffs]


ZERO_POLY = Poly(())
ONE_POLY = Poly((Fraction(1),))


def lin(k: int) -> Poly:
    """The linear factor (1 - k t)."""
    return Poly.of(1, -k)


def lin_power(k: int, e: int) -> Poly:
    p = ONE_POLY
    for _ in range(e):
        p = p * lin(k)
    return p


Denominator = tuple[tuple[int, int], ...]  # ((k, exponent), ...) sorted by k


@dataclass(frozen=True)
class FactoredRat:
    """t^t_power * num / prod (1 - k t)^e, in reduced canonical form.

    Reduced means: num has a nonzero constant term (the t-valuation is
    pulled into t_power), num is not divisible by any denominator factor,
    denominator factors are distinct with positive exponents, sorted by k.
    The zero function is FactoredRat(0, 0, ()).
    """

    t_power: int
    num: Poly
    den: Denominator

    @staticmethod
    def make(t_power: int, num: Poly, den: Iterable[tuple[int, int]] = ()) -> "FactoredRat":
        if num.is_zero:
            return ZERO_FRAT
        exps: dict[int, int] = {}
        for k, e in den:
            if k < 1:
                raise ValueError(f"linear factor with k={k}")
            if e:
                exps[k] = exps.get(k, 0) + e
        v = num.valuation()
        t_power += v
        num = num.shift(-v)
        for k in list(exps):
            while exps[k] > 0:
                q = num.div_linear(k)
                if q is None:
                    break
                num = q
                exps[k] -= 1
            if exps[k] == 0:
                del exps[k]
        return FactoredRat(t_power, num, tuple(sorted(exps.items())))

    @staticmethod
    def from_poly(p: Poly) -> "FactoredRat":
        return FactoredRat.make(0, p)

    @staticmethod
    def const(c: Scalar) -> "FactoredRat":
        return FactoredRat.make(0, Poly.of(c))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def _den_poly(self) -> Poly:
        p = ONE_POLY
        for k, e in self.den:
            p = p * lin_power(k, e)
        return p

    def __add__(self, other: "FactoredRat") -> "FactoredRat":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        exps: dict[int, int] = dict(self.den)
        for k, e in other.den:
            exps[k] = max(exps.get(k, 0), e)
        m = min(self.t_power, other.t_power)

        def lifted(f: "FactoredRat") -> Poly:
            p = f.num.shift(f.t_power - m)
            for k, e in exps.items():
                p = p * lin_power(k, e - dict(f.den).get(k, 0))
            return p

        return FactoredRat.make(m, lifted(self) + lifted(other), exps.items())

    def __neg__(self) -> "FactoredRat":
        if self.is_zero:
            return self
        return FactoredRat(self.t_power, -self.num, self.den)

    def __sub__(self, other: "FactoredRat") -> "FactoredRat":
        return self + (-other)

    def __mul__(self, other: "FactoredRat") -> "FactoredRat":
        if self.is_zero or other.is_zero:
            return ZERO_FRAT
        return FactoredRat.make(
            self.t_power + other.t_power,
            self.num * other.num,
            list(self.den) + list(other.den),
        )

    def scale(self, c: Scalar) -> "FactoredRat":
        c = _frac(c)
        if c == 0 or self.is_zero:
            return ZERO_FRAT
        return FactoredRat(self.t_power, self.num.scale(c), self.den)

    def deriv(self) -> "FactoredRat":
        """Exact d/dt.

        For f = t^m N / prod (1-k_i t)^{e_i} the derivative is
        t^{m-1} [ (m N + t N') prod (1-k_i t) + t N sum_i e_i k_i prod_{j!=i} (1-k_j t) ]
        over prod (1-k_i t)^{e_i + 1}.
        """
        if self.is_zero:
            return self
        m, n = self.t_power, self.num
        head = n.scale(m) + n.deriv().shift(1)
        for k, _ in self.den:
            head = head * lin(k)
        for i, (k, e) in enumerate(self.den):
            term = n.shift(1).scale(e * k)
            for j, (kj, _) in enumerate(self.den):
                if j != i:
                    term = term * lin(kj)
            head = head + term
        return FactoredRat.make(m - 1, head, [(k, e + 1) for k, e in self.den])

    def nth_deriv(self, n: int) -> "FactoredRat":
        f = self
        for _ in range(n):
            f = f.deriv()
        return f

    def eval(self, x: Scalar) -> Fraction:
        """Evaluate at a rational point away from the poles."""
        x = _frac(x)
        if x == 0 and self.t_power < 0:
            raise ZeroDivisionError("pole at t=0")
        val = self.num(x) * x ** self.t_power if x != 0 else (
            self.num(x) if self.t_power == 0 else Fraction(0)
        )
        for k, e in self.den:
            val /= (1 - k * x) ** e
        return val

    def series(self, order: int) -> list[Fraction]:
        """Taylor coefficients of t^0 .. t^order at t = 0."""
        if self.t_power < 0:
            raise NegativeTPowerError(f"t_power={self.t_power} < 0")
        n = order + 1
        out = [Fraction(0)] * n
        if self.is_zero or self.t_power > order:
            return out
        length = n - self.t_power
        cur = [self.num.coeff(i) for i in range(length)]
        for k, e in self.den:
            # 1/(1-kt)^e = sum C(i+e-1, e-1) k^i t^i
            geo = [Fraction(math.comb(i + e - 1, e - 1) * k**i) for i in range(length)]
            nxt = [Fraction(0)] * length
            for i, c in enumerate(cur):
                if c == 0:
                    continue
                for j in range(length - i):
                    nxt[i + j] += c * geo[j]
            cur = nxt
        for i, c in enumerate(cur):
            out[i + self.t_power] = c
        return out


ZERO_FRAT = FactoredRat(0, ZERO_POLY, ())
ONE_FRAT = FactoredRat(0, ONE_POLY, ())


PoleTerm = tuple[int, int, Fraction]  # (k, exponent, coefficient)


@dataclass(frozen=True)
class PFDecomp:
    """Partial-fraction decomposition: poly_part + sum c/(1 - k t)^e."""

    poly_part: Poly
    pole_terms: tuple[PoleTerm, ...]

    def recombine(self) -> FactoredRat:
        total = FactoredRat.from_poly(self.poly_part)
        for k, e, c in self.pole_terms:
            total = total + FactoredRat.make(0, Poly.of(c), ((k, e),))
        return total


def partial_fractions(f: FactoredRat) -> PFDecomp:
    """Decompose f into a polynomial part plus c/(1-kt)^e pole terms.

    Works by repeated exact evaluation at each pole: the top coefficient
    for (1-kt)^e is A(1/k) divided by the other factors at t = 1/k, and
    subtracting it leaves a numerator exactly divisible by (1-kt).
    """
    if f.t_power < 0:
        raise NegativeTPowerError(f"t_power={f.t_power} < 0")
    if len(f.den) >= 3:
        raise TooManyPolesError(f"{len(f.den)} distinct pole locations")
    a = f.num.shift(f.t_power)
    exps = dict(f.den)
    terms: list[PoleTerm] = []
    for k in sorted(exps):
        while exps[k] > 0:
            other = ONE_POLY
            for kj, ej in exps.items():
                if kj != k:
                    other = other * lin_power(kj, ej)
            x = Fraction(1, k)
            c = a(x) / other(x)
            if c != 0:
                terms.append((k, exps[k], c))
                a = a - other.scale(c)
            q = a.div_linear(k)
            assert q is not None, "pole residue subtraction left inexact division"
            a = q
            exps[k] -= 1
    return PFDecomp(a, tuple(sorted(terms)))


def pf_integrate(d: PFDecomp) -> FactoredRat:
    """Exact antiderivative of a decomposition, anchored to vanish at t = 0.

    Term rule: int c/(1-kt)^j dt = (c/(k(j-1))) / (1-kt)^{j-1} for j >= 2.
    Exponent-1 terms are a hard error (they would integrate to logs).
    """
    for k, e, c in d.pole_terms:
        if e == 1 and c != 0:
            raise SimplePoleError(f"nonzero residue {c} at pole 1/{k}")
    const = Fraction(0)
    total = FactoredRat.from_poly(d.poly_part.integrate())
    for k, e, c in d.pole_terms:
        coeff = c / (k * (e - 1))
        total = total + FactoredRat.make(0, Poly.of(coeff), ((k, e - 1),))
        const -= coeff
    return total + FactoredRat.const(const)


def series_product(a: Sequence[Fraction], b: Sequence[Fraction], order: int) -> list[Fraction]:
    """Cauchy product of two truncated series, to the given order."""
    out = [Fraction(0)] * (order + 1)
    for i, ca in enumerate(a[: order + 1]):
        if ca == 0:
            continue
        for j, cb in enumerate(b[: order + 1 - i]):
            out[i + j] += ca * cb
    return out
