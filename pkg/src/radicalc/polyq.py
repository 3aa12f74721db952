"""Dense univariate polynomials over the rationals.

Coefficients are stored ascending with no trailing zeros; the empty
tuple is the zero polynomial (degree None).  The gcd is computed by the
Euclidean algorithm with every remainder rescaled to monic form, which
keeps coefficient growth tame at desk scale.  ``minimal_polynomial``
covers the one algebraic-number case this kernel needs: a product of
radicals canonicalizes to coeff * atom, and X**s - (value**s) with s the
atom order is its minimal polynomial over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .arith import DEFAULT_FACTOR_BUDGET
from .errors import DomainError
from .radical import CanonicalRadical, atom_mul, atom_pow, reduce_radical


@dataclass(frozen=True, slots=True)
class PolyQ:
    """Polynomial sum of coeffs[i] * X**i; coeffs[-1] != 0 when nonzero."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise DomainError("polynomial has a trailing zero coefficient")

    @property
    def degree(self) -> Optional[int]:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces: list[str] = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                x = "X" if i == 1 else f"X^{i}"
                body = x if mag == 1 else f"{mag}*{x}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)


def poly(coeffs: Iterable[Fraction | int]) -> PolyQ:
    """Build a polynomial from ascending coefficients, trimming zeros."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return PolyQ(tuple(cs))


ZERO = PolyQ(())
ONE = PolyQ((Fraction(1),))


def poly_add(f: PolyQ, g: PolyQ) -> PolyQ:
    n = max(len(f.coeffs), len(g.coeffs))
    out = [Fraction(0)] * n
    for i, c in enumerate(f.coeffs):
        out[i] += c
    for i, c in enumerate(g.coeffs):
        out[i] += c
    return poly(out)


def poly_neg(f: PolyQ) -> PolyQ:
    return PolyQ(tuple(-c for c in f.coeffs))


def poly_sub(f: PolyQ, g: PolyQ) -> PolyQ:
    return poly_add(f, poly_neg(g))


def poly_mul(f: PolyQ, g: PolyQ) -> PolyQ:
    if f.is_zero() or g.is_zero():
        return ZERO
    out = [Fraction(0)] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(g.coeffs):
            out[i + j] += a * b
    return poly(out)


def poly_divmod(f: PolyQ, g: PolyQ) -> tuple[PolyQ, PolyQ]:
    """Exact quotient and remainder over the rationals; g must be nonzero."""
    if g.is_zero():
        raise DomainError("polynomial division by zero")
    rem = list(f.coeffs)
    dg = len(g.coeffs) - 1
    lead = g.coeffs[-1]
    if len(rem) <= dg:
        return ZERO, f
    quot = [Fraction(0)] * (len(rem) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        q = c / lead
        quot[i - dg] = q
        for j, b in enumerate(g.coeffs):
            rem[i - dg + j] -= q * b
    return poly(quot), poly(rem)


def monic(f: PolyQ) -> PolyQ:
    if f.is_zero():
        return ZERO
    lead = f.coeffs[-1]
    if lead == 1:
        return f
    return PolyQ(tuple(c / lead for c in f.coeffs))


def poly_gcd(f: PolyQ, g: PolyQ) -> PolyQ:
    """Monic greatest common divisor by the Euclidean algorithm.

    >>> str(poly_gcd(poly([-2, 0, 1]), poly([-4, 0, 0, 0, 1])))
    'X^2 - 2'
    """
    if f.is_zero() and g.is_zero():
        raise DomainError("gcd of two zero polynomials is undefined")
    a, b = f, g
    while not b.is_zero():
        _, r = poly_divmod(a, b)
        a, b = b, monic(r)
    return monic(a)


def minimal_polynomial(
    factors: Iterable[tuple[Fraction | int, int, int]],
    factor_budget: int = DEFAULT_FACTOR_BUDGET,
) -> PolyQ:
    """Minimal polynomial over the rationals of a product of radicals.

    ``factors`` lists (radicand, index, power) triples; the product
    c = prod of radicand**(power/index) canonicalizes to coeff * atom.
    If the atom vanishes, c is rational and the answer is X - c.
    Otherwise s, the atom order, is the least positive integer with
    c**s rational, and the answer is X**s - c**s (degree s).

    >>> str(minimal_polynomial([(2, 2, 1)]))
    'X^2 - 2'
    >>> str(minimal_polynomial([(2, 4, 1), (3, 8, 1)]))
    'X^8 - 12'
    """
    c = CanonicalRadical(Fraction(1))
    for radicand, index, power in factors:
        if power < 0:
            raise DomainError(f"factor power must be nonnegative: {power}")
        base = reduce_radical(Fraction(radicand), index, factor_budget)
        c = atom_mul(c, atom_pow(base, power))
    if c.atom is None:
        return poly([-c.coeff, 1])
    s = c.atom.order
    k_radical = atom_pow(c, s)
    assert k_radical.atom is None  # s is the lcm of exponent denominators
    coeffs = [Fraction(0)] * (s + 1)
    coeffs[0] = -k_radical.coeff
    coeffs[s] = Fraction(1)
    return PolyQ(tuple(coeffs))
