"""Canonical form for real radicals of positive rationals.

A radical b**(1/m) is normalized into ``coeff * atom`` where coeff is a
positive rational and the atom is a map prime -> fractional exponent in
(0, 1), each in lowest terms.  The atom is the canonical representative
of an irreducible irrational radical: two radicals are equal as real
numbers exactly when their canonical forms are structurally equal.  The
atom's order (lcm of the exponent denominators) is the smallest index
the radical can be written with.

Denominators inside the radicand are cleared first -- b = f/s becomes
(1/s) * (f * s**(m-1)) ** (1/m) -- so atoms only ever carry positive
prime bases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .arith import DEFAULT_FACTOR_BUDGET, factorize, is_prime
from .errors import DomainError


@dataclass(frozen=True, slots=True)
class RadicalAtom:
    """Irrational part of a canonical radical.

    ``exps`` holds (prime, exponent) pairs with primes strictly
    ascending and every exponent a fraction strictly between 0 and 1.
    The represented value is the product of p**e over the pairs.
    """

    exps: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        if not self.exps:
            raise DomainError("atom must be nonempty (rational values carry no atom)")
        last = 1
        for p, e in self.exps:
            if p <= last or not is_prime(p):
                raise DomainError(f"atom bases must be strictly ascending primes, got {p}")
            if not (0 < e < 1):
                raise DomainError(f"atom exponent {e} for base {p} not in (0, 1)")
            last = p

    @property
    def order(self) -> int:
        """Smallest m such that the atom is an m-th root of a rational."""
        return lcm(*(e.denominator for _, e in self.exps))

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.exps)

    def __str__(self) -> str:
        return "*".join(f"{p}^({e})" for p, e in self.exps)


@dataclass(frozen=True, slots=True)
class CanonicalRadical:
    """A positive real of the form coeff * atom, atom optional.

    The value is rational iff the atom is absent.
    """

    coeff: Fraction
    atom: RadicalAtom | None = field(default=None)

    def __post_init__(self):
        if self.coeff <= 0:
            raise DomainError(f"canonical radical coefficient must be positive: {self.coeff}")

    def is_rational(self) -> bool:
        return self.atom is None

    def __str__(self) -> str:
        if self.atom is None:
            return str(self.coeff)
        if self.coeff == 1:
            return str(self.atom)
        return f"{self.coeff}*{self.atom}"


def _assemble(coeff: Fraction, exps: dict[int, Fraction]) -> CanonicalRadical:
    """Build a canonical radical from a coefficient and a raw exponent
    map, folding integer exponent parts into the coefficient.
    """
    kept: list[tuple[int, Fraction]] = []
    for p in sorted(exps):
        e = exps[p]
        whole = e.numerator // e.denominator
        if whole:
            coeff *= Fraction(p**whole) if whole > 0 else Fraction(1, p**-whole)
            e -= whole
        if e:
            kept.append((p, e))
    atom = RadicalAtom(tuple(kept)) if kept else None
    return CanonicalRadical(coeff, atom)


def reduce_radical(
    b: Fraction | int,
    m: int,
    factor_budget: int = DEFAULT_FACTOR_BUDGET,
) -> CanonicalRadical:
    """Canonicalize b**(1/m) for a positive rational b and index m >= 1.

    Writes b = f/s in lowest terms, clears the denominator via
    b**(1/m) = (1/s) * (f * s**(m-1))**(1/m), factors the integral
    radicand, and splits each prime exponent d into d // m (folded into
    the coefficient) and the reduced remainder (kept in the atom).  The
    atom, when present, cannot be rewritten with any smaller index.

    >>> str(reduce_radical(Fraction(9), 4))
    '3^(1/2)'
    >>> str(reduce_radical(Fraction(81, 5), 3))
    '3/5*3^(1/3)*5^(2/3)'
    """
    b = Fraction(b)
    if b <= 0:
        raise DomainError(f"radicand must be positive: {b}")
    if m < 1:
        raise DomainError(f"radical index must be >= 1: {m}")
    f, s = b.numerator, b.denominator
    radicand = f * s ** (m - 1)
    coeff = Fraction(1, s)
    exps = {p: Fraction(d, m) for p, d in factorize(radicand, factor_budget).items()}
    return _assemble(coeff, exps)


def atom_mul(x: CanonicalRadical, y: CanonicalRadical) -> CanonicalRadical:
    """Exact product of two canonical radicals.

    Exponents add mod 1; integer overflow multiplies into the
    coefficient, so the result is canonical again.
    """
    if x.atom is None:
        if y.atom is None:
            return CanonicalRadical(x.coeff * y.coeff)
        return CanonicalRadical(x.coeff * y.coeff, y.atom)
    if y.atom is None:
        return CanonicalRadical(x.coeff * y.coeff, x.atom)
    exps = dict(x.atom.exps)
    for p, e in y.atom.exps:
        prior = exps.get(p)
        exps[p] = e if prior is None else prior + e
    return _assemble(x.coeff * y.coeff, exps)


def atom_pow(x: CanonicalRadical, k: int) -> CanonicalRadical:
    """Exact k-th power of a canonical radical, k >= 0; x**0 is 1."""
    if k < 0:
        raise DomainError(f"power must be nonnegative: {k}")
    if k == 0:
        return CanonicalRadical(Fraction(1))
    if x.atom is None:
        return CanonicalRadical(x.coeff**k)
    return _assemble(x.coeff**k, {p: e * k for p, e in x.atom.exps})
