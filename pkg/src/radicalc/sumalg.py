"""Normalized rational linear combinations of radicals.

A RadicalSum is a rational part plus finitely many (atom, coefficient)
terms with distinct canonical atoms and nonzero rational coefficients,
kept in a deterministic order.  Normalization canonicalizes every input
radical and merges like atoms, so any cancellation between radicals that
denote the same real number happens here.  A normalized sum with at
least one surviving term is irrational; ``is_rational`` therefore simply
inspects the term map.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .arith import DEFAULT_FACTOR_BUDGET
from .errors import DomainError
from .radical import CanonicalRadical, RadicalAtom, atom_mul, atom_pow, reduce_radical


@dataclass(frozen=True, slots=True)
class RadicalSum:
    """rational_part + sum of coeff * atom over distinct atoms.

    Terms are sorted by the atom's (prime, exponent) sequence, so
    structural equality decides value equality and rendering is
    deterministic.
    """

    rational_part: Fraction
    terms: tuple[tuple[RadicalAtom, Fraction], ...]

    def __post_init__(self):
        seen = set()
        last = None
        for atom, coeff in self.terms:
            if coeff == 0:
                raise DomainError("zero coefficient stored in a radical sum")
            if atom.exps in seen:
                raise DomainError(f"duplicate atom in a radical sum: {atom}")
            if last is not None and atom.exps < last:
                raise DomainError("radical sum terms out of canonical order")
            seen.add(atom.exps)
            last = atom.exps

    def terms_dict(self) -> dict[RadicalAtom, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return self.rational_part == 0 and not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return str(self.rational_part)
        pieces: list[str] = []
        if self.rational_part != 0:
            pieces.append(str(self.rational_part))
        for atom, coeff in self.terms:
            mag = abs(coeff)
            body = str(atom) if mag == 1 else f"{mag}*{atom}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)


ZERO_SUM = RadicalSum(Fraction(0), ())


def _build(rational: Fraction, terms: dict[RadicalAtom, Fraction]) -> RadicalSum:
    ordered = tuple(
        (atom, coeff)
        for atom, coeff in sorted(terms.items(), key=lambda kv: kv[0].exps)
        if coeff != 0
    )
    return RadicalSum(rational, ordered)


def _accumulate(
    rational: Fraction,
    terms: dict[RadicalAtom, Fraction],
    coeff: Fraction,
    canon: CanonicalRadical,
) -> Fraction:
    """Add coeff * canon into the accumulators; returns the new rational part."""
    total = coeff * canon.coeff
    if total == 0:
        return rational
    if canon.atom is None:
        return rational + total
    terms[canon.atom] = terms.get(canon.atom, Fraction(0)) + total
    return rational


def normalize_sum(
    entries: Iterable[tuple[Fraction | int, Fraction | int, int]],
    factor_budget: int = DEFAULT_FACTOR_BUDGET,
) -> RadicalSum:
    """Normalize a list of (coefficient, radicand, index) radical terms.

    Each radicand**(1/index) is canonicalized, its coefficient picks up
    the canonical coefficient, like atoms merge by addition, and purely
    rational contributions migrate to the rational part.  The value is
    preserved exactly.

    >>> normalize_sum([(3, 12, 2), (-5, 3, 2), (-1, 9, 4)]).is_zero()
    True
    """
    rational = Fraction(0)
    terms: dict[RadicalAtom, Fraction] = {}
    for coeff, radicand, index in entries:
        canon = reduce_radical(Fraction(radicand), index, factor_budget)
        rational = _accumulate(rational, terms, Fraction(coeff), canon)
    return _build(rational, terms)


def is_rational(s: RadicalSum) -> Optional[Fraction]:
    """The exact rational value of s, or None when s is irrational.

    A normalized sum with surviving radical terms cannot equal any p/q;
    the None verdict is exact, not numeric.
    """
    return s.rational_part if not s.terms else None


def sum_add(a: RadicalSum, b: RadicalSum) -> RadicalSum:
    terms = dict(a.terms)
    for atom, coeff in b.terms:
        terms[atom] = terms.get(atom, Fraction(0)) + coeff
    return _build(a.rational_part + b.rational_part, terms)


def sum_neg(a: RadicalSum) -> RadicalSum:
    return RadicalSum(-a.rational_part, tuple((atom, -c) for atom, c in a.terms))


def sum_scale(a: RadicalSum, scalar: Fraction) -> RadicalSum:
    if scalar == 0:
        return ZERO_SUM
    return RadicalSum(a.rational_part * scalar, tuple((atom, c * scalar) for atom, c in a.terms))


def sum_from_rational(q: Fraction) -> RadicalSum:
    return RadicalSum(Fraction(q), ())


def sum_from_canonical(coeff: Fraction, canon: CanonicalRadical) -> RadicalSum:
    terms: dict[RadicalAtom, Fraction] = {}
    rational = _accumulate(Fraction(0), terms, coeff, canon)
    return _build(rational, terms)


def sum_mul(a: RadicalSum, b: RadicalSum) -> RadicalSum:
    """Exact product, distributing atom products over both term lists."""
    rational = a.rational_part * b.rational_part
    terms: dict[RadicalAtom, Fraction] = {}
    if a.rational_part:
        for atom, coeff in b.terms:
            terms[atom] = terms.get(atom, Fraction(0)) + a.rational_part * coeff
    if b.rational_part:
        for atom, coeff in a.terms:
            terms[atom] = terms.get(atom, Fraction(0)) + b.rational_part * coeff
    for atom_a, ca in a.terms:
        xa = CanonicalRadical(Fraction(1), atom_a)
        for atom_b, cb in b.terms:
            prod = atom_mul(xa, CanonicalRadical(Fraction(1), atom_b))
            rational_delta = _accumulate(Fraction(0), terms, ca * cb, prod)
            rational += rational_delta
    return _build(rational, terms)


def lemma2_terms(
    b: Fraction | int,
    m: int,
    coeffs: Iterable[Fraction | int],
    factor_budget: int = DEFAULT_FACTOR_BUDGET,
) -> RadicalSum:
    """The normalized sum l_0 + l_1 * x + ... + l_t * x**t for
    x = b**(1/m), where x must canonicalize to an atom of order exactly
    m (the irreducible case) and 1 <= t < m with l_t != 0.
    """
    ls = [Fraction(c) for c in coeffs]
    t = len(ls) - 1
    canon = reduce_radical(Fraction(b), m, factor_budget)
    if canon.atom is None or canon.atom.order != m:
        raise DomainError(
            f"{b}^(1/{m}) is not an irreducible radical of order {m} "
            f"(canonical form {canon})"
        )
    if t < 1 or t >= m:
        raise DomainError(f"degree t={t} must satisfy 1 <= t < m={m}")
    if ls[t] == 0:
        raise DomainError("leading coefficient must be nonzero")
    rational = Fraction(0)
    terms: dict[RadicalAtom, Fraction] = {}
    for j, lj in enumerate(ls):
        rational = _accumulate(rational, terms, lj, atom_pow(canon, j))
    return _build(rational, terms)


def lemma2_check(
    b: Fraction | int,
    m: int,
    coeffs: Iterable[Fraction | int],
    factor_budget: int = DEFAULT_FACTOR_BUDGET,
) -> Optional[Fraction]:
    """Rationality verdict for l_0 + l_1*b**(1/m) + ... + l_t*b**(t/m).

    For an irreducible radical of order m and 1 <= t < m with l_t != 0
    this is provably always None (irrational); a rational return value
    would indicate a kernel bug, and tests treat it as a failure.
    """
    return is_rational(lemma2_terms(b, m, coeffs, factor_budget))
