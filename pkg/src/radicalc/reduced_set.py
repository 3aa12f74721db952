"""Reduced sets of prime-base radicals and the monomial basis they span.

A reduced set is a list of generators q_k**(1/eta_k) (distinct primes,
orders >= 2) such that no nonzero exponent tuple (e_1, ..., e_k) with
0 <= e_j < eta_j makes the product of generator powers rational.  For
distinct prime bases this holds analytically; ``verify_reduced_set``
re-checks it by exhaustive enumeration so the two routes can be played
against each other in tests.

``construct_reduced_set`` maps a normalized radical sum to the reduced
set it lives over: one generator per prime appearing in any atom, with
order the lcm of that prime's exponent denominators across the sum.
``express_in_basis`` then rewrites the sum with integer exponents over
those generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm, prod
from typing import Iterable, Optional

from .arith import DEFAULT_FACTOR_BUDGET, format_rational
from .errors import BasisMismatch, BudgetExceeded, DomainError
from .radical import CanonicalRadical, atom_mul, atom_pow, reduce_radical
from .sumalg import RadicalSum

#: Default cap on the number of exponent tuples verify_reduced_set will
#: enumerate.
DEFAULT_TUPLE_BUDGET = 10**6


@dataclass(frozen=True, slots=True)
class ReducedSet:
    """Generators (prime, order) with primes strictly ascending."""

    generators: tuple[tuple[int, int], ...]

    def __post_init__(self):
        last = 1
        for q, eta in self.generators:
            if q <= last:
                raise DomainError("reduced-set primes must be strictly ascending")
            if eta < 2:
                raise DomainError(f"reduced-set order must be >= 2, got {eta}")
            last = q

    def primes(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.generators)

    def __str__(self) -> str:
        if not self.generators:
            return "{ }"
        inner = ", ".join(f"{q}^(1/{eta})" for q, eta in self.generators)
        return "{ " + inner + " }"


@dataclass(frozen=True, slots=True)
class MonomialExpression:
    """A sum rewritten over a reduced-set basis.

    Each monomial key is an exponent tuple (one entry per generator,
    0 <= e_j < eta_j, not all zero) standing for the product of
    q_j**(e_j/eta_j); coefficients are nonzero rationals.
    """

    basis: ReducedSet
    rational_part: Fraction
    monomials: tuple[tuple[tuple[int, ...], Fraction], ...]

    def __post_init__(self):
        k = len(self.basis.generators)
        for eps, coeff in self.monomials:
            if len(eps) != k:
                raise DomainError("monomial tuple length does not match basis size")
            if not any(eps):
                raise DomainError("zero exponent tuple stored as a monomial")
            if coeff == 0:
                raise DomainError("zero coefficient stored in a monomial expression")
            for e, (_, eta) in zip(eps, self.basis.generators):
                if not 0 <= e < eta:
                    raise DomainError(f"monomial exponent {e} out of range for order {eta}")

    def monomials_dict(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self.monomials)


def construct_reduced_set(s: RadicalSum) -> ReducedSet:
    """The reduced set spanning a normalized sum: for every prime in any
    atom, the order is the lcm of that prime's exponent denominators.
    An empty or purely rational sum yields the empty set.
    """
    orders: dict[int, int] = {}
    for atom, _ in s.terms:
        for p, e in atom.exps:
            orders[p] = lcm(orders.get(p, 1), e.denominator)
    return ReducedSet(tuple(sorted((p, eta) for p, eta in orders.items() if eta >= 2)))


def express_in_basis(s: RadicalSum, basis: ReducedSet) -> MonomialExpression:
    """Rewrite each atom of s as an integer-exponent monomial over the
    basis generators.  Raises BasisMismatch when an atom uses a prime
    the basis lacks or an exponent whose denominator does not divide
    the generator order (the basis was not built for this sum).
    """
    index = {q: (j, eta) for j, (q, eta) in enumerate(basis.generators)}
    k = len(basis.generators)
    monomials: dict[tuple[int, ...], Fraction] = {}
    for atom, coeff in s.terms:
        eps = [0] * k
        for p, e in atom.exps:
            if p not in index:
                raise BasisMismatch(f"prime {p} does not appear in the basis {basis}")
            j, eta = index[p]
            scaled = e * eta
            if scaled.denominator != 1:
                raise BasisMismatch(
                    f"exponent {e} of prime {p} is not expressible with order {eta}"
                )
            eps[j] = int(scaled)
        key = tuple(eps)
        monomials[key] = monomials.get(key, Fraction(0)) + coeff
    ordered = tuple((eps, c) for eps, c in sorted(monomials.items()) if c != 0)
    return MonomialExpression(basis, s.rational_part, ordered)


@dataclass(frozen=True, slots=True)
class VerifyResult:
    """Outcome of the Definition-2 brute force.

    When the candidates fail, ``counterexample`` is the lexicographically
    first nonzero tuple whose product is rational and ``product`` is that
    rational value.
    """

    is_reduced: bool
    orders: tuple[int, ...]
    tuples_checked: int
    counterexample: Optional[tuple[int, ...]] = None
    product: Optional[Fraction] = None

    def __str__(self) -> str:
        if self.is_reduced:
            return f"reduced-set ({self.tuples_checked} tuples checked)"
        eps = ",".join(str(e) for e in self.counterexample)
        return f"not-reduced ε=({eps}) product={format_rational(self.product)}"


def verify_reduced_set(
    candidates: Iterable[tuple[Fraction | int, int]],
    tuple_budget: int = DEFAULT_TUPLE_BUDGET,
    factor_budget: int = DEFAULT_FACTOR_BUDGET,
) -> VerifyResult:
    """Exhaustively test Definition 2 on a list of (radicand, index)
    candidate radicals.

    Candidates are canonicalized first; one that turns out rational is
    rejected with DomainError.  Every nonzero tuple (e_1, ..., e_k) with
    0 <= e_i < m_i (m_i the canonical order) is enumerated in
    lexicographic order and the product of powers computed exactly; the
    first rational product, if any, is reported as the counterexample.
    """
    canons: list[CanonicalRadical] = []
    for b, m in candidates:
        canon = reduce_radical(Fraction(b), m, factor_budget)
        if canon.atom is None:
            raise DomainError(
                f"candidate {b}^(1/{m}) is rational ({canon.coeff}); "
                "a reduced set contains only irrational radicals"
            )
        canons.append(canon)
    if not canons:
        raise DomainError("empty candidate list")
    orders = tuple(c.atom.order for c in canons)
    total = prod(orders)
    if total > tuple_budget:
        raise BudgetExceeded(
            f"{total} exponent tuples exceed the budget of {tuple_budget}"
        )
    pows = [[atom_pow(c, e) for e in range(m)] for c, m in zip(canons, orders)]
    one = CanonicalRadical(Fraction(1))
    k = len(canons)
    eps = [0] * k
    checked = 0
    hit: Optional[tuple[tuple[int, ...], Fraction]] = None

    def search(i: int, partial: CanonicalRadical, any_nonzero: bool) -> bool:
        nonlocal checked, hit
        if i == k:
            if any_nonzero:
                checked += 1
                if partial.atom is None:
                    hit = (tuple(eps), partial.coeff)
                    return True
            return False
        for e in range(orders[i]):
            eps[i] = e
            nxt = partial if e == 0 else atom_mul(partial, pows[i][e])
            if search(i + 1, nxt, any_nonzero or e > 0):
                return True
        return False

    if search(0, one, False):
        return VerifyResult(False, orders, checked, hit[0], hit[1])
    return VerifyResult(True, orders, checked)


def reduced_set_to_json(rs: ReducedSet) -> list[list[int]]:
    return [[q, eta] for q, eta in rs.generators]


def reduced_set_from_json(data: list[list[int]]) -> ReducedSet:
    return ReducedSet(tuple((int(q), int(eta)) for q, eta in data))
